#include "brute.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tokentw;

namespace {

std::vector<std::vector<int>> members_of(const TokenGraph& tg, const std::vector<std::size_t>& bag) {
    std::vector<std::vector<int>> out;
    for (auto i : bag) out.push_back(tg.vertex(i).members);
    std::sort(out.begin(), out.end());
    return out;
}

// Tree decomposition from an elimination ordering: bag of v is v plus its
// later neighbours in the filled graph, attached to the earliest such neighbour.
TreeDecomposition from_elimination(const Graph& g, const std::vector<std::size_t>& order) {
    const std::size_t n = g.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::set<std::size_t>> adj(n);
    for (std::size_t v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) adj[v].insert(w);
    TreeDecomposition d;
    std::vector<Edge> tree_edges;
    std::vector<int> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = order[i];
        std::vector<std::size_t> later;
        for (auto w : adj[v])
            if (pos[w] > i) later.push_back(w);
        for (auto a : later)
            for (auto b : later)
                if (a != b) adj[a].insert(b);
        std::vector<std::size_t> bag = later;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        d.bags[static_cast<int>(i)] = bag;
        labels.push_back(static_cast<int>(i));
        if (!later.empty()) {
            std::size_t parent = n;
            for (auto w : later) parent = std::min(parent, pos[w]);
            tree_edges.push_back({static_cast<int>(i), static_cast<int>(parent)});
        } else if (i + 1 < n) {
            tree_edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
        }
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    d.tree = Graph(labels, tree_edges);
    return d;
}

} // namespace

TEST(StarDecomposition, MatchesFourTwoPicture) {
    const auto d = star_decomposition(4, 2);
    const auto host = build_host({Family::Star, 4, 2});
    EXPECT_EQ(d.bags.size(), 7u);
    EXPECT_EQ(width(d), 3);
    // Center bag: {0,a} for a in [4].
    std::vector<std::vector<int>> center{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    std::vector<std::vector<std::vector<int>>> leaves;
    bool found_center = false;
    for (const auto& [node, bag] : d.bags) {
        const auto m = members_of(host, bag);
        if (m == center) found_center = true;
        else leaves.push_back(m);
    }
    EXPECT_TRUE(found_center);
    ASSERT_EQ(leaves.size(), 6u);
    for (const auto& leaf : leaves) {
        ASSERT_EQ(leaf.size(), 3u);
        const auto& a = leaf.back();  // the 2-subset of [4] sorts last
        EXPECT_EQ(leaf[0], (std::vector<int>{0, a[0]}));
        EXPECT_EQ(leaf[1], (std::vector<int>{0, a[1]}));
    }
    EXPECT_TRUE(validate(d, host).ok());
    EXPECT_TRUE(brute::decomposition_valid(d, host.graph()));
}

TEST(StarDecomposition, ValidAcrossRange) {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= std::min(4, n - 1); ++k) {
            const auto d = star_decomposition(n, k);
            const auto host = build_host({Family::Star, n, k});
            EXPECT_TRUE(validate(d, host).ok()) << n << "," << k;
            EXPECT_TRUE(brute::decomposition_valid(d, host.graph())) << n << "," << k;
            const std::int64_t expected = k == 1 ? 1 : std::max<std::int64_t>(brute::subsets(brute::range(1, n), k - 1).size(), k + 1) - 1;
            EXPECT_EQ(width(d), expected) << n << "," << k;
        }
}

TEST(Validate, ReportsWitnesses) {
    const auto host = build_host({Family::Star, 4, 2});
    auto d = star_decomposition(4, 2);

    // Drop a leaf: its own 2-subset of [4] becomes uncovered.
    auto missing = d;
    int leaf = -1;
    for (const auto& [node, bag] : missing.bags)
        if (bag.size() == 3) {
            leaf = node;
            break;
        }
    ASSERT_GE(leaf, 0);
    missing.bags[leaf] = {missing.bags[leaf].front()};
    const auto r1 = validate(missing, host);
    EXPECT_FALSE(r1.ok());
    EXPECT_FALSE(r1.coverage_ok && r1.edge_ok);
    EXPECT_FALSE(brute::decomposition_valid(missing, host.graph()));

    // Put the same vertex into two leaves but not the center between them.
    auto broken = d;
    std::vector<int> leaves;
    for (const auto& [node, bag] : broken.bags)
        if (bag.size() == 3) leaves.push_back(node);
    const auto extra = broken.bags[leaves[0]].back();
    auto& target = broken.bags[leaves.back()];
    if (!std::count(target.begin(), target.end(), extra)) {
        target.push_back(extra);
        std::sort(target.begin(), target.end());
    }
    const auto r2 = validate(broken, host);
    EXPECT_FALSE(r2.connectivity_ok);
    ASSERT_TRUE(r2.broken_trace.has_value());
    EXPECT_EQ(r2.broken_trace->vertex, extra);
    EXPECT_FALSE(brute::decomposition_valid(broken, host.graph()));

    auto out_of_range = d;
    out_of_range.bags.begin()->second.push_back(999);
    EXPECT_THROW(validate(out_of_range, host), InvalidParameter);
}

TEST(F2KnPath, BagSizesAndWidths) {
    const std::vector<std::int64_t> widths{4, 7, 10, 14, 18, 23, 28, 34, 40};
    for (int n = 4; n <= 12; ++n) {
        const auto d = f2kn_path_decomposition(n);
        const auto host = build_host({Family::Complete, n, 2});
        EXPECT_TRUE(d.is_path);
        for (const auto& [l, bag] : d.bags)
            EXPECT_EQ(static_cast<std::int64_t>(bag.size()), (l - 1) * (n - l) + n - 1) << n << " l=" << l;
        EXPECT_EQ(width(d), widths[n - 4]);
        EXPECT_TRUE(validate(d, host).ok());
        EXPECT_TRUE(brute::decomposition_valid(d, host.graph()));
    }
}

TEST(LexDecomposition, WidthExamples) {
    EXPECT_EQ(width(fkkn_lex_decomposition(6, 3)), 13);
    EXPECT_EQ(width(fkkn_lex_decomposition(7, 3)), 22);
    std::vector<int> x{2, 4};
    EXPECT_EQ(lex_bag(6, 3, x).size(), 14u);
    EXPECT_EQ(brute::bag_count(6, 3, x), 14);
}

TEST(LexDecomposition, ValidForSmallParameters) {
    for (int n = 3; n <= 9; ++n)
        for (int k = 2; k <= std::min(4, n - 1); ++k) {
            const auto d = fkkn_lex_decomposition(n, k);
            const auto host = build_host({Family::Complete, n, k});
            EXPECT_TRUE(validate(d, host).ok()) << n << "," << k;
            EXPECT_TRUE(brute::decomposition_valid(d, host.graph())) << n << "," << k;
        }
    EXPECT_THROW(fkkn_lex_decomposition(20, 10, 1000), ResourceLimit);
}

TEST(LexDecomposition, KTwoMatchesF2KnBags) {
    for (int n = 4; n <= 10; ++n) {
        const auto lex = fkkn_lex_decomposition(n, 2);
        const auto path = f2kn_path_decomposition(n);
        // Lex node l-1 holds X = (l), l = 1..n-1; V_(l) = V_l.
        for (int l = 1; l <= n - 1; ++l) EXPECT_EQ(lex.bags.at(l - 1), path.bags.at(l)) << n << " " << l;
    }
}

TEST(LexBag, AgreesWithBruteCount) {
    for (int n = 3; n <= 9; ++n)
        for (int k = 2; k <= std::min(4, n - 1); ++k)
            for (const auto& x : lex_path_nodes(n, k)) {
                std::vector<int> xs(x.members().begin(), x.members().end());
                const auto bag = lex_bag(n, k, xs);
                EXPECT_EQ(static_cast<std::int64_t>(bag.size()), brute::bag_count(n, k, xs));
                EXPECT_EQ(bag_size_formula(x, n, k), brute::bag_count(n, k, xs));
            }
}

TEST(BagSizeFormula, KTwoIdentity) {
    for (int n = 3; n <= 12; ++n)
        for (int l = 1; l <= n - 1; ++l)
            EXPECT_EQ(bag_size_formula(BagIndex({l}, n), n, 2), (l - 1) * (n - l) + n - 1);
}

TEST(BagIndex, RejectsInvalidTuples) {
    EXPECT_THROW(BagIndex({2, 2}, 5), InvalidParameter);
    EXPECT_THROW(BagIndex({3, 2}, 5), InvalidParameter);
    EXPECT_THROW(BagIndex({1, 5}, 5), InvalidParameter);
    EXPECT_THROW(BagIndex({0, 2}, 5), InvalidParameter);
    EXPECT_NO_THROW(BagIndex({1, 4}, 5));
}

TEST(MaxBag, MatchesExhaustiveAndBound) {
    for (int n = 3; n <= 12; ++n)
        for (int k = 2; k <= std::min(4, n - 1); ++k) {
            const auto fast = max_bag(n, k);
            const auto slow = max_bag_exhaustive(n, k);
            EXPECT_EQ(fast.size, slow.size) << n << "," << k;
            EXPECT_EQ(upper_bound_tw_kn(n, k), slow.size - 1) << n << "," << k;
            const auto lemma = check_maximizer_lemmas(slow.index, n, k);
            EXPECT_TRUE(lemma.first_entry_ok && lemma.tail_ok) << n << "," << k;
        }
}

TEST(UpperBound, Examples) {
    EXPECT_EQ(upper_bound_tw_kn(6, 3), 13);
    EXPECT_EQ(upper_bound_tw_kn(5, 2), 7);
    EXPECT_EQ(upper_bound_tw_kn(7, 3), 22);
    const auto e = evaluate_tw_kn_bound(5, 4);
    EXPECT_EQ(e.literal_bound, 5);
    EXPECT_EQ(e.bound, 4);
    EXPECT_FALSE(e.ceil_branch.index_valid);
}

TEST(Validate, RandomEliminationDecompositions) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 5 + trial % 5;
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.4);
        for (int a = 0; a < static_cast<int>(n); ++a)
            for (int b = a + 1; b < static_cast<int>(n); ++b)
                if (coin(rng)) edges.push_back({a, b});
        const Graph g(labels, edges);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto d = from_elimination(g, order);
        EXPECT_TRUE(validate(d, g).ok());
        EXPECT_TRUE(brute::decomposition_valid(d, g));
        EXPECT_EQ(width(d), elimination_width(g, order));
    }
}
