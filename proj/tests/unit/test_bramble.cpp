#include "brute.hpp"
#include "bramble.hpp"
#include "error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tokentw;

TEST(StarBramble, ShapeAndOrder) {
    const auto host = build_host({Family::Star, 3, 2});
    const auto b = star_bramble(3);
    ASSERT_EQ(b.sets.size(), 3u);
    // B_3 = {{0,3},{1,3},{2,3}}
    bool found = false;
    for (const auto& s : b.sets) {
        std::vector<std::vector<int>> m;
        for (auto i : s) m.push_back(host.vertex(i).members);
        if (m == std::vector<std::vector<int>>{{0, 3}, {1, 3}, {2, 3}}) found = true;
    }
    EXPECT_TRUE(found);
    // Sets are pairwise disjoint.
    for (std::size_t i = 0; i < b.sets.size(); ++i)
        for (std::size_t j = i + 1; j < b.sets.size(); ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(b.sets[i].begin(), b.sets[i].end(), b.sets[j].begin(), b.sets[j].end(),
                                  std::back_inserter(common));
            EXPECT_TRUE(common.empty());
        }
    for (int n = 3; n <= 6; ++n) {
        const auto br = star_bramble(n);
        EXPECT_TRUE(validate_bramble(br, build_host({Family::Star, n, 2}).graph()).ok());
        EXPECT_EQ(min_hitting_set(br).size, static_cast<std::size_t>(n));
        EXPECT_EQ(brute::hitting_set(br.sets), static_cast<std::size_t>(n));
    }
}

TEST(CompleteBramble, ShapeAndOrder) {
    const auto b4 = kn_bramble(4);
    EXPECT_EQ(b4.sets.size(), 6u);
    EXPECT_EQ(min_hitting_set(b4).size, 5u);
    EXPECT_EQ(brute::hitting_set(b4.sets), 5u);

    const auto b5 = kn_bramble(5);
    EXPECT_EQ(b5.sets.size(), 30u);
    for (const auto& s : b5.sets) EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(min_hitting_set(b5).size, 8u);
    EXPECT_EQ(brute::hitting_set(b5.sets), 8u);

    for (int n = 4; n <= 6; ++n)
        EXPECT_TRUE(validate_bramble(kn_bramble(n), build_host({Family::Complete, n, 2}).graph()).ok());
    EXPECT_THROW(kn_bramble(9, 10), ResourceLimit);
}

TEST(ValidateBramble, ReportsFailures) {
    const auto host = build_host({Family::Path, 5, 2});
    const auto rank = [&](int a, int b) { return host.index_of(TokenVertex{{a, b}}); };
    Bramble disconnected;
    disconnected.sets = {{rank(1, 2), rank(4, 5)}};
    disconnected.normalize();
    const auto r1 = validate_bramble(disconnected, host.graph());
    EXPECT_FALSE(r1.sets_connected);
    EXPECT_EQ(r1.disconnected_set, 0u);

    Bramble apart;
    apart.sets = {{rank(1, 2)}, {rank(4, 5)}};
    apart.normalize();
    const auto r2 = validate_bramble(apart, host.graph());
    EXPECT_TRUE(r2.sets_connected);
    EXPECT_FALSE(r2.pairs_touch);

    Bramble touching;
    touching.sets = {{rank(1, 2)}, {rank(1, 3)}};
    touching.normalize();
    EXPECT_TRUE(validate_bramble(touching, host.graph()).ok());

    Bramble bad;
    bad.sets = {{999}};
    EXPECT_THROW(validate_bramble(bad, host.graph()), InvalidParameter);
}

TEST(HittingSet, AgreesWithBruteForceOnRandomFamilies) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> vertex(0, 11), size(1, 4), count(1, 9);
    for (int trial = 0; trial < 150; ++trial) {
        Bramble b;
        const auto m = count(rng);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::size_t> s;
            const auto sz = size(rng);
            for (std::size_t j = 0; j < sz; ++j) s.push_back(vertex(rng));
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            b.sets.push_back(s);
        }
        b.normalize();
        const auto h = min_hitting_set(b);
        EXPECT_EQ(h.size, brute::hitting_set(b.sets));
        EXPECT_EQ(h.witness.size(), h.size);
        for (const auto& s : b.sets)
            EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](std::size_t v) {
                return std::binary_search(h.witness.begin(), h.witness.end(), v);
            }));
    }
}

TEST(HittingSet, DisjointFamilyNeedsOnePerSet) {
    Bramble b;
    for (std::size_t i = 0; i < 7; ++i) b.sets.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    b.normalize();
    EXPECT_EQ(min_hitting_set(b).size, 7u);
}

TEST(HittingSet, NodeCapThrows) {
    EXPECT_THROW(min_hitting_set(kn_bramble(6), 3), ResourceLimit);
}
