#include "decomposition.hpp"

#include "combinatorics.hpp"
#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace tokentw {

TokenGraph build_host(const HostRef& ref, std::size_t cap) {
    return TokenGraph(generate(ref.family, ref.n), ref.k, cap);
}

namespace {

void require(bool condition, const std::string& message) {
    if (!condition) throw InvalidParameter(message);
}

Graph path_tree(std::size_t nodes, int first_label) {
    std::vector<int> labels(nodes);
    std::iota(labels.begin(), labels.end(), first_label);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < nodes; ++i) edges.push_back({labels[i - 1], labels[i]});
    return Graph(std::move(labels), std::move(edges));
}

void sort_bags(TreeDecomposition& d) {
    for (auto& [node, bag] : d.bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }
}

std::string range_message(int n, int k, int k_min) {
    return "parameters n=" + std::to_string(n) + ", k=" + std::to_string(k) + " must satisfy " +
           std::to_string(k_min) + " <= k <= n-1";
}

} // namespace

ValidationReport validate(const TreeDecomposition& d, const Graph& host) {
    ValidationReport report;
    const Graph& tree = d.tree;

    for (const auto& [node, bag] : d.bags) {
        require(tree.has_label(node), "bag attached to unknown tree node " + std::to_string(node));
        for (auto v : bag)
            require(v < host.size(), "bag of node " + std::to_string(node) + " references vertex " +
                                         std::to_string(v) + " outside the host graph");
    }

    // Tree shape.
    if (tree.empty()) {
        report.tree_message = "tree has no nodes";
    } else if (tree.edge_count() + 1 != tree.size() || !is_connected(tree)) {
        report.tree_message = "decomposition graph is not a tree";
    } else if (d.bags.size() != tree.size()) {
        report.tree_message = "some tree node has no bag";
    } else {
        report.tree_ok = true;
    }
    if (d.is_path && tree.max_degree() > 2) report.path_ok = false;

    // Per-vertex trace: tree-node indices whose bag contains the vertex.
    std::vector<std::vector<std::size_t>> trace(host.size());
    for (const auto& [node, bag] : d.bags) {
        const auto t = tree.index_of(node);
        for (auto v : bag) trace[v].push_back(t);
    }
    for (auto& nodes : trace) {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    }

    report.coverage_ok = true;
    for (std::size_t v = 0; v < host.size(); ++v) {
        if (trace[v].empty()) {
            report.coverage_ok = false;
            report.uncovered_vertex = v;
            break;
        }
    }

    report.edge_ok = true;
    for (std::size_t u = 0; u < host.size() && report.edge_ok; ++u) {
        for (auto w : host.neighbors(u)) {
            if (w < u) continue;
            std::vector<std::size_t> common;
            std::set_intersection(trace[u].begin(), trace[u].end(), trace[w].begin(), trace[w].end(),
                                  std::back_inserter(common));
            if (common.empty()) {
                report.edge_ok = false;
                report.uncovered_edge = Edge{static_cast<int>(u), static_cast<int>(w)};
                break;
            }
        }
    }

    // A trace is a subtree iff it is connected inside T.
    report.connectivity_ok = true;
    for (std::size_t v = 0; v < host.size(); ++v) {
        if (trace[v].size() <= 1) continue;
        const auto parts = index_components(tree, trace[v]);
        if (parts.size() > 1) {
            report.connectivity_ok = false;
            report.broken_trace = ValidationReport::TraceBreak{
                v, tree.label_at(parts[0].front()), tree.label_at(parts[1].front())};
            break;
        }
    }
    return report;
}

ValidationReport validate(const TreeDecomposition& d, const TokenGraph& host) {
    return validate(d, host.graph());
}

std::int64_t width(const TreeDecomposition& d) {
    if (d.bags.empty()) throw InvalidParameter("width of an empty decomposition");
    std::size_t largest = 0;
    for (const auto& [node, bag] : d.bags) largest = std::max(largest, bag.size());
    return static_cast<std::int64_t>(largest) - 1;
}

TreeDecomposition star_decomposition(int n, int k) {
    require(k >= 1 && k <= n - 1, range_message(n, k, 1));
    const Graph base = generate(Family::Star, n);

    TreeDecomposition d;
    d.host = HostRef{Family::Star, n, k};

    auto with_center = [&](const std::vector<int>& rest) {
        std::vector<int> members{0};
        members.insert(members.end(), rest.begin(), rest.end());
        return token_rank(base, members);
    };

    auto& center = d.bags[0];
    for (const auto& a : all_combinations(1, n, k - 1)) center.push_back(with_center(a));

    std::vector<int> labels{0};
    std::vector<Edge> edges;
    int leaf = 1;
    for (const auto& a : all_combinations(1, n, k)) {
        auto& bag = d.bags[leaf];
        bag.push_back(token_rank(base, a));
        for (std::size_t drop = 0; drop < a.size(); ++drop) {
            std::vector<int> rest;
            for (std::size_t j = 0; j < a.size(); ++j)
                if (j != drop) rest.push_back(a[j]);
            bag.push_back(with_center(rest));
        }
        labels.push_back(leaf);
        edges.push_back({0, leaf});
        ++leaf;
    }
    d.tree = Graph(std::move(labels), std::move(edges));
    d.is_path = d.tree.max_degree() <= 2;
    sort_bags(d);
    return d;
}

TreeDecomposition f2kn_path_decomposition(int n) {
    require(n >= 2, "f2kn path decomposition needs n >= 2, got " + std::to_string(n));
    TreeDecomposition d;
    d.is_path = true;
    if (n >= 3) d.host = HostRef{Family::Complete, n, 2};
    d.tree = path_tree(static_cast<std::size_t>(n), 1);
    for (int l = 1; l <= n; ++l) {
        auto& bag = d.bags[l];
        for (int i = 1; i <= l; ++i)
            for (int j = std::max(l, i + 1); j <= n; ++j) {
                const int pair[] = {i - 1, j - 1};
                bag.push_back(subset_rank(pair, n));
            }
    }
    sort_bags(d);
    return d;
}

BagIndex::BagIndex(std::vector<int> members, int n) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        require(members_[i] >= 1 && members_[i] <= n - 1,
                "bag index entries must lie in [1, n-1] (n=" + std::to_string(n) + ")");
        require(i == 0 || members_[i] > members_[i - 1], "bag index must be strictly increasing");
    }
}

std::vector<BagIndex> lex_path_nodes(int n, int k) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    std::vector<BagIndex> nodes;
    for (auto& x : all_combinations(1, n - 1, k - 1)) nodes.emplace_back(std::move(x), n);
    return nodes;
}

std::vector<std::vector<int>> lex_bag(int n, int k, std::span<const int> x) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    require(x.size() == static_cast<std::size_t>(k - 1), "bag index must have k-1 entries");
    std::vector<std::vector<int>> out;
    for (const auto& a : all_combinations(1, n, k)) {
        const std::span<const int> whole(a);
        if (lex_less_equal(whole.first(k - 1), x) && lex_less_equal(x, whole.last(k - 1)))
            out.push_back(a);
    }
    return out;
}

TreeDecomposition fkkn_lex_decomposition(int n, int k, std::size_t cap) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    const auto count = binomial_saturating(n, k);
    if (static_cast<std::uint64_t>(count) > cap)
        throw ResourceLimit("F_" + std::to_string(k) + "(K_" + std::to_string(n) + ") has " +
                            std::to_string(count) + " vertices, above cap " + std::to_string(cap));

    // Every (k-1)-subset of [n] gets its full lexicographic rank; path nodes
    // are the ones avoiding n, so node_of maps full rank -> node label or -1.
    const auto all_small = all_combinations(1, n, k - 1);
    std::vector<int> node_of(all_small.size(), -1);
    int nodes = 0;
    for (std::size_t r = 0; r < all_small.size(); ++r)
        if (all_small[r].back() != n) node_of[r] = nodes++;

    TreeDecomposition d;
    d.is_path = true;
    d.host = HostRef{Family::Complete, n, k};
    d.tree = path_tree(static_cast<std::size_t>(nodes), 0);
    for (int t = 0; t < nodes; ++t) d.bags[t];

    // A lies in V_X exactly for X in the lexicographic interval [A_s, A_t].
    auto full_rank = [n](std::span<const int> tuple) {
        std::vector<int> positions(tuple.begin(), tuple.end());
        for (auto& p : positions) --p;
        return subset_rank(positions, n);
    };
    std::size_t index = 0;
    for (const auto& a : all_combinations(1, n, k)) {
        const std::span<const int> whole(a);
        const auto lo = full_rank(whole.first(k - 1));
        const auto hi = full_rank(whole.last(k - 1));
        for (auto r = lo; r <= hi; ++r)
            if (node_of[r] >= 0) d.bags[node_of[r]].push_back(index);
        ++index;
    }
    sort_bags(d);
    return d;
}

std::int64_t bag_size_formula(const BagIndex& x, int n, int k) {
    require(x.size() == static_cast<std::size_t>(k - 1), "bag index must have k-1 entries");
    std::vector<std::int64_t> xs(x.members().begin(), x.members().end());
    xs.push_back(n);  // x_k = n
    std::int64_t first = 0;
    for (int i = 1; i <= k; ++i) first += binomial(n - xs[i - 1], k - i);
    std::int64_t second = 0;
    for (int i = 1; i <= k - 1; ++i) second += binomial(n - xs[i] + 1, k - i);
    return xs[0] * first - second;
}

namespace {

std::vector<int> first_entry_candidates(int n, int k) {
    const int lo = (n + 1) / k;
    const int hi = (n + k - 1) / k;
    if (lo == hi) return {lo};
    return {lo, hi};
}

bool valid_tail(const std::vector<int>& x, int n) {
    if (x.empty() || x.front() < 1 || x.back() > n - 1) return false;
    for (std::size_t i = 1; i < x.size(); ++i)
        if (x[i] <= x[i - 1]) return false;
    return true;
}

// Options for x_i (1-based i in 2..k-1) under the tail lemma.
std::vector<int> tail_options(int n, int k, int x1, int i) {
    const int t = n - (k - i) * x1;
    if (t + 1 >= x1 + i - 1) return {t, t + 1};
    return {x1 + i - 1};
}

void keep_better(std::optional<MaxBag>& best, std::optional<MaxBag> candidate) {
    if (!candidate) return;
    if (!best || candidate->size > best->size ||
        (candidate->size == best->size &&
         lex_compare(candidate->index.members(), best->index.members()) < 0))
        best = std::move(candidate);
}

std::optional<MaxBag> best_for_first_entry(int n, int k, int x1) {
    std::optional<MaxBag> best;
    std::vector<std::vector<int>> options;
    std::vector<std::size_t> radices;
    for (int i = 2; i <= k - 1; ++i) {
        options.push_back(tail_options(n, k, x1, i));
        radices.push_back(options.back().size());
    }
    std::vector<std::size_t> pick(options.size(), 0);
    do {
        std::vector<int> x{x1};
        for (std::size_t j = 0; j < options.size(); ++j) x.push_back(options[j][pick[j]]);
        if (!valid_tail(x, n)) continue;
        BagIndex index(x, n);
        const auto size = bag_size_formula(index, n, k);
        keep_better(best, MaxBag{std::move(index), size});
    } while (advance_mixed_radix(pick, radices));
    return best;
}

} // namespace

MaxBag max_bag(int n, int k) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    std::optional<MaxBag> best;
    for (int x1 : first_entry_candidates(n, k)) keep_better(best, best_for_first_entry(n, k, x1));
    if (!best) throw std::logic_error("no lemma-constrained bag index is valid");
    return *best;
}

MaxBag max_bag_exhaustive(int n, int k) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    std::optional<MaxBag> best;
    for (auto& node : lex_path_nodes(n, k)) {
        const auto size = static_cast<std::int64_t>(lex_bag(n, k, node.members()).size());
        // Nodes arrive in lexicographic order, so strict > keeps the smallest X on ties.
        if (!best || size > best->size) best = MaxBag{std::move(node), size};
    }
    return *best;
}

MaximizerLemmaCheck check_maximizer_lemmas(const BagIndex& x, int n, int k) {
    require(x.size() == static_cast<std::size_t>(k - 1), "bag index must have k-1 entries");
    MaximizerLemmaCheck check;
    const auto candidates = first_entry_candidates(n, k);
    const int x1 = x[0];
    check.first_entry_ok = std::find(candidates.begin(), candidates.end(), x1) != candidates.end();
    if (!check.first_entry_ok) check.failing_position = 1;

    check.tail_ok = true;
    for (int i = 2; i <= k - 1; ++i) {
        const auto options = tail_options(n, k, x1, i);
        if (std::find(options.begin(), options.end(), x[i - 1]) == options.end()) {
            check.tail_ok = false;
            if (check.failing_position == 0) check.failing_position = i;
            break;
        }
    }
    return check;
}

namespace {

// x_1 C(n-x_1, k-1) + x_1 sum_{i=2}^{k} C((k-i)x_1, k-i) - sum_{i=1}^{k-1} C((k-i-1)x_1+1, k-i)
std::int64_t tw_kn_closed_form(int n, int k, int x1) {
    std::int64_t value = x1 * binomial(n - x1, k - 1);
    for (int i = 2; i <= k; ++i) value += x1 * binomial((k - i) * x1, k - i);
    for (int i = 1; i <= k - 1; ++i) value -= binomial((k - i - 1) * x1 + 1, k - i);
    return value;
}

TwKnBranch evaluate_branch(int n, int k, int x1) {
    TwKnBranch branch;
    branch.first_entry = x1;
    std::vector<int> x{x1};
    for (int i = 2; i <= k - 1; ++i) {
        branch.tail.push_back(n - (k - i) * x1);
        x.push_back(branch.tail.back());
    }
    branch.index_valid = valid_tail(x, n);
    branch.closed_form = tw_kn_closed_form(n, k, x1);
    if (branch.index_valid) {
        branch.bag_size = branch.closed_form;
    } else {
        const auto best = best_for_first_entry(n, k, x1);
        branch.bag_size = best ? best->size : 0;
    }
    return branch;
}

} // namespace

TwKnEvaluation evaluate_tw_kn_bound(int n, int k) {
    require(k >= 2 && k <= n - 1, range_message(n, k, 2));
    TwKnEvaluation eval;
    eval.floor_branch = evaluate_branch(n, k, (n + 1) / k);
    eval.ceil_branch = evaluate_branch(n, k, (n + k - 1) / k);
    eval.literal_bound = std::max(eval.floor_branch.closed_form, eval.ceil_branch.closed_form) - 1;
    eval.bound = std::max(eval.floor_branch.bag_size, eval.ceil_branch.bag_size) - 1;
    return eval;
}

std::int64_t upper_bound_tw_kn(int n, int k) {
    return evaluate_tw_kn_bound(n, k).bound;
}

} // namespace tokentw
