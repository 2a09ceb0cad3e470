#pragma once

// Slow, obviously-correct reference computations. Nothing here calls the
// library's algorithms; only the Graph container is shared.

#include "decomposition.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using tokentw::Graph;

// Sorted k-subsets of `items` in lexicographic order, via bitmasks.
inline std::vector<std::vector<int>> subsets(const std::vector<int>& items, int k) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(items.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(items[i]);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> range(int lo, int hi) {
    std::vector<int> v(hi - lo + 1);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

// A ~ B iff A xor B is a single base edge.
inline bool token_adjacent(const Graph& base, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    return diff.size() == 2 && base.adjacent_labels(diff[0], diff[1]);
}

// Elimination game over every permutation; only for tiny graphs.
inline int treewidth(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return -1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = static_cast<int>(n) - 1;
    do {
        std::vector<std::set<std::size_t>> adj(n);
        for (std::size_t v = 0; v < n; ++v)
            for (auto w : g.neighbors(v)) adj[v].insert(w);
        std::vector<bool> gone(n, false);
        int width = 0;
        for (auto v : perm) {
            std::vector<std::size_t> nb;
            for (auto w : adj[v])
                if (!gone[w]) nb.push_back(w);
            width = std::max(width, static_cast<int>(nb.size()));
            for (auto a : nb)
                for (auto b : nb)
                    if (a != b) adj[a].insert(b);
            gone[v] = true;
            if (width >= best) break;
        }
        best = std::min(best, width);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// |{A in ([n] choose k) : A_s <= X <= A_t}| with std::lexicographical_compare.
inline std::int64_t bag_count(int n, int k, const std::vector<int>& x) {
    std::int64_t count = 0;
    for (const auto& a : subsets(range(1, n), k)) {
        const std::vector<int> head(a.begin(), a.end() - 1);
        const std::vector<int> tail(a.begin() + 1, a.end());
        const bool lo = !std::lexicographical_compare(x.begin(), x.end(), head.begin(), head.end());
        const bool hi = !std::lexicographical_compare(tail.begin(), tail.end(), x.begin(), x.end());
        if (lo && hi) ++count;
    }
    return count;
}

// Smallest set meeting every member, by increasing-size subset search.
inline std::size_t hitting_set(const std::vector<std::vector<std::size_t>>& sets) {
    std::set<std::size_t> universe_set;
    for (const auto& s : sets) universe_set.insert(s.begin(), s.end());
    const std::vector<std::size_t> universe(universe_set.begin(), universe_set.end());
    const std::size_t u = universe.size();
    for (std::size_t size = 0; size <= u; ++size) {
        std::vector<bool> pick(u, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::set<std::size_t> chosen;
            for (std::size_t i = 0; i < u; ++i)
                if (pick[i]) chosen.insert(universe[i]);
            const bool ok = std::all_of(sets.begin(), sets.end(), [&](const auto& s) {
                return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen.count(v) > 0; });
            });
            if (ok) return size;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return u;
}

// Decomposition conditions in their original form: coverage, edge coverage,
// and V_a ∩ V_c ⊆ V_b for every b on the tree path between a and c.
inline bool decomposition_valid(const tokentw::TreeDecomposition& d, const Graph& host) {
    const auto& tree = d.tree;
    if (tree.size() == 0 || tree.edge_count() + 1 != tree.size()) return false;
    std::set<std::size_t> covered;
    for (const auto& [node, bag] : d.bags) covered.insert(bag.begin(), bag.end());
    if (covered.size() != host.size()) return false;
    for (const auto& e : host.edges()) {
        const auto u = host.index_of(e.u);
        const auto v = host.index_of(e.v);
        bool found = false;
        for (const auto& [node, bag] : d.bags) {
            if (std::count(bag.begin(), bag.end(), u) && std::count(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    // Tree paths by parent pointers from each root.
    const std::size_t m = tree.size();
    for (std::size_t a = 0; a < m; ++a) {
        std::vector<long> parent(m, -2);
        std::vector<std::size_t> stack = {a};
        parent[a] = -1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : tree.neighbors(x))
                if (parent[y] == -2) {
                    parent[y] = static_cast<long>(x);
                    stack.push_back(y);
                }
        }
        if (std::count(parent.begin(), parent.end(), -2)) return false;
        const auto bag_of = [&](std::size_t idx) -> std::vector<std::size_t> {
            auto it = d.bags.find(tree.label_at(idx));
            return it == d.bags.end() ? std::vector<std::size_t>{} : it->second;
        };
        const auto va = bag_of(a);
        for (std::size_t c = 0; c < m; ++c) {
            const auto vc = bag_of(c);
            std::vector<std::size_t> common;
            std::set_intersection(va.begin(), va.end(), vc.begin(), vc.end(), std::back_inserter(common));
            if (common.empty()) continue;
            for (long b = parent[c]; b >= 0; b = parent[b]) {
                const auto vb = bag_of(static_cast<std::size_t>(b));
                if (!std::includes(vb.begin(), vb.end(), common.begin(), common.end())) return false;
            }
        }
    }
    return true;
}

} // namespace brute
