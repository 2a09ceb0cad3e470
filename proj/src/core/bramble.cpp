#include "bramble.hpp"

#include "combinatorics.hpp"
#include "error.hpp"
#include "token_graph.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>

namespace tokentw {

namespace {

std::vector<std::size_t> sorted_copy(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

void Bramble::normalize() {
    for (auto& set : sets) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

BrambleReport validate_bramble(const Bramble& bramble, const Graph& host) {
    BrambleReport report;
    std::vector<std::vector<std::size_t>> closed_nbhd;
    closed_nbhd.reserve(bramble.sets.size());
    for (std::size_t i = 0; i < bramble.sets.size(); ++i) {
        const auto& set = bramble.sets[i];
        if (set.empty()) throw InvalidParameter("bramble set " + std::to_string(i) + " is empty");
        for (auto v : set)
            if (v >= host.size())
                throw InvalidParameter("bramble set " + std::to_string(i) + " references vertex " +
                                       std::to_string(v) + " outside the host graph");
        if (report.sets_connected && index_components(host, set).size() != 1) {
            report.sets_connected = false;
            report.disconnected_set = i;
        }
        std::vector<std::size_t> nb(set.begin(), set.end());
        for (auto v : set) nb.insert(nb.end(), host.neighbors(v).begin(), host.neighbors(v).end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        closed_nbhd.push_back(std::move(nb));
    }

    // B_i touches B_j iff B_j meets the closed neighbourhood of B_i.
    std::vector<std::vector<std::size_t>> sorted_sets;
    sorted_sets.reserve(bramble.sets.size());
    for (const auto& set : bramble.sets) sorted_sets.push_back(sorted_copy(set));
    for (std::size_t i = 0; i < bramble.sets.size() && report.pairs_touch; ++i) {
        for (std::size_t j = i + 1; j < bramble.sets.size(); ++j) {
            const auto& sorted_j = sorted_sets[j];
            const auto& nb = closed_nbhd[i];
            bool touches = false;
            for (auto a = nb.begin(), b = sorted_j.begin(); a != nb.end() && b != sorted_j.end();) {
                if (*a == *b) {
                    touches = true;
                    break;
                }
                if (*a < *b) ++a;
                else ++b;
            }
            if (!touches) {
                report.pairs_touch = false;
                report.non_touching_pair = std::make_pair(i, j);
                break;
            }
        }
    }
    return report;
}

namespace {

constexpr std::size_t kMaxUniverse = 256;
using Bits = std::bitset<kMaxUniverse>;

class HittingSetSearch {
public:
    HittingSetSearch(std::vector<Bits> sets, std::size_t universe, std::uint64_t node_cap)
        : sets_(std::move(sets)), universe_(universe), node_cap_(node_cap) {}

    void run() {
        greedy_incumbent();
        search(Bits{}, Bits{}, 0);
    }

    std::size_t best_size() const { return best_size_; }
    const Bits& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void greedy_incumbent() {
        Bits chosen;
        std::vector<char> hit(sets_.size(), 0);
        std::size_t remaining = sets_.size();
        while (remaining > 0) {
            std::size_t best_elem = 0;
            std::size_t best_count = 0;
            for (std::size_t e = 0; e < universe_; ++e) {
                std::size_t count = 0;
                for (std::size_t s = 0; s < sets_.size(); ++s)
                    if (!hit[s] && sets_[s][e]) ++count;
                if (count > best_count) {
                    best_count = count;
                    best_elem = e;
                }
            }
            chosen.set(best_elem);
            for (std::size_t s = 0; s < sets_.size(); ++s)
                if (!hit[s] && sets_[s][best_elem]) {
                    hit[s] = 1;
                    --remaining;
                }
        }
        best_ = chosen;
        best_size_ = chosen.count();
    }

    void search(Bits chosen, Bits forbidden, std::size_t depth) {
        if (++nodes_ > node_cap_)
            throw ResourceLimit("hitting-set search exceeded " + std::to_string(node_cap_) + " nodes");

        std::vector<Bits> open;  // available elements of each unhit set
        for (const auto& s : sets_) {
            if ((s & chosen).any()) continue;
            Bits avail = s & ~forbidden;
            if (avail.none()) return;
            open.push_back(avail);
        }
        if (open.empty()) {
            if (depth < best_size_) {
                best_size_ = depth;
                best_ = chosen;
            }
            return;
        }

        std::sort(open.begin(), open.end(), [](const Bits& a, const Bits& b) { return a.count() < b.count(); });

        // Pairwise disjoint open sets each need their own element.
        Bits packed;
        std::size_t packing = 0;
        for (const auto& s : open) {
            if ((s & packed).none()) {
                packed |= s;
                ++packing;
            }
        }
        if (depth + packing >= best_size_) return;

        const Bits pivot = open.front();
        std::vector<std::pair<std::size_t, std::size_t>> order;  // (-frequency, element)
        for (std::size_t e = 0; e < universe_; ++e) {
            if (!pivot[e]) continue;
            std::size_t freq = 0;
            for (const auto& s : open) freq += s[e];
            order.emplace_back(freq, e);
        }
        std::sort(order.begin(), order.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (const auto& [freq, e] : order) {
            Bits next = chosen;
            next.set(e);
            search(next, forbidden, depth + 1);
            // Later branches exclude e: every hitting set containing it was covered above.
            forbidden.set(e);
            if (depth + 1 >= best_size_) return;
        }
    }

    std::vector<Bits> sets_;
    std::size_t universe_;
    std::uint64_t node_cap_;
    Bits best_;
    std::size_t best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

HittingSet min_hitting_set(const Bramble& bramble, std::uint64_t node_cap) {
    HittingSet result;
    if (bramble.sets.empty()) return result;

    std::vector<std::size_t> universe;
    for (const auto& set : bramble.sets) {
        if (set.empty()) throw InvalidParameter("an empty set cannot be hit");
        universe.insert(universe.end(), set.begin(), set.end());
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe.size() > kMaxUniverse)
        throw ResourceLimit("hitting-set universe has " + std::to_string(universe.size()) +
                            " vertices, above the solver cap of " + std::to_string(kMaxUniverse));

    auto bit_of = [&](std::size_t v) {
        return static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), v) - universe.begin());
    };
    std::vector<Bits> sets;
    for (const auto& set : bramble.sets) {
        Bits b;
        for (auto v : set) b.set(bit_of(v));
        sets.push_back(b);
    }
    // Only inclusion-minimal sets constrain a hitting set.
    std::sort(sets.begin(), sets.end(), [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
    std::vector<Bits> minimal;
    for (const auto& s : sets) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                           [&](const Bits& m) { return (m & ~s).none(); });
        if (!dominated) minimal.push_back(s);
    }

    HittingSetSearch search(std::move(minimal), universe.size(), node_cap);
    search.run();
    result.size = search.best_size();
    result.search_nodes = search.nodes();
    for (std::size_t e = 0; e < universe.size(); ++e)
        if (search.best()[e]) result.witness.push_back(universe[e]);
    return result;
}

Bramble star_bramble(int n) {
    if (n < 2) throw InvalidParameter("star bramble needs n >= 2, got " + std::to_string(n));
    const Graph base = generate(Family::Star, n);
    Bramble bramble;
    bramble.host = HostRef{Family::Star, n, 2};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::size_t> set;
        for (int s = 0; s < i; ++s) {
            const int pair[] = {s, i};
            set.push_back(token_rank(base, pair));
        }
        bramble.sets.push_back(std::move(set));
    }
    bramble.normalize();
    return bramble;
}

namespace {

// Edge sets (as F_2(K_n) indices) of all paths on `length` vertices inside
// labels 1..m, one per unordered path.
void append_path_edge_sets(int n, int m, int length, std::size_t cap, std::vector<std::vector<std::size_t>>& out) {
    // m!/(m-length)!/2 ordered-path count, checked before enumerating
    std::int64_t count = 1;
    for (int i = 0; i < length; ++i) {
        if (count > static_cast<std::int64_t>(cap) * 2) break;
        count *= (m - i);
    }
    if (count / 2 + static_cast<std::int64_t>(out.size()) > static_cast<std::int64_t>(cap))
        throw ResourceLimit("bramble would have more than " + std::to_string(cap) + " sets");

    auto pair_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        const int pair[] = {a - 1, b - 1};
        return subset_rank(pair, n);
    };

    std::vector<int> path;
    std::vector<char> used(m + 1, 0);
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == length) {
            if (path.front() > path.back()) return;
            std::vector<std::size_t> set;
            for (std::size_t i = 1; i < path.size(); ++i) set.push_back(pair_index(path[i - 1], path[i]));
            out.push_back(std::move(set));
            return;
        }
        for (int v = 1; v <= m; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            path.push_back(v);
            self(self);
            path.pop_back();
            used[v] = 0;
        }
    };
    extend(extend);
}

} // namespace

Bramble kn_bramble(int n, std::size_t set_cap) {
    if (n < 4) throw InvalidParameter("complete-graph bramble needs n >= 4, got " + std::to_string(n));
    Bramble bramble;
    bramble.host = HostRef{Family::Complete, n, 2};
    if (n % 2 == 1) {
        append_path_edge_sets(n, n, (n + 1) / 2, set_cap, bramble.sets);
    } else {
        append_path_edge_sets(n, n - 1, n / 2, set_cap, bramble.sets);
        const auto subsets = binomial_saturating(n - 1, n / 2);
        if (subsets + static_cast<std::int64_t>(bramble.sets.size()) > static_cast<std::int64_t>(set_cap))
            throw ResourceLimit("bramble would have more than " + std::to_string(set_cap) + " sets");
        for (const auto& chosen : all_combinations(1, n - 1, n / 2)) {
            std::vector<std::size_t> set;
            for (int a : chosen) {
                const int pair[] = {a - 1, n - 1};
                set.push_back(subset_rank(pair, n));
            }
            bramble.sets.push_back(std::move(set));
        }
    }
    bramble.normalize();
    return bramble;
}

} // namespace tokentw
