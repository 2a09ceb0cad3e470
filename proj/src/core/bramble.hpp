#pragma once

#include "decomposition.hpp"
#include "graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tokentw {

inline constexpr std::size_t kDefaultBrambleSetCap = 200000;
inline constexpr std::uint64_t kDefaultHittingSetNodeCap = 50'000'000;

// Family of vertex sets over a host graph (vertex indices). Sets are kept
// sorted and the family deduplicated.
struct Bramble {
    std::vector<std::vector<std::size_t>> sets;
    std::optional<HostRef> host;

    // Sorts every set and the family, dropping duplicate sets.
    void normalize();
};

struct BrambleReport {
    bool sets_connected = true;
    bool pairs_touch = true;
    std::optional<std::size_t> disconnected_set;  // index into Bramble::sets
    std::optional<std::pair<std::size_t, std::size_t>> non_touching_pair;

    bool ok() const { return sets_connected && pairs_touch; }
};

// Each set must induce a connected subgraph; each pair must share a vertex
// or be joined by an edge. Throws InvalidParameter on out-of-range indices
// or an empty set.
BrambleReport validate_bramble(const Bramble& bramble, const Graph& host);

struct HittingSet {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // sorted vertex indices
    std::uint64_t search_nodes = 0;
};

// Exact minimum hitting set (the bramble order). Branch and bound: branch on
// the smallest unhit set, prune with a disjoint-packing lower bound, start
// from a greedy incumbent. Throws ResourceLimit when the universe exceeds 256
// vertices or the search visits more than node_cap nodes.
HittingSet min_hitting_set(const Bramble& bramble, std::uint64_t node_cap = kDefaultHittingSetNodeCap);

// B_i = {{s,i}: 0 <= s < i}, i = 1..n, on F_2(S_n).
Bramble star_bramble(int n);

// On F_2(K_n). Odd n: edge sets of all paths of K_n on (n+1)/2 vertices.
// Even n: the odd-style family inside the pairs avoiding n (paths on n/2
// vertices of K_{n-1}) together with every (n/2)-subset of {{a,n}: a < n}.
Bramble kn_bramble(int n, std::size_t set_cap = kDefaultBrambleSetCap);

} // namespace tokentw
