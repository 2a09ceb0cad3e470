#pragma once

#include "graph.hpp"
#include "token_graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tokentw {

inline constexpr std::size_t kDefaultTreewidthCap = 21;
inline constexpr std::size_t kMaxTreewidthCap = 26;
inline constexpr std::size_t kDefaultMmbCap = 9;
inline constexpr std::size_t kMaxMmbCap = 20;
inline constexpr std::size_t kDefaultEigenCap = 400;

// A permutation of a graph's vertex indices.
class VertexOrdering {
public:
    VertexOrdering() = default;
    // Throws InvalidParameter unless `order` is a permutation of 0..vertex_count-1.
    VertexOrdering(std::vector<std::size_t> order, std::size_t vertex_count);

    std::span<const std::size_t> order() const { return order_; }
    std::size_t size() const { return order_.size(); }

private:
    std::vector<std::size_t> order_;
};

struct TreewidthResult {
    int treewidth = 0;
    // Optimal elimination ordering (first eliminated first), vertex indices.
    std::vector<std::size_t> elimination_order;
};

// Exact treewidth by dynamic programming over vertex subsets:
// TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is the
// set of vertices outside S + v reachable from v through S.
// Throws ResourceLimit above `cap` vertices (cap itself at most 26).
TreewidthResult exact_treewidth(const Graph& g, std::size_t cap = kDefaultTreewidthCap);

// Width of an elimination ordering, by simulating fill-in.
int elimination_width(const Graph& g, std::span<const std::size_t> order);

// beta(S): |N(S) \ S| for connected G[S], max over components otherwise.
// S is given by vertex index; throws InvalidParameter when empty.
int border(const Graph& g, std::span<const std::size_t> subset);
int border_of_labels(const Graph& g, std::span<const int> labels);

// max over prefixes T_i = {pi(1..i)} of beta(T_i).
int max_border(const Graph& g, const VertexOrdering& pi);

struct MmbResult {
    int value = 0;
    VertexOrdering witness;
};

// min over all orderings of max_border. Depth-first over prefixes, pruning
// any prefix whose running border reaches the incumbent or that was already
// reached with a smaller running border. Throws ResourceLimit above `cap`
// vertices (cap itself at most 20).
MmbResult mmb_exhaustive(const Graph& g, std::size_t cap = kDefaultMmbCap);

// Ordering of F_2(P_n) by x_1 + x_2, ties by increasing x_1 except on the
// class x_1 + x_2 = n, which runs by decreasing x_1. Max border floor(n/2).
VertexOrdering f2pn_ordering(int n);

// Ties by increasing x_1 throughout; max border ceil(n/2) for n >= 4.
VertexOrdering f2pn_ordering_literal(int n);

// Eigenvalues of a symmetric matrix in ascending order (cyclic Jacobi).
// The input is symmetrized by averaging first.
std::vector<double> symmetric_eigenvalues(DenseMatrix m);

struct Lambda2 {
    double value = 0.0;
    bool disconnected = false;
};

// Second-smallest Laplacian eigenvalue; a disconnected graph reports 0 with
// the flag set. Throws InvalidParameter below 2 vertices and ResourceLimit
// above `cap`.
Lambda2 lambda2(const Graph& g, std::size_t cap = kDefaultEigenCap);

struct SpectralReport {
    std::size_t vertices = 0;
    std::size_t max_degree = 0;
    double lambda2 = 0.0;                  // of the base graph
    std::optional<double> lambda2_token;   // measured on F_k(G) when within cap
    bool disconnected = false;
    double chandran_lower_bound = 0.0;     // |V| / (12 max_degree) * lambda2 - 1
};

double spectral_bound(std::size_t vertices, std::size_t max_degree, double lambda2);

SpectralReport spectral_lower_bound(const TokenGraph& tg, std::size_t eigen_cap = kDefaultEigenCap);

} // namespace tokentw
