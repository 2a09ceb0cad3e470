#pragma once

#include "graph.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace tokentw {

inline constexpr std::size_t kDefaultTokenCap = 200000;

// A vertex of F_k(G): strictly increasing base labels.
struct TokenVertex {
    std::vector<int> members;
    auto operator<=>(const TokenVertex&) const = default;
};

// F_k(G): all k-subsets of V(G), adjacent when their symmetric difference is
// an edge of G. Token vertices are indexed by lexicographic rank (over the
// base labels in ascending order) and the underlying graph uses those ranks
// as labels.
class TokenGraph {
public:
    TokenGraph(Graph base, int k, std::size_t cap = kDefaultTokenCap);

    const Graph& base() const { return base_; }
    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    std::size_t size() const { return table_.size(); }

    const TokenVertex& vertex(std::size_t index) const { return table_.at(index); }
    std::span<const TokenVertex> vertex_table() const { return table_; }

    // Rank of a token vertex; throws InvalidParameter if it is not a valid
    // k-subset of the base labels.
    std::size_t index_of(const TokenVertex& vertex) const;

private:
    Graph base_;
    int k_ = 0;
    Graph graph_;
    std::vector<TokenVertex> table_;
};

inline TokenGraph token_graph(const Graph& g, int k, std::size_t cap = kDefaultTokenCap) {
    return TokenGraph(g, k, cap);
}

// Lexicographic rank of a sorted label tuple among |members|-subsets of the
// base labels. Throws on unknown or unsorted labels.
std::size_t token_rank(const Graph& base, std::span<const int> members);

// V(G) \ A.
TokenVertex complement(const Graph& base, const TokenVertex& vertex);

// For each index of F_k(base), the index of its complement in F_{n-k}(base).
std::vector<std::size_t> complement_isomorphism(const Graph& base, int k);

// f(A) = (x_i - (i-1)) for the sorted members of A; defined for base P_n
// (labels 1..n). Entry i is the image of token index i.
std::vector<std::vector<int>> grid_embedding(const TokenGraph& tg);
std::vector<std::vector<int>> grid_embedding(int n, int k);

struct GridEmbeddingCheck {
    bool injective = false;
    // f is an isomorphism onto the subgraph of P_{n-k+1}^{□k} induced by the image.
    bool isomorphic = false;
};

GridEmbeddingCheck check_grid_embedding(int n, int k);

// Subgraph of F_k(G) on configurations with exactly one token in each part.
struct TokenConfigSubgraph {
    // Labels are the token-vertex ranks in F_k(G), k = number of parts.
    Graph graph;
    // coordinates[i]: the token in each part (part order) for graph index i.
    std::vector<std::vector<int>> coordinates;
};

TokenConfigSubgraph token_config_subgraph(const Graph& g, std::span<const std::vector<int>> parts);

// Checks the configuration subgraph against G[part_1] □ ... □ G[part_k]
// through the coordinate map.
bool token_config_matches_product(const Graph& g, std::span<const std::vector<int>> parts);

} // namespace tokentw
