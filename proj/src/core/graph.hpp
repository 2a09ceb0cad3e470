#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tokentw {

struct Edge {
    int u;
    int v;
    auto operator<=>(const Edge&) const = default;
};

enum class Family { Path, Star, Complete };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

// Undirected simple graph over explicit integer labels. Immutable once built.
//
// Vertices are addressed two ways: by label (what the user sees, e.g. stars
// are labelled 0..n with 0 the center) and by index, the position of the label
// in ascending label order. Adjacency is stored per index as sorted neighbour
// lists; the edge list is kept as label pairs (smaller endpoint first) in
// lexicographic order.
class Graph {
public:
    Graph() = default;

    // Rejects duplicate labels, self-loops, duplicate edges and edges whose
    // endpoints are not declared labels.
    Graph(std::vector<int> labels, std::vector<Edge> edges);

    std::size_t size() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return labels_.empty(); }

    std::span<const int> labels() const { return labels_; }
    std::span<const Edge> edges() const { return edges_; }

    int label_at(std::size_t index) const { return labels_.at(index); }
    bool has_label(int label) const;
    std::size_t index_of(int label) const;

    std::span<const std::size_t> neighbors(std::size_t index) const { return adjacency_.at(index); }
    std::size_t degree(std::size_t index) const { return adjacency_.at(index).size(); }
    std::size_t max_degree() const;

    bool adjacent(std::size_t i, std::size_t j) const;
    bool adjacent_labels(int a, int b) const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && edges_ == other.edges_;
    }

private:
    std::vector<int> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// path: labels 1..n, edges {i,i+1}; star: labels 0..n, center 0;
// complete: all pairs over 1..n.
Graph generate(Family family, int n);

struct ProductGraph {
    Graph graph;
    // coordinates[i] holds the factor labels of the product vertex labelled i.
    std::vector<std::vector<int>> coordinates;
};

// G_1 □ ... □ G_m. Product vertices get fresh labels 0..N-1 enumerated with
// the last factor varying fastest.
ProductGraph cartesian_product(std::span<const Graph> factors);
ProductGraph cartesian_product(const Graph& g, const Graph& h);

// Connected components of G[S], each sorted, ordered by smallest label.
std::vector<std::vector<int>> components(const Graph& g, std::span<const int> subset);

// Same, over vertex indices.
std::vector<std::vector<std::size_t>> index_components(const Graph& g,
                                                       std::span<const std::size_t> subset);

bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const int> subset);

// Dense row-major square matrix.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> values;

    double& at(std::size_t i, std::size_t j) { return values[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

// D(G) - A(G), rows and columns in index (ascending label) order.
DenseMatrix laplacian(const Graph& g);

// True iff `mapping` (index in g -> index in h) is a bijection that preserves
// adjacency and non-adjacency.
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const std::size_t> mapping);

} // namespace tokentw
