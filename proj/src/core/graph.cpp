#include "graph.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tokentw {

std::string_view to_string(Family family) {
    switch (family) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "path") return Family::Path;
    if (name == "star") return Family::Star;
    if (name == "complete") return Family::Complete;
    return std::nullopt;
}

Graph::Graph(std::vector<int> labels, std::vector<Edge> edges) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw InvalidParameter("duplicate vertex label");

    for (auto& e : edges) {
        if (e.u == e.v) throw InvalidParameter("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!has_label(e.u) || !has_label(e.v))
            throw InvalidParameter("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   "} uses an undeclared label");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidParameter("duplicate edge {" + std::to_string(dup->u) + "," +
                               std::to_string(dup->v) + "}");
    edges_ = std::move(edges);

    adjacency_.assign(labels_.size(), {});
    for (const auto& e : edges_) {
        const auto a = index_of(e.u);
        const auto b = index_of(e.v);
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_label(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw InvalidParameter("unknown vertex label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
    const auto& nbrs = adjacency_.at(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool Graph::adjacent_labels(int a, int b) const {
    return adjacent(index_of(a), index_of(b));
}

Graph generate(Family family, int n) {
    if (n < 1) throw InvalidParameter("graph size must be positive, got " + std::to_string(n));
    std::vector<int> labels;
    std::vector<Edge> edges;
    switch (family) {
    case Family::Path:
        for (int i = 1; i <= n; ++i) labels.push_back(i);
        for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
        break;
    case Family::Star:
        for (int i = 0; i <= n; ++i) labels.push_back(i);
        for (int i = 1; i <= n; ++i) edges.push_back({0, i});
        break;
    case Family::Complete:
        for (int i = 1; i <= n; ++i) labels.push_back(i);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
        break;
    }
    return Graph(std::move(labels), std::move(edges));
}

ProductGraph cartesian_product(std::span<const Graph> factors) {
    if (factors.empty()) throw InvalidParameter("cartesian product needs at least one factor");
    std::size_t total = 1;
    for (const auto& f : factors) {
        if (f.empty()) throw InvalidParameter("cartesian product of an empty graph");
        total *= f.size();
    }

    // Mixed-radix index: digit i is the vertex index inside factor i.
    const std::size_t m = factors.size();
    std::vector<std::size_t> stride(m, 1);
    for (std::size_t i = m - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i].size();

    ProductGraph out;
    out.coordinates.resize(total);
    std::vector<int> labels(total);
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < total; ++v) {
        auto& coord = out.coordinates[v];
        coord.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t digit = (v / stride[i]) % factors[i].size();
            coord[i] = factors[i].label_at(digit);
            for (auto nb : factors[i].neighbors(digit)) {
                if (nb <= digit) continue;
                const std::size_t w = v + (nb - digit) * stride[i];
                edges.push_back({static_cast<int>(v), static_cast<int>(w)});
            }
        }
    }
    out.graph = Graph(std::move(labels), std::move(edges));
    return out;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    const Graph factors[] = {g, h};
    return cartesian_product(std::span<const Graph>(factors));
}

std::vector<std::vector<std::size_t>> index_components(const Graph& g,
                                                       std::span<const std::size_t> subset) {
    std::vector<char> in_set(g.size(), 0);
    for (auto v : subset) {
        if (v >= g.size()) throw InvalidParameter("vertex index out of range");
        in_set[v] = 1;
    }
    std::vector<char> seen(g.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto start : sorted) {
        if (seen[start]) continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> queue;
        queue.push(start);
        seen[start] = 1;
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (auto w : g.neighbors(v)) {
                if (in_set[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<int>> components(const Graph& g, std::span<const int> subset) {
    std::vector<std::size_t> indices;
    indices.reserve(subset.size());
    for (int label : subset) indices.push_back(g.index_of(label));
    std::vector<std::vector<int>> out;
    for (const auto& comp : index_components(g, indices)) {
        std::vector<int> labels;
        labels.reserve(comp.size());
        for (auto v : comp) labels.push_back(g.label_at(v));
        out.push_back(std::move(labels));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return index_components(g, all).size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const int> subset) {
    std::vector<int> labels(subset.begin(), subset.end());
    std::vector<char> in_set(g.size(), 0);
    for (int label : labels) in_set[g.index_of(label)] = 1;
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (in_set[g.index_of(e.u)] && in_set[g.index_of(e.v)]) edges.push_back(e);
    return Graph(std::move(labels), std::move(edges));
}

DenseMatrix laplacian(const Graph& g) {
    DenseMatrix m;
    m.n = g.size();
    m.values.assign(m.n * m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        m.at(i, i) = static_cast<double>(g.degree(i));
        for (auto j : g.neighbors(i)) m.at(i, j) = -1.0;
    }
    return m;
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const std::size_t> mapping) {
    if (g.size() != h.size() || mapping.size() != g.size() || g.edge_count() != h.edge_count())
        return false;
    std::vector<char> hit(h.size(), 0);
    for (auto target : mapping) {
        if (target >= h.size() || hit[target]) return false;
        hit[target] = 1;
    }
    // Equal edge counts plus every g-edge mapping to an h-edge gives both directions.
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g.neighbors(v))
            if (!h.adjacent(mapping[v], mapping[w])) return false;
    return true;
}

} // namespace tokentw
