#include "token_graph.hpp"

#include "combinatorics.hpp"
#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace tokentw {

namespace {

void check_token_range(std::size_t n, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= n)
        throw InvalidParameter("token count k=" + std::to_string(k) + " must satisfy 1 <= k <= n-1 (n=" +
                               std::to_string(n) + ")");
}

bool is_path_graph(const Graph& g) {
    const auto n = static_cast<int>(g.size());
    if (n == 0) return false;
    for (int i = 0; i < n; ++i)
        if (g.label_at(i) != i + 1) return false;
    if (g.edge_count() != static_cast<std::size_t>(n - 1)) return false;
    for (const auto& e : g.edges())
        if (e.v != e.u + 1) return false;
    return true;
}

} // namespace

TokenGraph::TokenGraph(Graph base, int k, std::size_t cap) : base_(std::move(base)), k_(k) {
    const int n = static_cast<int>(base_.size());
    check_token_range(base_.size(), k);
    const auto count = binomial_saturating(n, k);
    if (count < 0 || static_cast<std::uint64_t>(count) > cap)
        throw ResourceLimit("token graph F_" + std::to_string(k) + " of a " + std::to_string(n) +
                            "-vertex graph has " + std::to_string(count) + " vertices, above cap " +
                            std::to_string(cap));

    table_.reserve(static_cast<std::size_t>(count));
    std::vector<Edge> edges;
    std::vector<char> member(n, 0);
    std::vector<int> positions(k);
    std::iota(positions.begin(), positions.end(), 0);
    std::vector<int> swapped(k);
    std::size_t index = 0;
    do {
        TokenVertex tv;
        tv.members.reserve(k);
        for (int p : positions) tv.members.push_back(base_.label_at(p));
        table_.push_back(std::move(tv));

        for (int p : positions) member[p] = 1;
        // Neighbours differ by one swap a -> b along a base edge.
        for (int slot = 0; slot < k; ++slot) {
            const int a = positions[slot];
            for (auto nb : base_.neighbors(a)) {
                const int b = static_cast<int>(nb);
                if (member[b]) continue;
                swapped = positions;
                swapped[slot] = b;
                std::sort(swapped.begin(), swapped.end());
                const auto other = subset_rank(swapped, n);
                if (other > index) edges.push_back({static_cast<int>(index), static_cast<int>(other)});
            }
        }
        for (int p : positions) member[p] = 0;
        ++index;
    } while (next_combination(positions, n - 1));

    std::vector<int> labels(table_.size());
    std::iota(labels.begin(), labels.end(), 0);
    graph_ = Graph(std::move(labels), std::move(edges));
}

std::size_t TokenGraph::index_of(const TokenVertex& vertex) const {
    if (vertex.members.size() != static_cast<std::size_t>(k_))
        throw InvalidParameter("token vertex has " + std::to_string(vertex.members.size()) +
                               " members, expected " + std::to_string(k_));
    return token_rank(base_, vertex.members);
}

std::size_t token_rank(const Graph& base, std::span<const int> members) {
    std::vector<int> positions;
    positions.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i > 0 && members[i] <= members[i - 1])
            throw InvalidParameter("token vertex members must be strictly increasing");
        positions.push_back(static_cast<int>(base.index_of(members[i])));
    }
    return subset_rank(positions, static_cast<int>(base.size()));
}

TokenVertex complement(const Graph& base, const TokenVertex& vertex) {
    TokenVertex out;
    for (int label : base.labels())
        if (!std::binary_search(vertex.members.begin(), vertex.members.end(), label))
            out.members.push_back(label);
    return out;
}

std::vector<std::size_t> complement_isomorphism(const Graph& base, int k) {
    check_token_range(base.size(), k);
    const int n = static_cast<int>(base.size());
    std::vector<std::size_t> mapping;
    for (const auto& positions : all_combinations(0, n - 1, k)) {
        TokenVertex tv;
        for (int p : positions) tv.members.push_back(base.label_at(p));
        mapping.push_back(token_rank(base, complement(base, tv).members));
    }
    return mapping;
}

std::vector<std::vector<int>> grid_embedding(const TokenGraph& tg) {
    if (!is_path_graph(tg.base()))
        throw InvalidParameter("grid embedding is defined only for the path P_n with labels 1..n");
    std::vector<std::vector<int>> image;
    image.reserve(tg.size());
    for (const auto& tv : tg.vertex_table()) {
        std::vector<int> point(tv.members.size());
        for (std::size_t i = 0; i < point.size(); ++i) point[i] = tv.members[i] - static_cast<int>(i);
        image.push_back(std::move(point));
    }
    return image;
}

std::vector<std::vector<int>> grid_embedding(int n, int k) {
    return grid_embedding(TokenGraph(generate(Family::Path, n), k));
}

GridEmbeddingCheck check_grid_embedding(int n, int k) {
    const TokenGraph tg(generate(Family::Path, n), k);
    const auto image = grid_embedding(tg);

    GridEmbeddingCheck check;
    std::map<std::vector<int>, std::size_t> seen;
    for (std::size_t i = 0; i < image.size(); ++i) seen.emplace(image[i], i);
    check.injective = seen.size() == image.size();
    if (!check.injective) return check;

    const Graph side = generate(Family::Path, n - k + 1);
    std::vector<Graph> factors(static_cast<std::size_t>(k), side);
    const auto grid = cartesian_product(factors);

    std::map<std::vector<int>, int> grid_label;
    for (std::size_t v = 0; v < grid.coordinates.size(); ++v)
        grid_label.emplace(grid.coordinates[v], static_cast<int>(v));

    std::vector<int> image_labels;
    for (const auto& point : image) {
        auto it = grid_label.find(point);
        if (it == grid_label.end()) return check;
        image_labels.push_back(it->second);
    }
    const Graph induced = induced_subgraph(grid.graph, image_labels);
    std::vector<std::size_t> mapping;
    for (int label : image_labels) mapping.push_back(induced.index_of(label));
    check.isomorphic = is_isomorphism(tg.graph(), induced, mapping);
    return check;
}

namespace {

std::vector<std::vector<int>> checked_parts(const Graph& g, std::span<const std::vector<int>> parts) {
    if (parts.empty()) throw InvalidParameter("token configuration needs at least one part");
    std::vector<std::vector<int>> sorted;
    std::vector<char> used(g.size(), 0);
    for (const auto& part : parts) {
        if (part.empty()) throw InvalidParameter("token configuration part is empty");
        auto p = part;
        std::sort(p.begin(), p.end());
        for (int label : p) {
            const auto idx = g.index_of(label);
            if (used[idx]) throw InvalidParameter("token configuration parts overlap at vertex " +
                                                  std::to_string(label));
            used[idx] = 1;
        }
        sorted.push_back(std::move(p));
    }
    return sorted;
}

} // namespace

TokenConfigSubgraph token_config_subgraph(const Graph& g, std::span<const std::vector<int>> parts) {
    const auto sorted_parts = checked_parts(g, parts);
    const std::size_t k = sorted_parts.size();

    TokenConfigSubgraph out;
    std::vector<std::vector<int>> members;
    std::vector<std::size_t> radices;
    for (const auto& part : sorted_parts) radices.push_back(part.size());
    std::vector<std::size_t> cursor(k, 0);
    do {
        std::vector<int> coord(k);
        for (std::size_t i = 0; i < k; ++i) coord[i] = sorted_parts[i][cursor[i]];
        auto sorted = coord;
        std::sort(sorted.begin(), sorted.end());
        out.coordinates.push_back(std::move(coord));
        members.push_back(std::move(sorted));
    } while (advance_mixed_radix(cursor, radices));

    std::vector<int> labels;
    for (const auto& m : members) labels.push_back(static_cast<int>(token_rank(g, m)));

    // Adjacency straight from the token-graph rule: symmetric difference is a base edge.
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            std::vector<int> diff;
            std::set_symmetric_difference(members[a].begin(), members[a].end(), members[b].begin(),
                                          members[b].end(), std::back_inserter(diff));
            if (diff.size() == 2 && g.adjacent_labels(diff[0], diff[1]))
                edges.push_back({labels[a], labels[b]});
        }
    }

    // Reorder coordinates to follow the graph's ascending-label indexing.
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return labels[x] < labels[y]; });
    std::vector<std::vector<int>> coords;
    for (auto i : order) coords.push_back(out.coordinates[i]);
    out.coordinates = std::move(coords);
    out.graph = Graph(std::move(labels), std::move(edges));
    return out;
}

bool token_config_matches_product(const Graph& g, std::span<const std::vector<int>> parts) {
    const auto sub = token_config_subgraph(g, parts);
    const auto sorted_parts = checked_parts(g, parts);
    std::vector<Graph> factors;
    for (const auto& part : sorted_parts) factors.push_back(induced_subgraph(g, part));
    const auto product = cartesian_product(factors);

    std::map<std::vector<int>, std::size_t> product_index;
    for (std::size_t v = 0; v < product.coordinates.size(); ++v)
        product_index.emplace(product.coordinates[v], product.graph.index_of(static_cast<int>(v)));

    std::vector<std::size_t> mapping;
    for (const auto& coord : sub.coordinates) {
        auto it = product_index.find(coord);
        if (it == product_index.end()) return false;
        mapping.push_back(it->second);
    }
    return is_isomorphism(sub.graph, product.graph, mapping);
}

} // namespace tokentw
