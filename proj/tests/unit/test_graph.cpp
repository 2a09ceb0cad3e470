#include "error.hpp"
#include "graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace tokentw;

TEST(Generate, FamiliesHaveExpectedShape) {
    const auto p = generate(Family::Path, 5);
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.edge_count(), 4u);
    EXPECT_TRUE(p.adjacent_labels(2, 3));
    EXPECT_FALSE(p.adjacent_labels(1, 3));

    const auto s = generate(Family::Star, 4);
    EXPECT_EQ(s.size(), 5u);
    EXPECT_EQ(s.edge_count(), 4u);
    EXPECT_EQ(s.degree(s.index_of(0)), 4u);
    EXPECT_EQ(s.max_degree(), 4u);

    const auto k = generate(Family::Complete, 6);
    EXPECT_EQ(k.edge_count(), 15u);
    EXPECT_EQ(k.max_degree(), 5u);
}

TEST(Generate, EdgesAreSortedWithSmallerEndpointFirst) {
    for (auto f : {Family::Path, Family::Star, Family::Complete}) {
        const auto g = generate(f, 6);
        const auto e = g.edges();
        EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
        for (const auto& edge : e) EXPECT_LT(edge.u, edge.v);
    }
}

TEST(Graph, RejectsMalformedInput) {
    EXPECT_THROW(Graph({1, 1}, {}), InvalidParameter);
    EXPECT_THROW(Graph({1, 2}, {{1, 1}}), InvalidParameter);
    EXPECT_THROW(Graph({1, 2}, {{1, 2}, {2, 1}}), InvalidParameter);
    EXPECT_THROW(Graph({1, 2}, {{1, 3}}), InvalidParameter);
    EXPECT_THROW(generate(Family::Path, 0), InvalidParameter);
}

TEST(FamilyNames, RoundTrip) {
    for (auto f : {Family::Path, Family::Star, Family::Complete}) EXPECT_EQ(parse_family(to_string(f)), f);
    EXPECT_FALSE(parse_family("cycle").has_value());
}

TEST(CartesianProduct, FourCycleAndGrid) {
    const auto p2 = generate(Family::Path, 2);
    const auto sq = cartesian_product(p2, p2);
    EXPECT_EQ(sq.graph.size(), 4u);
    EXPECT_EQ(sq.graph.edge_count(), 4u);
    for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(sq.graph.degree(v), 2u);

    const auto p3 = generate(Family::Path, 3);
    const auto grid = cartesian_product(p3, p3);
    EXPECT_EQ(grid.graph.size(), 9u);
    EXPECT_EQ(grid.graph.edge_count(), 12u);
    // Adjacent iff exactly one coordinate moves along an edge.
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            const auto& ca = grid.coordinates[grid.graph.label_at(a)];
            const auto& cb = grid.coordinates[grid.graph.label_at(b)];
            const bool expected = (ca[0] == cb[0] && std::abs(ca[1] - cb[1]) == 1) ||
                                  (ca[1] == cb[1] && std::abs(ca[0] - cb[0]) == 1);
            EXPECT_EQ(grid.graph.adjacent(a, b), expected);
        }
}

TEST(Components, SplitsInducedSubgraph) {
    const auto p = generate(Family::Path, 6);
    std::vector<int> s{1, 2, 4, 6};
    const auto comps = components(p, s);
    ASSERT_EQ(comps.size(), 3u);
    EXPECT_EQ(comps[0], (std::vector<int>{1, 2}));
    EXPECT_EQ(comps[1], (std::vector<int>{4}));
    EXPECT_EQ(comps[2], (std::vector<int>{6}));
    EXPECT_TRUE(is_connected(p));
    EXPECT_FALSE(is_connected(Graph({1, 2}, {})));
    const auto sub = induced_subgraph(p, s);
    EXPECT_EQ(sub.size(), 4u);
    EXPECT_EQ(sub.edge_count(), 1u);
}

TEST(Laplacian, RowsSumToZeroAndDiagonalIsDegree) {
    const auto s = generate(Family::Star, 4);
    const auto l = laplacian(s);
    for (std::size_t i = 0; i < l.n; ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < l.n; ++j) sum += l.at(i, j);
        EXPECT_DOUBLE_EQ(sum, 0.0);
        EXPECT_DOUBLE_EQ(l.at(i, i), static_cast<double>(s.degree(i)));
    }
    EXPECT_DOUBLE_EQ(l.at(0, 1), -1.0);
}

TEST(Isomorphism, DetectsAdjacencyPreservation) {
    const auto p = generate(Family::Path, 4);
    std::vector<std::size_t> reverse{3, 2, 1, 0};
    std::vector<std::size_t> swap{1, 0, 2, 3};
    EXPECT_TRUE(is_isomorphism(p, p, reverse));
    EXPECT_FALSE(is_isomorphism(p, p, swap));
}
