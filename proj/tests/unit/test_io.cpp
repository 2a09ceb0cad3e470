#include "bramble.hpp"
#include "error.hpp"
#include "io.hpp"

#include <gtest/gtest.h>

using namespace tokentw;
using nlohmann::json;

TEST(Io, GraphRoundTripAndSchema) {
    const auto g = generate(Family::Star, 3);
    const auto j = to_json(g);
    EXPECT_EQ(j["labels"], json({0, 1, 2, 3}));
    EXPECT_EQ(j["edges"], json({{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(graph_from_json(j), g);
    // Unsorted input edges are accepted and normalized.
    const auto h = graph_from_json(json::parse(R"({"labels":[3,1,2],"edges":[[3,2],[2,1]]})"));
    EXPECT_EQ(to_json(h)["edges"], json({{1, 2}, {2, 3}}));
}

TEST(Io, TokenGraphHasVertexTable) {
    const auto tg = token_graph(generate(Family::Path, 4), 2);
    const auto j = to_json(tg, HostRef{Family::Path, 4, 2});
    ASSERT_EQ(j["vertex_table"].size(), 6u);
    EXPECT_EQ(j["vertex_table"][0], json({1, 2}));
    EXPECT_EQ(j["labels"].size(), 6u);
    EXPECT_EQ(host_of(j), (HostRef{Family::Path, 4, 2}));
}

TEST(Io, DecompositionRoundTrip) {
    const auto d = star_decomposition(4, 2);
    const auto j = to_json(d);
    EXPECT_FALSE(j["is_path"].get<bool>());
    EXPECT_TRUE(j["bags"].is_object());
    EXPECT_EQ(host_of(j), (HostRef{Family::Star, 4, 2}));
    const auto back = decomposition_from_json(j);
    EXPECT_EQ(back.bags, d.bags);
    EXPECT_EQ(back.tree, d.tree);
    EXPECT_EQ(back.host, d.host);
    EXPECT_EQ(to_json(back), j);

    const auto p = f2kn_path_decomposition(5);
    EXPECT_TRUE(to_json(p)["is_path"].get<bool>());
    EXPECT_TRUE(decomposition_from_json(to_json(p)).is_path);
}

TEST(Io, BrambleRoundTrip) {
    const auto b = kn_bramble(4);
    const auto j = to_json(b);
    EXPECT_EQ(j["sets"].size(), 6u);
    const auto back = bramble_from_json(j);
    EXPECT_EQ(back.sets, b.sets);
    EXPECT_EQ(back.host, b.host);
}

TEST(Io, MalformedDocumentsRaiseParseError) {
    EXPECT_THROW(parse_document("{not json"), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"labels":[1,2]})")), ParseError);
    EXPECT_THROW(graph_from_json(json::parse(R"({"labels":"x","edges":[]})")), ParseError);
    EXPECT_THROW(decomposition_from_json(json::parse(R"({"is_path":false,"tree_edges":[],"bags":{"a":[1]}})")),
                 ParseError);
    EXPECT_THROW(bramble_from_json(json::parse(R"({"sets":[[1,"x"]]})")), ParseError);
    EXPECT_THROW(host_from_json(json::parse(R"({"family":"cycle","n":4,"k":2})")), ParseError);
}

TEST(Io, ValidationReportFields) {
    const auto host = build_host({Family::Star, 4, 2});
    const auto j = to_json(validate(star_decomposition(4, 2), host));
    EXPECT_TRUE(j["ok"].get<bool>());
    for (const char* key : {"tree", "coverage", "edge_coverage", "trace_connectivity"}) EXPECT_TRUE(j.contains(key)) << key;
}
