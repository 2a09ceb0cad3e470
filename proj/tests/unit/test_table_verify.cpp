#include "error.hpp"
#include "table.hpp"
#include "verify.hpp"

#include <gtest/gtest.h>

using namespace tokentw;

TEST(Table, CompleteKTwoRows) {
    const auto t = bound_table(Family::Complete, 2, 4, 8);
    ASSERT_EQ(t.rows.size(), 5u);
    const std::vector<std::int64_t> expected{4, 7, 10, 14, 18};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(t.rows[i].bounds.upper, expected[i]);
        EXPECT_EQ(t.rows[i].constructed, expected[i]);
    }
    EXPECT_EQ(t.rows[0].oracle, 4);
    EXPECT_EQ(t.rows[2].oracle, 10);
    EXPECT_TRUE(t.upper_monotone && t.constructed_monotone && t.oracle_monotone && t.consistent);
}

TEST(Table, RenderersAgree) {
    const auto t = bound_table(Family::Star, 2, 3, 6);
    const auto csv = render_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')).rfind("family,n,k", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
    const auto j = to_json(t);
    EXPECT_EQ(j["rows"].size(), 4u);
    EXPECT_TRUE(j["consistent"].get<bool>());
    EXPECT_NE(render_text(t).find("monotone"), std::string::npos);
}

TEST(Table, OracleSkippedOutsideCap) {
    TableOptions opts;
    opts.treewidth_cap = 10;
    const auto t = bound_table(Family::Path, 2, 4, 6, opts);
    EXPECT_TRUE(t.rows[0].oracle.has_value());   // 6 vertices
    EXPECT_FALSE(t.rows[2].oracle.has_value());  // 15 vertices
    EXPECT_FALSE(t.rows[2].skipped.empty());
    EXPECT_THROW(bound_table(Family::Complete, 1, 4, 6), InvalidParameter);
    EXPECT_THROW(bound_table(Family::Path, 2, 6, 4), InvalidParameter);
}

TEST(Verify, SmallSuitesPass) {
    for (const char* suite : {"star-exact", "bagsize", "lemmas", "structure"}) {
        const auto r = run_suite(suite);
        EXPECT_TRUE(r.passed()) << suite;
        EXPECT_FALSE(r.items.empty());
        EXPECT_TRUE(std::is_sorted(r.items.begin(), r.items.end(),
                                   [](const auto& a, const auto& b) { return a.key < b.key; }));
    }
    EXPECT_THROW(run_suite("nope"), InvalidParameter);
}

TEST(Verify, TinyCapsReportCapped) {
    VerifyConfig config;
    config.treewidth_cap = 8;
    const auto r = run_suite("complete-exact", config);
    EXPECT_FALSE(r.passed());
    EXPECT_TRUE(r.any(ItemStatus::Capped));
    EXPECT_FALSE(r.any(ItemStatus::Fail));
}

TEST(Verify, ReportIsDeterministic) {
    VerifyConfig config;
    config.random_graphs = 20;
    const auto a = to_json(run_suite("mmb-tw", config), config);
    const auto b = to_json(run_suite("mmb-tw", config), config);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a["seed"], kDefaultSeed);
}
