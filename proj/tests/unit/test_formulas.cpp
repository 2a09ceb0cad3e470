#include "decomposition.hpp"
#include "error.hpp"
#include "formulas.hpp"

#include <gtest/gtest.h>

using namespace tokentw;

TEST(Formulas, StarExamples) {
    const auto r = star_bounds(4, 2);
    EXPECT_EQ(r.upper, 3);
    EXPECT_EQ(r.exact, 3);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(star_bounds(6, 3).upper, 14);
    for (int n = 2; n <= 8; ++n) EXPECT_EQ(star_bounds(n, 1).exact, 1);
}

TEST(Formulas, PathExamples) {
    EXPECT_EQ(path_bounds(6, 2).exact, 3);
    EXPECT_EQ(path_bounds(7, 2).exact, 3);
    EXPECT_EQ(path_bounds(7, 2).upper, 3);
    EXPECT_EQ(path_bounds(6, 1).exact, 1);
    EXPECT_EQ(path_bounds(8, 3).upper, upper_bound_tw_kn(8, 3));
}

TEST(Formulas, CompleteExamples) {
    EXPECT_EQ(complete_bounds(6, 2).exact, 10);
    EXPECT_EQ(complete_bounds(7, 2).exact, 14);
    EXPECT_EQ(complete_bounds(6, 3).upper, 13);
    EXPECT_THROW(complete_bounds(6, 1), InvalidParameter);
    const auto odd = complete_bounds(5, 4);
    EXPECT_EQ(odd.upper, 4);
    EXPECT_EQ(odd.literal_upper, 5);
    EXPECT_FALSE(odd.notes.empty());
}

TEST(Formulas, F2KnClosedFormMatchesConstruction) {
    for (int n = 4; n <= 12; ++n) {
        const std::int64_t expected = n % 2 == 0 ? (n / 2) * (n / 2 - 1) + n - 2 : ((n - 1) / 2) * ((n - 1) / 2) + n - 2;
        EXPECT_EQ(f2kn_treewidth(n), expected);
        EXPECT_EQ(upper_bound_tw_kn(n, 2), expected);
        EXPECT_EQ(width(f2kn_path_decomposition(n)), expected);
    }
}

TEST(Formulas, F3KnCorollaryMatchesUpperBound) {
    for (int n = 6; n <= 15; ++n) {
        const auto r = complete_bounds(n, 3);
        ASSERT_TRUE(r.corollary_upper.has_value());
        EXPECT_EQ(*r.corollary_upper, r.upper) << n;
        EXPECT_EQ(f3kn_corollary_bound(n), upper_bound_tw_kn(n, 3)) << n;
    }
}

TEST(Formulas, LowerBoundsNeverExceedUpper) {
    for (auto f : {Family::Path, Family::Star, Family::Complete})
        for (int n = 4; n <= 14; ++n)
            for (int k = f == Family::Complete ? 2 : 1; k <= std::min(4, n - 1); ++k) {
                const auto r = family_bounds(f, n, k);
                EXPECT_TRUE(r.consistent()) << to_string(f) << " " << n << " " << k;
                if (r.lower) EXPECT_LE(*r.lower, static_cast<double>(r.upper));
                EXPECT_FALSE(r.sources.empty());
            }
}

TEST(Formulas, ConsistencyDetectsViolations) {
    BoundReport r;
    r.lower = 5.0;
    r.upper = 4;
    EXPECT_FALSE(r.consistent());
    r.lower = 1.0;
    r.exact = 6;
    EXPECT_FALSE(r.consistent());
    r.exact = 3;
    EXPECT_TRUE(r.consistent());
}
