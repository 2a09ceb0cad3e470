#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tokentw {

// C(a, b) over exact integers; 0 when b < 0, a < 0 or a < b.
// Throws ResourceLimit if the value does not fit in int64.
std::int64_t binomial(std::int64_t a, std::int64_t b);

// Same as binomial() but clamps to INT64_MAX instead of throwing; used for
// size-cap checks before anything is allocated.
std::int64_t binomial_saturating(std::int64_t a, std::int64_t b);

// Lexicographic comparison of equal-length sorted tuples, elementwise.
// Shared by every construction that orders subsets.
int lex_compare(std::span<const int> lhs, std::span<const int> rhs);

inline bool lex_less_equal(std::span<const int> lhs, std::span<const int> rhs) {
    return lex_compare(lhs, rhs) <= 0;
}

// Lexicographic rank of a strictly increasing tuple of positions in [0, n)
// among all subsets of the same size.
std::size_t subset_rank(std::span<const int> positions, int n);

// Inverse of subset_rank.
std::vector<int> subset_unrank(std::size_t rank, int n, int k);

// Advances a strictly increasing tuple with entries <= hi to its
// lexicographic successor. Returns false (leaving the tuple unspecified) past the last one.
bool next_combination(std::vector<int>& tuple, int hi);

// Mixed-radix counter, last digit fastest. Returns false after wrapping
// past the final value.
bool advance_mixed_radix(std::vector<std::size_t>& digits, std::span<const std::size_t> radices);

// All k-subsets of [lo, hi] in lexicographic order.
std::vector<std::vector<int>> all_combinations(int lo, int hi, int k);

} // namespace tokentw
