#include "combinatorics.hpp"

#include "error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tokentw {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

// Returns false on overflow.
bool binomial_checked(std::int64_t a, std::int64_t b, std::int64_t& out) {
    if (b < 0 || a < 0 || a < b) {
        out = 0;
        return true;
    }
    if (b > a - b) b = a - b;
    __int128 r = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        // r * (a - i) / (i + 1) stays integral at each step
        r = r * (a - i) / (i + 1);
        if (r > kInt64Max) return false;
    }
    out = static_cast<std::int64_t>(r);
    return true;
}

} // namespace

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (!binomial_checked(a, b, out))
        throw ResourceLimit("binomial C(" + std::to_string(a) + "," + std::to_string(b) +
                            ") overflows 64-bit integers");
    return out;
}

std::int64_t binomial_saturating(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (!binomial_checked(a, b, out)) return kInt64Max;
    return out;
}

int lex_compare(std::span<const int> lhs, std::span<const int> rhs) {
    const std::size_t m = std::min(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (lhs[i] < rhs[i]) return -1;
        if (lhs[i] > rhs[i]) return 1;
    }
    if (lhs.size() == rhs.size()) return 0;
    return lhs.size() < rhs.size() ? -1 : 1;
}

std::size_t subset_rank(std::span<const int> positions, int n) {
    // rank = C(n,k) - 1 - sum_i C(n-1-c_i, k-i)
    const auto k = static_cast<std::int64_t>(positions.size());
    std::int64_t rank = binomial(n, k) - 1;
    for (std::int64_t i = 0; i < k; ++i)
        rank -= binomial(n - 1 - positions[i], k - i);
    return static_cast<std::size_t>(rank);
}

std::vector<int> subset_unrank(std::size_t rank, int n, int k) {
    std::vector<int> out;
    out.reserve(k);
    auto remaining = static_cast<std::int64_t>(rank);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        // smallest-first: count subsets that start with `next` at this slot
        while (true) {
            const std::int64_t block = binomial(n - 1 - next, k - 1 - i);
            if (remaining < block) break;
            remaining -= block;
            ++next;
        }
        out.push_back(next);
        ++next;
    }
    return out;
}

bool next_combination(std::vector<int>& tuple, int hi) {
    const int k = static_cast<int>(tuple.size());
    int i = k - 1;
    while (i >= 0 && tuple[i] == hi - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++tuple[i];
    for (int j = i + 1; j < k; ++j) tuple[j] = tuple[j - 1] + 1;
    return true;
}

bool advance_mixed_radix(std::vector<std::size_t>& digits, std::span<const std::size_t> radices) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radices[i]) return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<std::vector<int>> all_combinations(int lo, int hi, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || hi - lo + 1 < k) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = lo + i;
    do {
        out.push_back(cur);
    } while (next_combination(cur, hi));
    return out;
}

} // namespace tokentw
