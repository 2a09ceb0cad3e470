#pragma once

#include "graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tokentw {

// Leading-order behaviour of a bound whose finite-n form carries Θ(·) terms.
// Reported for reference only, never compared against finite values.
struct AsymptoticTerm {
    std::string side;        // "lower" or "upper"
    std::string expression;  // human-readable form
    double leading_constant = 0.0;
    int exponent = 0;        // power of n
};

struct BoundReport {
    Family family = Family::Complete;
    int n = 0;
    int k = 0;
    std::optional<double> lower;
    std::int64_t upper = 0;
    std::optional<std::int64_t> exact;
    std::optional<std::int64_t> corollary_upper;  // k = 3 complete only
    std::optional<std::int64_t> literal_upper;    // unclamped closed form, complete only
    std::vector<std::string> sources;
    std::vector<AsymptoticTerm> asymptotics;
    std::vector<std::string> notes;

    // lower <= exact <= upper wherever present.
    bool consistent() const;
};

// tw(F_2(K_n)): n/2 (n/2 - 1) + n - 2 for even n, ((n-1)/2)^2 + n - 2 for odd n.
std::int64_t f2kn_treewidth(int n);

// ceil(n/3) C(n - ceil(n/3), 2) + ceil(n/3)(ceil(n/3)+1)/2 - 2.
std::int64_t f3kn_corollary_bound(int n);

BoundReport star_bounds(int n, int k);
BoundReport path_bounds(int n, int k);
BoundReport complete_bounds(int n, int k);
BoundReport family_bounds(Family family, int n, int k);

} // namespace tokentw
