#include "formulas.hpp"

#include "combinatorics.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tokentw {

bool BoundReport::consistent() const {
    const double up = static_cast<double>(upper);
    if (lower && *lower > up + 1e-9) return false;
    if (exact) {
        if (lower && *lower > static_cast<double>(*exact) + 1e-9) return false;
        if (*exact > upper) return false;
    }
    return true;
}

namespace {

void require_range(int n, int k, int k_min) {
    if (k < k_min || k > n - 1)
        throw InvalidParameter("parameters n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                               " must satisfy " + std::to_string(k_min) + " <= k <= n-1");
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

std::int64_t f2kn_treewidth(int n) {
    if (n < 3) throw InvalidParameter("F_2(K_n) treewidth formula needs n >= 3");
    const std::int64_t m = n;
    if (n % 2 == 0) return (m / 2) * (m / 2 - 1) + m - 2;
    return ((m - 1) / 2) * ((m - 1) / 2) + m - 2;
}

std::int64_t f3kn_corollary_bound(int n) {
    if (n < 4) throw InvalidParameter("F_3(K_n) bound needs n >= 4");
    const std::int64_t c = (n + 2) / 3;
    return c * binomial(n - c, 2) + c * (c + 1) / 2 - 2;
}

BoundReport star_bounds(int n, int k) {
    require_range(n, k, 1);
    BoundReport r;
    r.family = Family::Star;
    r.n = n;
    r.k = k;

    // Spectral bound with lambda2(S_n) = 1; the largest degree of F_k(S_n)
    // is n-k+1 (center token free to move) unless k exceeds it.
    const auto vertices = static_cast<std::size_t>(binomial(n + 1, k));
    const auto max_degree = static_cast<std::size_t>(std::max(n - k + 1, k));
    r.lower = spectral_bound(vertices, max_degree, 1.0);
    r.sources.push_back("spectral-bound");

    if (k == 1) {
        // C(n,0) - 1 = 0 undercounts: the leaf bags {A, {0}} have two vertices.
        r.upper = 1;
        r.exact = 1;
        r.notes.push_back("k=1: F_1(S_n) is the star itself; decomposition bound C(n,k-1)-1 does not apply");
        r.sources.push_back("star-is-a-tree");
    } else {
        r.upper = std::max<std::int64_t>(binomial(n, k - 1), k + 1) - 1;
        r.sources.push_back("star-decomposition-width");
    }
    if (k == 2) {
        r.exact = n - 1;
        r.sources.push_back("star-bramble-order");
    }
    r.asymptotics.push_back({"lower", "n^(k-1) / (12 k!)", 1.0 / (12.0 * factorial(k)), k - 1});
    r.asymptotics.push_back({"upper", "k n^(k-1) / k!", k / factorial(k), k - 1});
    return r;
}

BoundReport path_bounds(int n, int k) {
    require_range(n, k, 1);
    BoundReport r;
    r.family = Family::Path;
    r.n = n;
    r.k = k;

    // lambda2(P_n) = 2(1 - cos(pi/n)); min(2k, 2(n-k)) bounds the degree of
    // F_k(P_n) from above, which keeps the spectral value a valid lower bound.
    const double lambda = 2.0 * (1.0 - std::cos(std::numbers::pi / n));
    const auto vertices = static_cast<std::size_t>(binomial(n, k));
    const auto degree_bound = static_cast<std::size_t>(std::min(2 * k, 2 * (n - k)));
    r.lower = spectral_bound(vertices, degree_bound, lambda);
    r.sources.push_back("spectral-bound");

    if (k == 1) {
        r.upper = 1;
        r.exact = 1;
        r.sources.push_back("path-is-a-tree");
    } else if (k == 2) {
        r.upper = n / 2;
        r.exact = n / 2;
        r.sources.push_back("sum-ordering-max-border");
    } else {
        // F_k(P_n) is a spanning subgraph of F_k(K_n).
        r.upper = upper_bound_tw_kn(n, k);
        r.sources.push_back("subgraph-of-johnson-graph");
    }
    r.asymptotics.push_back({"lower", "Theta(floor(n/k)^(k-1))", 1.0, k - 1});
    r.asymptotics.push_back({"upper", "Theta((n-k+1)^(k-1))", 1.0, k - 1});
    return r;
}

BoundReport complete_bounds(int n, int k) {
    require_range(n, k, 2);
    BoundReport r;
    r.family = Family::Complete;
    r.n = n;
    r.k = k;

    // lambda2(K_n) = n, max degree k(n-k).
    const auto vertices = static_cast<std::size_t>(binomial(n, k));
    r.lower = spectral_bound(vertices, static_cast<std::size_t>(k) * (n - k), static_cast<double>(n));
    r.sources.push_back("spectral-bound");

    const auto eval = evaluate_tw_kn_bound(n, k);
    r.upper = eval.bound;
    r.literal_upper = eval.literal_bound;
    r.sources.push_back("lexicographic-path-decomposition");
    if (eval.literal_bound != eval.bound)
        r.notes.push_back("closed form evaluated at an invalid bag index; clamped to the lemma-constrained maximizer");

    if (k == 2 && n >= 4) {
        r.exact = f2kn_treewidth(n);
        r.sources.push_back("f2kn-path-decomposition-and-bramble");
    }
    if (k == 3) {
        r.corollary_upper = f3kn_corollary_bound(n);
        r.sources.push_back("f3kn-closed-form");
    }
    r.asymptotics.push_back({"lower", "n^k / (12 k k!)", 1.0 / (12.0 * k * factorial(k)), k});
    return r;
}

BoundReport family_bounds(Family family, int n, int k) {
    switch (family) {
    case Family::Star: return star_bounds(n, k);
    case Family::Path: return path_bounds(n, k);
    case Family::Complete: return complete_bounds(n, k);
    }
    throw InvalidParameter("unknown family");
}

} // namespace tokentw
