#include "oracles.hpp"

#include "combinatorics.hpp"
#include "error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

namespace tokentw {

VertexOrdering::VertexOrdering(std::vector<std::size_t> order, std::size_t vertex_count)
    : order_(std::move(order)) {
    if (order_.size() != vertex_count)
        throw InvalidParameter("ordering has " + std::to_string(order_.size()) + " entries for " +
                               std::to_string(vertex_count) + " vertices");
    std::vector<char> seen(vertex_count, 0);
    for (auto v : order_) {
        if (v >= vertex_count || seen[v]) throw InvalidParameter("ordering is not a permutation");
        seen[v] = 1;
    }
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v)
        for (auto w : g.neighbors(v)) adj[v] |= Mask{1} << w;
    return adj;
}

// Union of neighbourhoods of the component of `start` inside `allowed`.
// Returns {component, neighbourhood of component}.
std::pair<Mask, Mask> flood(const std::vector<Mask>& adj, Mask allowed, unsigned start) {
    Mask comp = Mask{1} << start;
    Mask frontier = comp;
    Mask nbhd = 0;
    while (frontier) {
        Mask reached = 0;
        for (Mask f = frontier; f; f &= f - 1) reached |= adj[std::countr_zero(f)];
        nbhd |= reached;
        frontier = reached & allowed & ~comp;
        comp |= frontier;
    }
    return {comp, nbhd};
}

int q_size(const std::vector<Mask>& adj, Mask before, unsigned v) {
    const Mask with_v = before | (Mask{1} << v);
    const auto [comp, nbhd] = flood(adj, with_v, v);
    return std::popcount(nbhd & ~with_v);
}

int border_mask(const std::vector<Mask>& adj, Mask subset) {
    int best = 0;
    for (Mask rest = subset; rest;) {
        const auto [comp, nbhd] = flood(adj, subset, static_cast<unsigned>(std::countr_zero(rest)));
        best = std::max(best, std::popcount(nbhd & ~comp));
        rest &= ~comp;
    }
    return best;
}

void check_cap(std::size_t size, std::size_t cap, std::size_t hard_max, const char* what) {
    if (cap > hard_max)
        throw InvalidParameter(std::string(what) + " cap " + std::to_string(cap) + " exceeds the maximum of " +
                               std::to_string(hard_max));
    if (size > cap)
        throw ResourceLimit(std::string(what) + " needs " + std::to_string(size) + " vertices, above cap " +
                            std::to_string(cap));
}

} // namespace

TreewidthResult exact_treewidth(const Graph& g, std::size_t cap) {
    check_cap(g.size(), cap, kMaxTreewidthCap, "exact treewidth");
    if (g.empty()) throw InvalidParameter("treewidth of the empty graph");
    const auto n = static_cast<unsigned>(g.size());
    const auto adj = adjacency_masks(g);
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

    std::vector<std::uint8_t> tw(std::size_t{1} << n, 0);
    for (Mask s = 1; s <= full && s != 0; ++s) {
        int best = std::numeric_limits<int>::max();
        for (Mask rest = s; rest; rest &= rest - 1) {
            const auto v = static_cast<unsigned>(std::countr_zero(rest));
            const Mask before = s & ~(Mask{1} << v);
            const int prior = tw[before];
            if (prior >= best) continue;
            best = std::min(best, std::max(prior, q_size(adj, before, v)));
        }
        tw[s] = static_cast<std::uint8_t>(best);
        if (s == full) break;
    }

    TreewidthResult result;
    result.treewidth = tw[full];
    // Walk back from V: the vertex achieving TW(S) is eliminated last within S.
    Mask s = full;
    while (s) {
        for (Mask rest = s; rest; rest &= rest - 1) {
            const auto v = static_cast<unsigned>(std::countr_zero(rest));
            const Mask before = s & ~(Mask{1} << v);
            if (std::max<int>(tw[before], q_size(adj, before, v)) == tw[s]) {
                result.elimination_order.push_back(v);
                s = before;
                break;
            }
        }
    }
    std::reverse(result.elimination_order.begin(), result.elimination_order.end());
    return result;
}

int elimination_width(const Graph& g, std::span<const std::size_t> order) {
    const VertexOrdering checked(std::vector<std::size_t>(order.begin(), order.end()), g.size());
    std::vector<std::set<std::size_t>> nbrs(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) nbrs[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<char> gone(g.size(), 0);
    int width = 0;
    for (auto v : checked.order()) {
        std::vector<std::size_t> later;
        for (auto w : nbrs[v])
            if (!gone[w]) later.push_back(w);
        width = std::max(width, static_cast<int>(later.size()));
        for (auto a : later)
            for (auto b : later)
                if (a != b) nbrs[a].insert(b);
        gone[v] = 1;
    }
    return width;
}

int border(const Graph& g, std::span<const std::size_t> subset) {
    if (subset.empty()) throw InvalidParameter("border of the empty set is undefined");
    int best = 0;
    for (const auto& comp : index_components(g, subset)) {
        std::vector<char> inside(g.size(), 0);
        for (auto v : comp) inside[v] = 1;
        std::vector<char> counted(g.size(), 0);
        int outside = 0;
        for (auto v : comp)
            for (auto w : g.neighbors(v))
                if (!inside[w] && !counted[w]) {
                    counted[w] = 1;
                    ++outside;
                }
        best = std::max(best, outside);
    }
    return best;
}

int border_of_labels(const Graph& g, std::span<const int> labels) {
    std::vector<std::size_t> indices;
    for (int label : labels) indices.push_back(g.index_of(label));
    return border(g, indices);
}

int max_border(const Graph& g, const VertexOrdering& pi) {
    if (pi.size() != g.size()) throw InvalidParameter("ordering does not match the graph");
    int best = 0;
    std::vector<std::size_t> prefix;
    for (auto v : pi.order()) {
        prefix.push_back(v);
        best = std::max(best, border(g, prefix));
    }
    return best;
}

namespace {

class MmbSearch {
public:
    explicit MmbSearch(const Graph& g)
        : n_(static_cast<unsigned>(g.size())), adj_(adjacency_masks(g)),
          reached_(std::size_t{1} << n_, std::numeric_limits<std::uint8_t>::max()),
          best_(static_cast<int>(n_) + 1) {}

    void run() { extend(0, 0); }
    int best() const { return best_; }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    void extend(Mask prefix, int running) {
        const Mask full = (Mask{1} << n_) - 1;
        if (prefix == full) {
            if (running < best_) {
                best_ = running;
                witness_ = current_;
            }
            return;
        }
        if (reached_[prefix] <= running) return;
        reached_[prefix] = static_cast<std::uint8_t>(running);
        for (unsigned v = 0; v < n_; ++v) {
            if (prefix >> v & 1) continue;
            const Mask next = prefix | (Mask{1} << v);
            const int r = std::max(running, border_mask(adj_, next));
            if (r >= best_) continue;
            current_.push_back(v);
            extend(next, r);
            current_.pop_back();
        }
    }

    unsigned n_;
    std::vector<Mask> adj_;
    std::vector<std::uint8_t> reached_;
    int best_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> witness_;
};

} // namespace

MmbResult mmb_exhaustive(const Graph& g, std::size_t cap) {
    check_cap(g.size(), cap, kMaxMmbCap, "minimax border search");
    if (g.empty()) throw InvalidParameter("minimax border of the empty graph");
    MmbSearch search(g);
    search.run();
    return MmbResult{search.best(), VertexOrdering(search.witness(), g.size())};
}

namespace {

VertexOrdering sum_ordering(int n, bool middle_out) {
    if (n < 2) throw InvalidParameter("F_2(P_n) ordering needs n >= 2, got " + std::to_string(n));
    auto pairs = all_combinations(1, n, 2);
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        const int sa = a[0] + a[1];
        const int sb = b[0] + b[1];
        if (sa != sb) return sa < sb;
        if (middle_out && sa == n) return a[0] > b[0];
        return a[0] < b[0];
    });
    std::vector<std::size_t> order;
    for (const auto& p : pairs) {
        const int positions[] = {p[0] - 1, p[1] - 1};
        order.push_back(subset_rank(positions, n));
    }
    const auto count = order.size();
    return VertexOrdering(std::move(order), count);
}

} // namespace

VertexOrdering f2pn_ordering(int n) { return sum_ordering(n, true); }

VertexOrdering f2pn_ordering_literal(int n) { return sum_ordering(n, false); }

std::vector<double> symmetric_eigenvalues(DenseMatrix m) {
    const std::size_t n = m.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (m.at(i, j) + m.at(j, i));
            m.at(i, j) = avg;
            m.at(j, i) = avg;
        }

    double scale = 0.0;
    for (double v : m.values) scale += v * v;
    const double tolerance = 1e-30 * std::max(scale, 1.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += m.at(i, j) * m.at(i, j);
        if (off <= tolerance) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = m.at(r, p);
                    const double arq = m.at(r, q);
                    m.at(r, p) = c * arp - s * arq;
                    m.at(r, q) = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = m.at(p, r);
                    const double aqr = m.at(q, r);
                    m.at(p, r) = c * apr - s * aqr;
                    m.at(q, r) = s * apr + c * aqr;
                }
            }
        }
    }

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = m.at(i, i);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

Lambda2 lambda2(const Graph& g, std::size_t cap) {
    if (g.size() < 2) throw InvalidParameter("algebraic connectivity needs at least 2 vertices");
    if (g.size() > cap)
        throw ResourceLimit("eigensolver needs " + std::to_string(g.size()) + " vertices, above cap " +
                            std::to_string(cap));
    if (!is_connected(g)) return Lambda2{0.0, true};
    const auto eigenvalues = symmetric_eigenvalues(laplacian(g));
    return Lambda2{eigenvalues[1], false};
}

double spectral_bound(std::size_t vertices, std::size_t max_degree, double lambda2) {
    if (max_degree == 0) return -1.0;
    return static_cast<double>(vertices) / (12.0 * static_cast<double>(max_degree)) * lambda2 - 1.0;
}

SpectralReport spectral_lower_bound(const TokenGraph& tg, std::size_t eigen_cap) {
    SpectralReport report;
    report.vertices = tg.size();
    report.max_degree = tg.graph().max_degree();
    const auto base = lambda2(tg.base(), eigen_cap);
    report.lambda2 = base.value;
    report.disconnected = base.disconnected;
    if (tg.size() >= 2 && tg.size() <= eigen_cap) report.lambda2_token = lambda2(tg.graph(), eigen_cap).value;
    report.chandran_lower_bound = spectral_bound(report.vertices, report.max_degree, report.lambda2);
    return report;
}

} // namespace tokentw
