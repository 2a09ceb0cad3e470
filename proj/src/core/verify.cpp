#include "verify.hpp"

#include "combinatorics.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

namespace tokentw {

using nlohmann::json;

std::string_view to_string(ItemStatus status) {
    switch (status) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Capped: return "capped";
    case ItemStatus::Error: return "error";
    }
    return "error";
}

bool SuiteReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.status == ItemStatus::Pass; });
}

bool SuiteReport::any(ItemStatus status) const {
    return std::any_of(items.begin(), items.end(), [&](const VerifyItem& i) { return i.status == status; });
}

namespace {

std::string key(const std::string& prefix, std::initializer_list<std::pair<const char*, int>> params) {
    std::string out = prefix;
    for (const auto& [name, value] : params) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "/%s=%02d", name, value);
        out += buf;
    }
    return out;
}

class Runner {
public:
    Runner(SuiteReport& report, const VerifyConfig& config) : report_(report), config_(config) {}

    const VerifyConfig& config() const { return config_; }

    int n_hi(int fallback) const { return config_.n_max.value_or(fallback); }
    int k_hi(int fallback) const { return config_.k_max.value_or(fallback); }

    // `body` fills the detail and returns whether the check held.
    void item(const std::string& key, const std::function<bool(json&)>& body) {
        VerifyItem it;
        it.key = key;
        it.detail = json::object();
        try {
            it.status = body(it.detail) ? ItemStatus::Pass : ItemStatus::Fail;
        } catch (const ResourceLimit& e) {
            it.status = ItemStatus::Capped;
            it.detail["reason"] = std::string("resource-limit: ") + e.what();
        } catch (const std::exception& e) {
            it.status = ItemStatus::Error;
            it.detail["reason"] = e.what();
        }
        report_.items.push_back(std::move(it));
    }

    json& summary() { return report_.summary; }

private:
    SuiteReport& report_;
    const VerifyConfig& config_;
};

TokenGraph host(Family family, int n, int k, const VerifyConfig& config) {
    return token_graph(generate(family, n), k, config.token_cap);
}

// Exact treewidth plus an independent replay of its elimination ordering.
int certified_treewidth(const Graph& g, const VerifyConfig& config, json& detail) {
    const auto tw = exact_treewidth(g, config.treewidth_cap);
    const int replay = elimination_width(g, tw.elimination_order);
    detail["oracle"] = tw.treewidth;
    detail["ordering_width"] = replay;
    if (replay != tw.treewidth) throw std::logic_error("elimination ordering does not certify the treewidth");
    return tw.treewidth;
}

bool check_decomposition(const TreeDecomposition& d, const TokenGraph& tg, json& detail) {
    const auto report = validate(d, tg);
    detail["valid"] = report.ok();
    detail["width"] = width(d);
    if (!report.ok()) {
        detail["tree"] = report.tree_ok;
        detail["coverage"] = report.coverage_ok;
        detail["edge_coverage"] = report.edge_ok;
        detail["trace_connectivity"] = report.connectivity_ok;
    }
    return report.ok();
}

void star_exact(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 3; n <= run.n_hi(6); ++n) {
        run.item(key("star-exact/tw", {{"n", n}}), [&](json& d) {
            d["expected"] = n - 1;
            return certified_treewidth(host(Family::Star, n, 2, cfg).graph(), cfg, d) == n - 1;
        });
    }
}

void path_exact(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 4; n <= run.n_hi(7); ++n) {
        run.item(key("path-exact/tw", {{"n", n}}), [&](json& d) {
            d["expected"] = n / 2;
            return certified_treewidth(host(Family::Path, n, 2, cfg).graph(), cfg, d) == n / 2;
        });
    }
    for (int n = 4; n <= std::max(10, run.n_hi(10)); ++n) {
        run.item(key("path-exact/max-border", {{"n", n}}), [&](json& d) {
            const auto g = host(Family::Path, n, 2, cfg).graph();
            const int mb = max_border(g, f2pn_ordering(n));
            d["expected"] = n / 2;
            d["max_border"] = mb;
            d["max_border_increasing_ties"] = max_border(g, f2pn_ordering_literal(n));
            return mb == n / 2;
        });
    }
}

void complete_exact(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 4; n <= run.n_hi(6); ++n) {
        run.item(key("complete-exact/tw", {{"n", n}}), [&](json& d) {
            const auto expected = f2kn_treewidth(n);
            d["expected"] = expected;
            return certified_treewidth(host(Family::Complete, n, 2, cfg).graph(), cfg, d) == expected;
        });
    }
    for (int n = 4; n <= std::max(12, run.n_hi(12)); ++n) {
        run.item(key("complete-exact/path-decomposition", {{"n", n}}), [&](json& d) {
            const auto expected = f2kn_treewidth(n);
            const auto decomposition = f2kn_path_decomposition(n);
            d["expected"] = expected;
            const bool valid = check_decomposition(decomposition, host(Family::Complete, n, 2, cfg), d);
            return valid && width(decomposition) == expected;
        });
    }
}

void bagsize(Runner& run) {
    std::int64_t checked = 0;
    std::int64_t mismatches = 0;
    for (int k = 2; k <= run.k_hi(4); ++k) {
        for (int n = k + 1; n <= run.n_hi(12); ++n) {
            run.item(key("bagsize", {{"k", k}, {"n", n}}), [&](json& d) {
                std::int64_t count = 0;
                std::int64_t bad = 0;
                for (const auto& x : lex_path_nodes(n, k)) {
                    ++count;
                    const auto enumerated = static_cast<std::int64_t>(lex_bag(n, k, x.members()).size());
                    if (bag_size_formula(x, n, k) != enumerated) {
                        if (bad == 0) d["first_mismatch"] = std::vector<int>(x.members().begin(), x.members().end());
                        ++bad;
                    }
                }
                d["checked"] = count;
                d["mismatches"] = bad;
                checked += count;
                mismatches += bad;
                return bad == 0;
            });
        }
    }
    run.summary()["bag_indices_checked"] = checked;
    run.summary()["mismatches"] = mismatches;
}

void lemmas(Runner& run) {
    std::int64_t tied_violations = 0;
    for (int k = 2; k <= run.k_hi(4); ++k) {
        for (int n = k + 1; n <= run.n_hi(12); ++n) {
            run.item(key("lemmas", {{"k", k}, {"n", n}}), [&](json& d) {
                const auto nodes = lex_path_nodes(n, k);
                std::vector<std::int64_t> sizes;
                for (const auto& x : nodes) sizes.push_back(static_cast<std::int64_t>(lex_bag(n, k, x.members()).size()));
                const auto best = *std::max_element(sizes.begin(), sizes.end());
                // nodes are in lexicographic order, so the first maximizer is the smallest
                const auto first = static_cast<std::size_t>(std::find(sizes.begin(), sizes.end(), best) - sizes.begin());
                const auto check = check_maximizer_lemmas(nodes[first], n, k);
                const auto lemma_max = max_bag(n, k);

                int ties = 0;
                int tie_violations = 0;
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    if (sizes[i] != best) continue;
                    ++ties;
                    const auto c = check_maximizer_lemmas(nodes[i], n, k);
                    if (!(c.first_entry_ok && c.tail_ok)) ++tie_violations;
                }
                tied_violations += tie_violations;

                d["argmax"] = std::vector<int>(nodes[first].members().begin(), nodes[first].members().end());
                d["size"] = best;
                d["first_entry_ok"] = check.first_entry_ok;
                d["tail_ok"] = check.tail_ok;
                d["maximizers"] = ties;
                d["maximizers_outside_lemmas"] = tie_violations;
                d["lemma_search_size"] = lemma_max.size;
                return check.first_entry_ok && check.tail_ok && lemma_max.size == best &&
                       lemma_max.index == nodes[first];
            });
        }
    }
    run.summary()["tied_maximizers_outside_lemmas"] = tied_violations;
}

void upper_bound(Runner& run) {
    const auto& cfg = run.config();
    for (int k = 2; k <= run.k_hi(4); ++k) {
        for (int n = k + 1; n <= run.n_hi(12); ++n) {
            run.item(key("upper-bound", {{"k", k}, {"n", n}}), [&](json& d) {
                const auto eval = evaluate_tw_kn_bound(n, k);
                const auto w = width(fkkn_lex_decomposition(n, k, cfg.token_cap));
                d["width"] = w;
                d["bound"] = eval.bound;
                d["literal_bound"] = eval.literal_bound;
                bool ok = w == eval.bound;
                if (k == 2 && n >= 4) {
                    d["exact"] = f2kn_treewidth(n);
                    ok = ok && eval.bound == f2kn_treewidth(n);
                }
                return ok;
            });
        }
    }
    for (int n = 6; n <= std::max(15, run.n_hi(15)); ++n) {
        run.item(key("upper-bound/corollary", {{"n", n}}), [&](json& d) {
            const auto corollary = f3kn_corollary_bound(n);
            const auto bound = upper_bound_tw_kn(n, 3);
            const auto w = width(fkkn_lex_decomposition(n, 3, cfg.token_cap));
            d["corollary"] = corollary;
            d["bound"] = bound;
            d["width"] = w;
            return corollary == bound && bound == w;
        });
    }
}

void validity(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 2; n <= run.n_hi(10); ++n) {
        for (int k = 1; k <= std::min(run.k_hi(4), n - 1); ++k) {
            run.item(key("validity/star", {{"n", n}, {"k", k}}), [&](json& d) {
                const auto decomposition = star_decomposition(n, k);
                const auto expected = k == 1 ? 1 : binomial(n, k - 1) - 1;
                d["expected_width"] = expected;
                return check_decomposition(decomposition, host(Family::Star, n, k, cfg), d) &&
                       width(decomposition) == expected;
            });
        }
    }
    for (int n = 3; n <= std::max(12, run.n_hi(12)); ++n) {
        run.item(key("validity/f2kn", {{"n", n}}), [&](json& d) {
            return check_decomposition(f2kn_path_decomposition(n), host(Family::Complete, n, 2, cfg), d);
        });
    }
    for (int k = 2; k <= run.k_hi(4); ++k) {
        const int hi = k == 3 ? std::max(15, run.n_hi(12)) : run.n_hi(12);
        for (int n = k + 1; n <= hi; ++n) {
            run.item(key("validity/lex", {{"k", k}, {"n", n}}), [&](json& d) {
                return check_decomposition(fkkn_lex_decomposition(n, k, cfg.token_cap),
                                           host(Family::Complete, n, k, cfg), d);
            });
            // F_k(P_n) spans the same vertices as F_k(K_n) with fewer edges.
            if (n <= 10) {
                run.item(key("validity/lex-on-path", {{"k", k}, {"n", n}}), [&](json& d) {
                    return check_decomposition(fkkn_lex_decomposition(n, k, cfg.token_cap),
                                               host(Family::Path, n, k, cfg), d);
                });
            }
        }
    }
}

void brambles(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 3; n <= run.n_hi(6); ++n) {
        run.item(key("brambles/star", {{"n", n}}), [&](json& d) {
            const auto b = star_bramble(n);
            const auto report = validate_bramble(b, host(Family::Star, n, 2, cfg).graph());
            const auto hs = min_hitting_set(b, cfg.hitting_node_cap);
            d["valid"] = report.ok();
            d["sets"] = b.sets.size();
            d["order"] = hs.size;
            d["expected"] = n;
            return report.ok() && hs.size == static_cast<std::size_t>(n);
        });
    }
    for (int n = 4; n <= run.n_hi(6); ++n) {
        run.item(key("brambles/complete", {{"n", n}}), [&](json& d) {
            const auto b = kn_bramble(n, cfg.bramble_set_cap);
            const auto report = validate_bramble(b, host(Family::Complete, n, 2, cfg).graph());
            const auto hs = min_hitting_set(b, cfg.hitting_node_cap);
            const auto lower = f2kn_treewidth(n) + 1;  // construction guarantee
            const auto upper = f2kn_treewidth(n) + 1;  // bramble number = tw + 1
            d["valid"] = report.ok();
            d["sets"] = b.sets.size();
            d["order"] = hs.size;
            d["guaranteed_lower"] = lower;
            d["search_nodes"] = hs.search_nodes;
            const auto order = static_cast<std::int64_t>(hs.size);
            return report.ok() && order >= lower && order <= upper;
        });
    }
}

Graph random_graph(std::mt19937_64& rng, int vertices) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = 0.2 + 0.6 * unit(rng);
    std::vector<int> labels(vertices);
    for (int i = 0; i < vertices; ++i) labels[i] = i;
    std::vector<Edge> edges;
    for (int a = 0; a < vertices; ++a)
        for (int b = a + 1; b < vertices; ++b)
            if (unit(rng) < density) edges.push_back({a, b});
    return Graph(std::move(labels), std::move(edges));
}

bool mmb_tw_check(const Graph& g, const VerifyConfig& cfg, json& d) {
    const auto mmb = mmb_exhaustive(g, cfg.mmb_cap);
    const auto tw = exact_treewidth(g, cfg.treewidth_cap);
    const int witness = max_border(g, mmb.witness);
    d["vertices"] = g.size();
    d["edges"] = g.edge_count();
    d["mmb"] = mmb.value;
    d["treewidth"] = tw.treewidth;
    return mmb.value == tw.treewidth && witness == mmb.value;
}

void mmb_tw(Runner& run) {
    const auto& cfg = run.config();
    int token_graphs = 0;
    for (Family family : {Family::Path, Family::Star, Family::Complete}) {
        for (int n = 1; n <= run.n_hi(5); ++n) {
            const auto base = generate(family, n);
            for (int k = 1; k < static_cast<int>(base.size()); ++k) {
                if (binomial_saturating(static_cast<int>(base.size()), k) > 7) continue;
                ++token_graphs;
                run.item(key(std::string("mmb-tw/token/") + std::string(to_string(family)), {{"n", n}, {"k", k}}),
                         [&](json& d) { return mmb_tw_check(token_graph(base, k, cfg.token_cap).graph(), cfg, d); });
            }
        }
    }
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_graphs; ++i) {
        const int vertices = 6 + static_cast<int>(rng() % 2);
        const auto g = random_graph(rng, vertices);
        run.item(key("mmb-tw/random", {{"i", i}}), [&](json& d) { return mmb_tw_check(g, cfg, d); });
    }
    run.summary()["token_graphs"] = token_graphs;
    run.summary()["random_graphs"] = cfg.random_graphs;
}

void spectral(Runner& run) {
    const auto& cfg = run.config();
    double max_diff = 0.0;
    const std::pair<Family, int> bases[] = {{Family::Path, 5}, {Family::Star, 4}, {Family::Complete, 5}};
    for (const auto& [family, n] : bases) {
        for (int k = 2; k <= 3; ++k) {
            run.item(key(std::string("spectral/eq1/") + std::string(to_string(family)), {{"n", n}, {"k", k}}),
                     [&](json& d) {
                         const auto base = generate(family, n);
                         const double base_l2 = lambda2(base, cfg.eigen_cap).value;
                         const double token_l2 = lambda2(token_graph(base, k, cfg.token_cap).graph(), cfg.eigen_cap).value;
                         const double diff = std::abs(base_l2 - token_l2);
                         max_diff = std::max(max_diff, diff);
                         d["lambda2_base"] = base_l2;
                         d["lambda2_token"] = token_l2;
                         d["difference"] = diff;
                         return diff <= 1e-6;
                     });
        }
    }
    for (int n = 2; n <= std::max(8, run.n_hi(8)); ++n) {
        run.item(key("spectral/star", {{"n", n}}), [&](json& d) {
            const double l2 = lambda2(generate(Family::Star, n), cfg.eigen_cap).value;
            d["lambda2"] = l2;
            return std::abs(l2 - 1.0) <= 1e-9;
        });
        run.item(key("spectral/complete", {{"n", n}}), [&](json& d) {
            const double l2 = lambda2(generate(Family::Complete, n), cfg.eigen_cap).value;
            d["lambda2"] = l2;
            return std::abs(l2 - n) <= 1e-9;
        });
    }
    for (Family family : {Family::Path, Family::Star, Family::Complete}) {
        for (int n = 2; n <= run.n_hi(6); ++n) {
            const int size = family == Family::Star ? n + 1 : n;
            for (int k = 1; k < size; ++k) {
                if (binomial_saturating(size, k) > static_cast<std::int64_t>(cfg.treewidth_cap)) continue;
                run.item(key(std::string("spectral/lower-bound/") + std::string(to_string(family)), {{"n", n}, {"k", k}}),
                         [&](json& d) {
                             const auto tg = host(family, n, k, cfg);
                             const auto report = spectral_lower_bound(tg, cfg.eigen_cap);
                             const int tw = exact_treewidth(tg.graph(), cfg.treewidth_cap).treewidth;
                             d["bound"] = report.chandran_lower_bound;
                             d["max_degree"] = report.max_degree;
                             d["treewidth"] = tw;
                             return report.chandran_lower_bound <= tw + 1e-9;
                         });
            }
        }
    }
    run.summary()["max_lambda2_difference"] = max_diff;
}

void structure(Runner& run) {
    const auto& cfg = run.config();
    for (int n = 2; n <= std::max(8, run.n_hi(8)); ++n) {
        for (int k = 1; k <= std::min(4, n - 1); ++k) {
            run.item(key("structure/johnson", {{"n", n}, {"k", k}}), [&](json& d) {
                const auto tg = host(Family::Complete, n, k, cfg);
                std::int64_t bad = 0;
                for (std::size_t a = 0; a < tg.size(); ++a) {
                    for (std::size_t b = a + 1; b < tg.size(); ++b) {
                        const auto& x = tg.vertex(a).members;
                        const auto& y = tg.vertex(b).members;
                        std::vector<int> common;
                        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
                        if ((static_cast<int>(common.size()) == k - 1) != tg.graph().adjacent(a, b)) ++bad;
                    }
                }
                d["mismatches"] = bad;
                return bad == 0;
            });
        }
    }
    for (Family family : {Family::Path, Family::Star, Family::Complete}) {
        for (int n = 2; n <= std::max(7, run.n_hi(7)); ++n) {
            const auto base = generate(family, n);
            const int size = static_cast<int>(base.size());
            for (int k = 1; k < size; ++k) {
                run.item(key(std::string("structure/complement/") + std::string(to_string(family)), {{"n", n}, {"k", k}}),
                         [&](json&) {
                             const auto map = complement_isomorphism(base, k);
                             return is_isomorphism(token_graph(base, k, cfg.token_cap).graph(),
                                                   token_graph(base, size - k, cfg.token_cap).graph(), map);
                         });
            }
        }
    }
    for (int n = 2; n <= std::max(8, run.n_hi(8)); ++n) {
        for (int k = 1; k <= std::min(3, n - 1); ++k) {
            run.item(key("structure/grid", {{"n", n}, {"k", k}}), [&](json& d) {
                const auto check = check_grid_embedding(n, k);
                d["injective"] = check.injective;
                d["isomorphic"] = check.isomorphic;
                return check.injective && check.isomorphic;
            });
        }
    }
}

using SuiteFn = void (*)(Runner&);

const std::vector<std::pair<std::string, std::vector<SuiteFn>>>& registry() {
    static const std::vector<std::pair<std::string, std::vector<SuiteFn>>> suites = {
        {"star-exact", {star_exact}},
        {"path-exact", {path_exact}},
        {"complete-exact", {complete_exact}},
        {"f2-exact", {star_exact, path_exact, complete_exact}},
        {"bagsize", {bagsize}},
        {"lemmas", {lemmas}},
        {"upper-bound", {upper_bound}},
        {"validity", {validity}},
        {"brambles", {brambles}},
        {"mmb-tw", {mmb_tw}},
        {"spectral", {spectral}},
        {"structure", {structure}},
        {"all",
         {star_exact, path_exact, complete_exact, bagsize, lemmas, upper_bound, validity, brambles, mmb_tw, spectral,
          structure}},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fns] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
    const auto& suites = registry();
    auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
    if (it == suites.end()) throw InvalidParameter("unknown suite \"" + name + "\"");
    if (config.random_graphs < 0) throw InvalidParameter("random graph count must be non-negative");

    SuiteReport report;
    report.suite = name;
    Runner runner(report, config);
    for (auto fn : it->second) fn(runner);
    std::stable_sort(report.items.begin(), report.items.end(),
                     [](const VerifyItem& a, const VerifyItem& b) { return a.key < b.key; });
    return report;
}

json to_json(const SuiteReport& report, const VerifyConfig& config) {
    json items = json::array();
    std::map<std::string, int> counts = {{"pass", 0}, {"fail", 0}, {"capped", 0}, {"error", 0}};
    for (const auto& item : report.items) {
        ++counts[std::string(to_string(item.status))];
        items.push_back({{"key", item.key}, {"status", std::string(to_string(item.status))}, {"detail", item.detail}});
    }
    json cfg = {{"seed", config.seed},
                {"random_graphs", config.random_graphs},
                {"caps",
                 {{"token_vertices", config.token_cap},
                  {"tw_vertices", config.treewidth_cap},
                  {"mmb_vertices", config.mmb_cap},
                  {"eigen_vertices", config.eigen_cap},
                  {"bramble_sets", config.bramble_set_cap},
                  {"hitting_nodes", config.hitting_node_cap}}}};
    if (config.n_max) cfg["n_max"] = *config.n_max;
    if (config.k_max) cfg["k_max"] = *config.k_max;
    return {{"suite", report.suite},
            {"seed", config.seed},
            {"passed", report.passed()},
            {"counts", counts},
            {"config", cfg},
            {"summary", report.summary},
            {"items", std::move(items)}};
}

} // namespace tokentw
