#include "tokentw/tokentw.h"

#include "bramble.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "table.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct tw_graph {
    tokentw::Graph g;
};

struct tw_token_graph {
    tokentw::TokenGraph tg;
    tokentw::HostRef host;
};

struct tw_decomposition {
    tokentw::TreeDecomposition d;
};

struct tw_bramble {
    tokentw::Bramble b;
};

namespace {

using nlohmann::json;
using namespace tokentw;

thread_local std::string last_error;

template <typename F>
tw_status guard(F&& body) {
    try {
        body();
        last_error.clear();
        return TW_OK;
    } catch (const ParseError& e) {
        last_error = e.what();
        return TW_ERR_PARSE;
    } catch (const InvalidParameter& e) {
        last_error = e.what();
        return TW_ERR_INVALID;
    } catch (const ResourceLimit& e) {
        last_error = e.what();
        return TW_ERR_RESOURCE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return TW_ERR_RESOURCE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return TW_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return TW_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) throw InvalidParameter(std::string(what) + " is null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out) {
    require(out, "output pointer");
    *out = dup(j.dump());
}

Family family_of(const char* name) {
    require(name, "family");
    auto f = parse_family(name);
    if (!f) throw InvalidParameter(std::string("unknown family \"") + name + "\"");
    return *f;
}

tw_caps resolve(const tw_caps* caps) {
    tw_caps c;
    tw_default_caps(&c);
    if (!caps) return c;
    if (caps->token_vertices) c.token_vertices = caps->token_vertices;
    if (caps->tw_vertices) c.tw_vertices = caps->tw_vertices;
    if (caps->mmb_vertices) c.mmb_vertices = caps->mmb_vertices;
    if (caps->eigen_vertices) c.eigen_vertices = caps->eigen_vertices;
    if (caps->bramble_sets) c.bramble_sets = caps->bramble_sets;
    if (caps->hitting_nodes) c.hitting_nodes = caps->hitting_nodes;
    if (c.tw_vertices > kMaxTreewidthCap)
        throw InvalidParameter("treewidth cap " + std::to_string(c.tw_vertices) + " exceeds the maximum " +
                               std::to_string(kMaxTreewidthCap));
    if (c.mmb_vertices > kMaxMmbCap)
        throw InvalidParameter("mmb cap " + std::to_string(c.mmb_vertices) + " exceeds the maximum " +
                               std::to_string(kMaxMmbCap));
    return c;
}

std::vector<int> labels_of(const Graph& g, std::span<const std::size_t> indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(g.label_at(i));
    return out;
}

const Graph& host_graph(const tw_graph* host, const std::optional<HostRef>& ref, const tw_caps& caps,
                        std::optional<TokenGraph>& storage) {
    if (host) return host->g;
    if (!ref) throw InvalidParameter("no host graph given and the document has no host reference");
    storage.emplace(build_host(*ref, caps.token_vertices));
    return storage->graph();
}

} // namespace

extern "C" {

const char* tw_version(void) { return "1.0.0"; }

void tw_default_caps(tw_caps* caps) {
    if (!caps) return;
    caps->token_vertices = kDefaultTokenCap;
    caps->tw_vertices = kDefaultTreewidthCap;
    caps->mmb_vertices = kDefaultMmbCap;
    caps->eigen_vertices = kDefaultEigenCap;
    caps->bramble_sets = kDefaultBrambleSetCap;
    caps->hitting_nodes = kDefaultHittingSetNodeCap;
}

const char* tw_last_error(void) { return last_error.c_str(); }

void tw_string_free(char* s) { std::free(s); }

tw_status tw_graph_generate(const char* family, int n, tw_graph** out) {
    return guard([&] {
        require(out, "output pointer");
        *out = new tw_graph{generate(family_of(family), n)};
    });
}

tw_status tw_graph_from_json(const char* text, tw_graph** out) {
    return guard([&] {
        require(text, "json");
        require(out, "output pointer");
        *out = new tw_graph{graph_from_json(parse_document(text))};
    });
}

tw_status tw_graph_to_json(const tw_graph* g, char** out) {
    return guard([&] {
        require(g, "graph");
        emit(to_json(g->g), out);
    });
}

size_t tw_graph_vertex_count(const tw_graph* g) { return g ? g->g.size() : 0; }
size_t tw_graph_edge_count(const tw_graph* g) { return g ? g->g.edge_count() : 0; }
void tw_graph_free(tw_graph* g) { delete g; }

tw_status tw_token_graph_build(const char* family, int n, int k, const tw_caps* caps, tw_token_graph** out) {
    return guard([&] {
        require(out, "output pointer");
        const HostRef host{family_of(family), n, k};
        *out = new tw_token_graph{build_host(host, resolve(caps).token_vertices), host};
    });
}

tw_status tw_token_graph_to_json(const tw_token_graph* tg, char** out) {
    return guard([&] {
        require(tg, "token graph");
        emit(to_json(tg->tg, tg->host), out);
    });
}

tw_status tw_token_graph_graph(const tw_token_graph* tg, tw_graph** out) {
    return guard([&] {
        require(tg, "token graph");
        require(out, "output pointer");
        *out = new tw_graph{tg->tg.graph()};
    });
}

size_t tw_token_graph_vertex_count(const tw_token_graph* tg) { return tg ? tg->tg.size() : 0; }
void tw_token_graph_free(tw_token_graph* tg) { delete tg; }

tw_status tw_decomposition_build(const char* kind, const char* family, int n, int k, const tw_caps* caps,
                                 tw_decomposition** out) {
    return guard([&] {
        require(kind, "kind");
        require(out, "output pointer");
        const Family f = family_of(family);
        const auto c = resolve(caps);
        std::string how = kind;
        if (how == "auto") {
            if (f == Family::Star) how = "star";
            else if (k == 2 && f == Family::Complete) how = "f2kn";
            else how = "lex";
        }
        TreeDecomposition d;
        if (how == "star") {
            if (f != Family::Star) throw InvalidParameter("the star decomposition needs family star");
            d = star_decomposition(n, k);
        } else if (how == "f2kn") {
            if (f == Family::Star) throw InvalidParameter("the f2kn decomposition needs family complete or path");
            if (k != 2) throw InvalidParameter("the f2kn decomposition needs k = 2");
            d = f2kn_path_decomposition(n);
            d.host = HostRef{f, n, 2};
        } else if (how == "lex") {
            if (f == Family::Star) throw InvalidParameter("the lex decomposition needs family complete or path");
            d = fkkn_lex_decomposition(n, k, c.token_vertices);
            d.host = HostRef{f, n, k};
        } else {
            throw InvalidParameter("unknown decomposition kind \"" + how + "\"");
        }
        *out = new tw_decomposition{std::move(d)};
    });
}

tw_status tw_decomposition_from_json(const char* text, tw_decomposition** out) {
    return guard([&] {
        require(text, "json");
        require(out, "output pointer");
        *out = new tw_decomposition{decomposition_from_json(parse_document(text))};
    });
}

tw_status tw_decomposition_to_json(const tw_decomposition* d, char** out) {
    return guard([&] {
        require(d, "decomposition");
        emit(to_json(d->d), out);
    });
}

tw_status tw_decomposition_width(const tw_decomposition* d, int64_t* out) {
    return guard([&] {
        require(d, "decomposition");
        require(out, "output pointer");
        *out = width(d->d);
    });
}

tw_status tw_decomposition_validate(const tw_decomposition* d, const tw_graph* host, const tw_caps* caps, int* valid,
                                    char** report_json) {
    return guard([&] {
        require(d, "decomposition");
        std::optional<TokenGraph> storage;
        const Graph& g = host_graph(host, d->d.host, resolve(caps), storage);
        const auto report = validate(d->d, g);
        if (valid) *valid = report.ok() ? 1 : 0;
        if (report_json) {
            json j = to_json(report);
            if (!d->d.bags.empty()) j["width"] = width(d->d);
            emit(j, report_json);
        }
    });
}

void tw_decomposition_free(tw_decomposition* d) { delete d; }

tw_status tw_bramble_build(const char* kind, int n, const tw_caps* caps, tw_bramble** out) {
    return guard([&] {
        require(kind, "kind");
        require(out, "output pointer");
        const std::string how = kind;
        if (how == "star") *out = new tw_bramble{star_bramble(n)};
        else if (how == "complete") *out = new tw_bramble{kn_bramble(n, resolve(caps).bramble_sets)};
        else throw InvalidParameter("unknown bramble kind \"" + how + "\" (expected star or complete)");
    });
}

tw_status tw_bramble_from_json(const char* text, tw_bramble** out) {
    return guard([&] {
        require(text, "json");
        require(out, "output pointer");
        *out = new tw_bramble{bramble_from_json(parse_document(text))};
    });
}

tw_status tw_bramble_to_json(const tw_bramble* b, char** out) {
    return guard([&] {
        require(b, "bramble");
        emit(to_json(b->b), out);
    });
}

size_t tw_bramble_set_count(const tw_bramble* b) { return b ? b->b.sets.size() : 0; }

tw_status tw_bramble_validate(const tw_bramble* b, const tw_graph* host, const tw_caps* caps, int* valid,
                              char** report_json) {
    return guard([&] {
        require(b, "bramble");
        std::optional<TokenGraph> storage;
        const Graph& g = host_graph(host, b->b.host, resolve(caps), storage);
        const auto report = validate_bramble(b->b, g);
        if (valid) *valid = report.ok() ? 1 : 0;
        if (report_json) emit(to_json(report), report_json);
    });
}

tw_status tw_bramble_hitting_set(const tw_bramble* b, const tw_caps* caps, char** result_json) {
    return guard([&] {
        require(b, "bramble");
        const auto hs = min_hitting_set(b->b, resolve(caps).hitting_nodes);
        emit({{"order", hs.size}, {"witness", hs.witness}, {"search_nodes", hs.search_nodes}}, result_json);
    });
}

void tw_bramble_free(tw_bramble* b) { delete b; }

tw_status tw_treewidth(const tw_graph* g, const tw_caps* caps, char** result_json) {
    return guard([&] {
        require(g, "graph");
        const auto tw = exact_treewidth(g->g, resolve(caps).tw_vertices);
        emit({{"treewidth", tw.treewidth}, {"elimination_order", labels_of(g->g, tw.elimination_order)}},
             result_json);
    });
}

tw_status tw_mmb(const tw_graph* g, const tw_caps* caps, char** result_json) {
    return guard([&] {
        require(g, "graph");
        const auto r = mmb_exhaustive(g->g, resolve(caps).mmb_vertices);
        emit({{"mmb", r.value}, {"witness", labels_of(g->g, r.witness.order())}}, result_json);
    });
}

tw_status tw_border(const tw_graph* g, const int* labels, size_t count, int* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "output pointer");
        if (count > 0) require(labels, "labels");
        *out = border_of_labels(g->g, std::span<const int>(labels, count));
    });
}

tw_status tw_max_border(const tw_graph* g, const int* order, size_t count, int* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "output pointer");
        if (count > 0) require(order, "order");
        std::vector<std::size_t> indices;
        indices.reserve(count);
        for (size_t i = 0; i < count; ++i) indices.push_back(g->g.index_of(order[i]));
        *out = max_border(g->g, VertexOrdering(std::move(indices), g->g.size()));
    });
}

tw_status tw_f2pn_ordering(int n, int literal, char** result_json) {
    return guard([&] {
        const auto pi = literal ? f2pn_ordering_literal(n) : f2pn_ordering(n);
        emit(json(std::vector<std::size_t>(pi.order().begin(), pi.order().end())), result_json);
    });
}

tw_status tw_spectral_graph(const tw_graph* g, const tw_caps* caps, char** result_json) {
    return guard([&] {
        require(g, "graph");
        const auto l2 = lambda2(g->g, resolve(caps).eigen_vertices);
        const auto delta = g->g.max_degree();
        json j = {{"vertices", g->g.size()},
                  {"max_degree", delta},
                  {"lambda2", l2.value},
                  {"disconnected", l2.disconnected},
                  {"chandran_lower_bound", spectral_bound(g->g.size(), delta, l2.value)}};
        emit(j, result_json);
    });
}

tw_status tw_spectral_token(const tw_token_graph* tg, const tw_caps* caps, char** result_json) {
    return guard([&] {
        require(tg, "token graph");
        const auto r = spectral_lower_bound(tg->tg, resolve(caps).eigen_vertices);
        json j = {{"host", to_json(tg->host)},
                  {"vertices", r.vertices},
                  {"max_degree", r.max_degree},
                  {"lambda2", r.lambda2},
                  {"disconnected", r.disconnected},
                  {"chandran_lower_bound", r.chandran_lower_bound}};
        j["lambda2_token"] = r.lambda2_token ? json(*r.lambda2_token) : json(nullptr);
        emit(j, result_json);
    });
}

tw_status tw_bound_table(const char* family, int k, int n_lo, int n_hi, int run_oracle, const tw_caps* caps,
                         const char* format, int* consistent, char** out) {
    return guard([&] {
        require(format, "format");
        require(out, "output pointer");
        const auto c = resolve(caps);
        TableOptions options;
        options.run_oracle = run_oracle != 0;
        options.token_cap = c.token_vertices;
        options.treewidth_cap = c.tw_vertices;
        const auto table = bound_table(family_of(family), k, n_lo, n_hi, options);
        if (consistent) *consistent = table.consistent ? 1 : 0;
        const std::string f = format;
        if (f == "text") *out = dup(render_text(table));
        else if (f == "csv") *out = dup(render_csv(table));
        else if (f == "json") *out = dup(to_json(table).dump(2) + "\n");
        else throw InvalidParameter("unknown format \"" + f + "\"");
    });
}

tw_status tw_verify(const char* suite, int n_max, int k_max, uint64_t seed, int random_graphs, const tw_caps* caps,
                    int* passed, int* capped, char** report_json) {
    return guard([&] {
        require(suite, "suite");
        const auto c = resolve(caps);
        VerifyConfig config;
        if (n_max > 0) config.n_max = n_max;
        if (k_max > 0) config.k_max = k_max;
        config.seed = seed;
        config.random_graphs = random_graphs;
        config.token_cap = c.token_vertices;
        config.treewidth_cap = c.tw_vertices;
        config.mmb_cap = c.mmb_vertices;
        config.eigen_cap = c.eigen_vertices;
        config.bramble_set_cap = c.bramble_sets;
        config.hitting_node_cap = c.hitting_nodes;
        const auto report = run_suite(suite, config);
        if (passed) *passed = report.passed() ? 1 : 0;
        if (capped) *capped = report.any(ItemStatus::Capped) ? 1 : 0;
        if (report_json) emit(to_json(report, config), report_json);
    });
}

tw_status tw_verify_suites(char** out) {
    return guard([&] {
        require(out, "output pointer");
        std::string s;
        for (const auto& name : suite_names()) s += name + "\n";
        *out = dup(s);
    });
}

} // extern "C"
