#include "tokentw/tokentw.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

enum Exit { kPass = 0, kInvariant = 1, kUsage = 2, kCap = 3 };

struct Failure {
    int code;
    std::string kind;
    std::string message;
};

[[noreturn]] void fail(int code, std::string kind, std::string message) {
    throw Failure{code, std::move(kind), std::move(message)};
}

void check(tw_status s) {
    switch (s) {
    case TW_OK: return;
    case TW_ERR_INVALID: fail(kUsage, "invalid-parameter", tw_last_error());
    case TW_ERR_PARSE: fail(kUsage, "parse", tw_last_error());
    case TW_ERR_RESOURCE: fail(kCap, "resource-limit", tw_last_error());
    default: fail(kInvariant, "internal", tw_last_error());
    }
}

struct CString {
    char* p = nullptr;
    ~CString() { tw_string_free(p); }
    std::string str() const { return p ? p : ""; }
    json parsed() const { return json::parse(str()); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using Graph = Handle<tw_graph, tw_graph_free>;
using TokenGraph = Handle<tw_token_graph, tw_token_graph_free>;
using Decomposition = Handle<tw_decomposition, tw_decomposition_free>;
using Bramble = Handle<tw_bramble, tw_bramble_free>;

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kUsage, "io", "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct CapOptions {
    std::optional<std::size_t> token_vertices, tw_vertices, mmb_vertices, eigen_vertices, bramble_sets;
    std::optional<std::uint64_t> hitting_nodes;
};

template <typename T>
void from_env(std::optional<T>& value, const char* name) {
    if (value) return;
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return;
    char* end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) fail(kUsage, "usage", std::string(name) + " must be a positive integer");
    value = static_cast<T>(v);
}

struct Common {
    std::string format;
    std::string out;
    CapOptions caps;

    tw_caps resolved() {
        from_env(caps.token_vertices, "TOKENTW_CAP_TOKEN_VERTICES");
        from_env(caps.tw_vertices, "TOKENTW_CAP_TW_VERTICES");
        from_env(caps.mmb_vertices, "TOKENTW_CAP_MMB_VERTICES");
        from_env(caps.eigen_vertices, "TOKENTW_CAP_EIGEN_VERTICES");
        from_env(caps.bramble_sets, "TOKENTW_CAP_BRAMBLE_SETS");
        from_env(caps.hitting_nodes, "TOKENTW_CAP_HITTING_NODES");
        tw_caps c;
        tw_default_caps(&c);
        if (caps.token_vertices) c.token_vertices = *caps.token_vertices;
        if (caps.tw_vertices) c.tw_vertices = *caps.tw_vertices;
        if (caps.mmb_vertices) c.mmb_vertices = *caps.mmb_vertices;
        if (caps.eigen_vertices) c.eigen_vertices = *caps.eigen_vertices;
        if (caps.bramble_sets) c.bramble_sets = *caps.bramble_sets;
        if (caps.hitting_nodes) c.hitting_nodes = *caps.hitting_nodes;
        return c;
    }

    void write(const std::string& text) const {
        if (out.empty() || out == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f) fail(kUsage, "io", "cannot write " + out);
        f << text;
    }
};

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats, const std::string& default_format) {
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", c.out, "Output file (default stdout)");
    auto positive = CLI::PositiveNumber;
    cmd->add_option("--cap-token-vertices", c.caps.token_vertices, "Max token-graph vertices")->check(positive);
    cmd->add_option("--cap-tw-vertices", c.caps.tw_vertices, "Max vertices for exact treewidth (<= 26)")->check(positive);
    cmd->add_option("--cap-mmb-vertices", c.caps.mmb_vertices, "Max vertices for exhaustive MMB (<= 20)")->check(positive);
    cmd->add_option("--cap-eigen-vertices", c.caps.eigen_vertices, "Max vertices for the eigensolver")->check(positive);
    cmd->add_option("--cap-bramble-sets", c.caps.bramble_sets, "Max bramble sets")->check(positive);
    cmd->add_option("--cap-hitting-nodes", c.caps.hitting_nodes, "Max hitting-set search nodes")->check(positive);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Graph input: a JSON file, or a generated base graph / token graph.
struct GraphSource {
    std::string file;
    std::string family;
    int n = 0;
    int k = 0;

    void add(CLI::App* cmd) {
        cmd->add_option("--graph", file, "Graph JSON file ('-' for stdin)");
        cmd->add_option("--family", family, "path, star or complete")
            ->check(CLI::IsMember({"path", "star", "complete"}));
        cmd->add_option("--n", n, "Family size parameter");
        cmd->add_option("--k", k, "Token count (omit for the base graph)");
    }

    bool token() const { return file.empty() && k > 0; }

    void load(Graph& g, const tw_caps& caps) const {
        if (!file.empty()) {
            if (!family.empty()) fail(kUsage, "usage", "--graph and --family are mutually exclusive");
            check(tw_graph_from_json(read_file(file).c_str(), &g.p));
            return;
        }
        if (family.empty()) fail(kUsage, "usage", "give --graph FILE or --family with --n");
        if (k > 0) {
            TokenGraph tg;
            check(tw_token_graph_build(family.c_str(), n, k, &caps, &tg.p));
            check(tw_token_graph_graph(tg.p, &g.p));
        } else {
            check(tw_graph_generate(family.c_str(), n, &g.p));
        }
    }
};

std::string join(const json& array) {
    std::string s;
    for (const auto& v : array) {
        if (!s.empty()) s += " ";
        s += v.dump();
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            fail(kUsage, "usage", "expected a comma-separated integer list, got \"" + text + "\"");
        }
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        fail(kUsage, "usage", "expected N or LO..HI, got \"" + text + "\"");
    }
}

// build ----------------------------------------------------------------------

struct BuildCmd {
    Common common;
    std::string family;
    int n = 0;
    int k = 0;
    bool base = false;
    bool decomp = false;
    bool bramble = false;
    std::string construction = "auto";

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("build", "Write a base graph, token graph, decomposition or bramble as JSON");
        add_common(cmd, common, {"json", "text"}, "json");
        cmd->add_option("--family", family, "path, star or complete")
            ->required()
            ->check(CLI::IsMember({"path", "star", "complete"}));
        cmd->add_option("--n", n, "Family size parameter")->required();
        cmd->add_option("--k", k, "Token count");
        auto* b = cmd->add_flag("--base", base, "Base graph only");
        auto* d = cmd->add_flag("--decomp", decomp, "Decomposition of F_k(G)");
        auto* r = cmd->add_flag("--bramble", bramble, "Bramble on F_2(G)");
        b->excludes(d)->excludes(r);
        d->excludes(r);
        cmd->add_option("--construction", construction, "Decomposition construction")
            ->check(CLI::IsMember({"auto", "star", "f2kn", "lex"}));
        cmd->callback([this] { run(); });
    }

    void finish(const std::string& document, const std::string& summary) {
        if (!common.out.empty() && common.out != "-") {
            common.write(document);
            std::cout << summary << "\n";
        } else if (common.format == "json") {
            std::cout << document;
        } else {
            std::cout << summary << "\n";
        }
    }

    void run() {
        auto caps = common.resolved();
        if (base) {
            Graph g;
            check(tw_graph_generate(family.c_str(), n, &g.p));
            CString s;
            check(tw_graph_to_json(g.p, &s.p));
            finish(dump(s.parsed()), family + " n=" + std::to_string(n) + ": " +
                                         std::to_string(tw_graph_vertex_count(g.p)) + " vertices, " +
                                         std::to_string(tw_graph_edge_count(g.p)) + " edges");
            return;
        }
        if (bramble) {
            if (k != 0 && k != 2) fail(kUsage, "usage", "brambles are built on F_2 only");
            if (family == "path") fail(kUsage, "usage", "no bramble construction for family path");
            Bramble b;
            check(tw_bramble_build(family.c_str(), n, &caps, &b.p));
            CString s;
            check(tw_bramble_to_json(b.p, &s.p));
            finish(dump(s.parsed()), "bramble " + family + " n=" + std::to_string(n) + ": " +
                                         std::to_string(tw_bramble_set_count(b.p)) + " sets");
            return;
        }
        if (k <= 0) fail(kUsage, "usage", "--k is required unless --base is given");
        if (decomp) {
            Decomposition d;
            check(tw_decomposition_build(construction.c_str(), family.c_str(), n, k, &caps, &d.p));
            int valid = 0;
            CString report;
            check(tw_decomposition_validate(d.p, nullptr, &caps, &valid, &report.p));
            std::int64_t w = 0;
            check(tw_decomposition_width(d.p, &w));
            CString s;
            check(tw_decomposition_to_json(d.p, &s.p));
            json doc = s.parsed();
            doc["width"] = w;
            finish(dump(doc), "decomposition of F_" + std::to_string(k) + "(" + family + " n=" + std::to_string(n) +
                                  "): width " + std::to_string(w) + ", " + std::to_string(doc["bags"].size()) +
                                  " bags, " + (valid ? "valid" : "INVALID"));
            if (!valid) fail(kInvariant, "invariant", "constructed decomposition failed validation");
            return;
        }
        TokenGraph tg;
        check(tw_token_graph_build(family.c_str(), n, k, &caps, &tg.p));
        CString s;
        check(tw_token_graph_to_json(tg.p, &s.p));
        const json doc = s.parsed();
        finish(dump(doc), "token graph F_" + std::to_string(k) + "(" + family + " n=" + std::to_string(n) +
                              "): " + std::to_string(doc["labels"].size()) + " vertices, " +
                              std::to_string(doc["edges"].size()) + " edges");
    }
};

// verify ---------------------------------------------------------------------

struct VerifyCmd {
    Common common;
    std::string suite;
    std::string decomp_file;
    std::string bramble_file;
    std::string host_file;
    int n_max = 0;
    int k_max = 0;
    std::uint64_t seed = 20240611;
    int random_graphs = 200;
    int* exit_code;

    explicit VerifyCmd(int* code) : exit_code(code) {}

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify", "Run a cross-check suite or validate a decomposition/bramble file");
        add_common(cmd, common, {"text", "json"}, "text");
        auto* s = cmd->add_option("--suite", suite, "Suite name (see --list)");
        auto* d = cmd->add_option("--decomp", decomp_file, "Decomposition JSON to validate");
        auto* b = cmd->add_option("--bramble", bramble_file, "Bramble JSON to validate");
        s->excludes(d)->excludes(b);
        d->excludes(b);
        cmd->add_option("--host", host_file, "Host graph JSON (default: the document's host reference)");
        cmd->add_option("--n-max", n_max, "Upper end of n ranges")->check(CLI::PositiveNumber);
        cmd->add_option("--k-max", k_max, "Upper end of k ranges")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "Seed for randomized suites");
        cmd->add_option("--random-graphs", random_graphs, "Random graphs in the mmb-tw suite")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag_callback("--list", [] {
            CString s;
            check(tw_verify_suites(&s.p));
            std::cout << s.str();
            throw CLI::Success();
        }, "List suites");
        cmd->callback([this] { run(); });
    }

    void load_host(Graph& host) {
        if (!host_file.empty()) check(tw_graph_from_json(read_file(host_file).c_str(), &host.p));
    }

    void run() {
        auto caps = common.resolved();
        if (!decomp_file.empty()) return run_decomposition(caps);
        if (!bramble_file.empty()) return run_bramble(caps);
        if (suite.empty()) suite = "all";

        int passed = 0;
        int capped = 0;
        CString report;
        check(tw_verify(suite.c_str(), n_max, k_max, seed, random_graphs, &caps, &passed, &capped, &report.p));
        const json j = report.parsed();
        if (common.format == "json") {
            common.write(dump(j));
        } else {
            std::ostringstream out;
            for (const auto& item : j["items"]) {
                std::string status = item["status"];
                for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
                out << status << " " << item["key"].get<std::string>() << " " << item["detail"].dump() << "\n";
            }
            const auto& counts = j["counts"];
            out << "suite " << suite << " seed " << j["seed"].dump() << ": " << counts["pass"] << " pass, "
                << counts["fail"] << " fail, " << counts["capped"] << " capped, " << counts["error"] << " error";
            if (!j["summary"].empty()) out << "; summary " << j["summary"].dump();
            out << "\n" << (passed ? "PASS" : "FAIL") << "\n";
            common.write(out.str());
        }
        const auto& counts = j["counts"];
        if (counts["fail"].get<int>() > 0 || counts["error"].get<int>() > 0) *exit_code = kInvariant;
        else if (capped) *exit_code = kCap;
    }

    void run_decomposition(tw_caps& caps) {
        Decomposition d;
        check(tw_decomposition_from_json(read_file(decomp_file).c_str(), &d.p));
        Graph host;
        load_host(host);
        int valid = 0;
        CString report;
        check(tw_decomposition_validate(d.p, host.p, &caps, &valid, &report.p));
        emit_report(report.parsed(), valid);
    }

    void run_bramble(tw_caps& caps) {
        Bramble b;
        check(tw_bramble_from_json(read_file(bramble_file).c_str(), &b.p));
        Graph host;
        load_host(host);
        int valid = 0;
        CString report;
        check(tw_bramble_validate(b.p, host.p, &caps, &valid, &report.p));
        emit_report(report.parsed(), valid);
    }

    void emit_report(const json& report, int valid) {
        if (common.format == "json") common.write(dump(report));
        else common.write(report.dump() + "\n" + (valid ? "PASS" : "FAIL") + "\n");
        if (!valid) *exit_code = kInvariant;
    }
};

// table ----------------------------------------------------------------------

struct TableCmd {
    Common common;
    std::string family;
    int k = 2;
    std::string range;
    bool no_oracle = false;
    int* exit_code;

    explicit TableCmd(int* code) : exit_code(code) {}

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("table", "Bounds, constructions and oracle values over a range of n");
        add_common(cmd, common, {"text", "csv", "json"}, "text");
        cmd->add_option("--family", family, "path, star or complete")
            ->required()
            ->check(CLI::IsMember({"path", "star", "complete"}));
        cmd->add_option("--k", k, "Token count")->required();
        cmd->add_option("--n", range, "N or LO..HI")->required();
        cmd->add_flag("--no-oracle", no_oracle, "Skip exact treewidth");
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        const auto [lo, hi] = parse_range(range);
        CString out;
        int consistent = 1;
        check(tw_bound_table(family.c_str(), k, lo, hi, no_oracle ? 0 : 1, &caps, common.format.c_str(), &consistent,
                             &out.p));
        common.write(out.str());
        if (!consistent) *exit_code = kInvariant;
    }
};

// tw / mmb / border / spectral --------------------------------------------------

struct TwCmd {
    Common common;
    GraphSource source;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("tw", "Exact treewidth with an optimal elimination ordering");
        add_common(cmd, common, {"text", "json"}, "text");
        source.add(cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        Graph g;
        source.load(g, caps);
        CString r;
        check(tw_treewidth(g.p, &caps, &r.p));
        const json j = r.parsed();
        if (common.format == "json") common.write(dump(j));
        else common.write("treewidth " + j["treewidth"].dump() + "\nelimination order " + join(j["elimination_order"]) + "\n");
    }
};

struct MmbCmd {
    Common common;
    GraphSource source;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("mmb", "Exhaustive minimax border size with a witness ordering");
        add_common(cmd, common, {"text", "json"}, "text");
        source.add(cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        Graph g;
        source.load(g, caps);
        CString r;
        check(tw_mmb(g.p, &caps, &r.p));
        const json j = r.parsed();
        if (common.format == "json") common.write(dump(j));
        else common.write("mmb " + j["mmb"].dump() + "\nwitness " + join(j["witness"]) + "\n");
    }
};

struct BorderCmd {
    Common common;
    GraphSource source;
    std::string set;
    std::string order;
    bool f2pn = false;
    bool literal = false;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("border", "Border of a vertex set, or max border of an ordering");
        add_common(cmd, common, {"text", "json"}, "text");
        source.add(cmd);
        auto* s = cmd->add_option("--set", set, "Comma-separated vertex labels");
        auto* o = cmd->add_option("--order", order, "Comma-separated ordering of all vertex labels");
        auto* f = cmd->add_flag("--f2pn", f2pn, "Max border of the sum ordering on F_2(P_n) (needs --n)");
        cmd->add_flag("--literal", literal, "With --f2pn: increasing ties on every sum class");
        s->excludes(o)->excludes(f);
        o->excludes(f);
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        json result;
        if (f2pn) {
            if (!source.file.empty() || !source.family.empty())
                fail(kUsage, "usage", "--f2pn builds F_2(P_n) itself; give only --n");
            TokenGraph tg;
            check(tw_token_graph_build("path", source.n, 2, &caps, &tg.p));
            Graph g;
            check(tw_token_graph_graph(tg.p, &g.p));
            CString o;
            check(tw_f2pn_ordering(source.n, literal ? 1 : 0, &o.p));
            const auto ordering = o.parsed().get<std::vector<int>>();
            int mb = 0;
            check(tw_max_border(g.p, ordering.data(), ordering.size(), &mb));
            result = {{"max_border", mb}, {"ordering", ordering}, {"n", source.n}};
        } else {
            Graph g;
            source.load(g, caps);
            if (!set.empty()) {
                const auto labels = parse_int_list(set);
                int b = 0;
                check(tw_border(g.p, labels.data(), labels.size(), &b));
                result = {{"border", b}, {"set", labels}};
            } else if (!order.empty()) {
                const auto labels = parse_int_list(order);
                int mb = 0;
                check(tw_max_border(g.p, labels.data(), labels.size(), &mb));
                result = {{"max_border", mb}, {"ordering", labels}};
            } else {
                fail(kUsage, "usage", "give --set, --order or --f2pn");
            }
        }
        if (common.format == "json") {
            common.write(dump(result));
        } else if (result.contains("border")) {
            common.write("border " + result["border"].dump() + "\n");
        } else {
            common.write("max border " + result["max_border"].dump() + "\nordering " + join(result["ordering"]) + "\n");
        }
    }
};

struct BrambleCmd {
    Common common;
    std::string kind;
    int n = 0;
    std::string file;
    std::string host_file;
    int* exit_code;

    explicit BrambleCmd(int* code) : exit_code(code) {}

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("bramble", "Build or read a bramble, validate it and certify its order");
        add_common(cmd, common, {"text", "json"}, "text");
        auto* k = cmd->add_option("--family", kind, "star or complete")->check(CLI::IsMember({"star", "complete"}));
        auto* f = cmd->add_option("--file", file, "Bramble JSON file ('-' for stdin)");
        k->excludes(f);
        cmd->add_option("--n", n, "Family size parameter");
        cmd->add_option("--host", host_file, "Host graph JSON (default: the bramble's host reference)");
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        Bramble b;
        if (!file.empty()) check(tw_bramble_from_json(read_file(file).c_str(), &b.p));
        else if (!kind.empty()) check(tw_bramble_build(kind.c_str(), n, &caps, &b.p));
        else fail(kUsage, "usage", "give --family with --n, or --file");
        Graph host;
        if (!host_file.empty()) check(tw_graph_from_json(read_file(host_file).c_str(), &host.p));

        int valid = 0;
        CString report;
        check(tw_bramble_validate(b.p, host.p, &caps, &valid, &report.p));
        CString hs;
        check(tw_bramble_hitting_set(b.p, &caps, &hs.p));
        CString doc;
        check(tw_bramble_to_json(b.p, &doc.p));

        const json h = hs.parsed();
        const json d = doc.parsed();
        json result = {{"sets", d["sets"].size()},
                       {"valid", valid == 1},
                       {"validation", report.parsed()},
                       {"order", h["order"]},
                       {"witness", h["witness"]},
                       {"search_nodes", h["search_nodes"]},
                       {"treewidth_lower_bound", h["order"].get<long long>() - 1}};
        if (d.contains("host")) result["host"] = d["host"];
        if (common.format == "json") {
            common.write(dump(result));
        } else {
            std::ostringstream out;
            out << "bramble: " << result["sets"] << " sets, " << (valid ? "valid" : "INVALID") << "\n"
                << "order " << result["order"] << " (treewidth >= " << result["treewidth_lower_bound"] << ")\n"
                << "witness " << join(result["witness"]) << "\n";
            common.write(out.str());
        }
        if (!valid) *exit_code = kInvariant;
    }
};

struct SpectralCmd {
    Common common;
    GraphSource source;

    void add(CLI::App& app) {
        auto* cmd = app.add_subcommand("spectral", "Algebraic connectivity and the spectral treewidth lower bound");
        add_common(cmd, common, {"text", "json"}, "text");
        source.add(cmd);
        cmd->callback([this] { run(); });
    }

    void run() {
        auto caps = common.resolved();
        CString r;
        if (source.token()) {
            TokenGraph tg;
            check(tw_token_graph_build(source.family.c_str(), source.n, source.k, &caps, &tg.p));
            check(tw_spectral_token(tg.p, &caps, &r.p));
        } else {
            Graph g;
            source.load(g, caps);
            check(tw_spectral_graph(g.p, &caps, &r.p));
        }
        const json j = r.parsed();
        if (common.format == "json") {
            common.write(dump(j));
            return;
        }
        std::ostringstream out;
        out << "vertices " << j["vertices"] << "\nmax degree " << j["max_degree"] << "\nlambda2 " << j["lambda2"]
            << "\n";
        if (j.contains("lambda2_token")) out << "lambda2 (token graph) " << j["lambda2_token"] << "\n";
        if (j["disconnected"].get<bool>()) out << "warning: graph is disconnected\n";
        out << "treewidth lower bound " << j["chandran_lower_bound"] << "\n";
        common.write(out.str());
    }
};

std::string one_line(std::string s) {
    for (auto& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

} // namespace

int main(int argc, char** argv) {
    int exit_code = kPass;
    CLI::App app{"Treewidth of token graphs: constructions, certificates and exact oracles", "tokentw"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tw_version()));

    BuildCmd build;
    VerifyCmd verify(&exit_code);
    TableCmd table(&exit_code);
    TwCmd tw;
    MmbCmd mmb;
    BorderCmd border;
    BrambleCmd bramble(&exit_code);
    SpectralCmd spectral;
    build.add(app);
    verify.add(app);
    table.add(app);
    tw.add(app);
    mmb.add(app);
    border.add(app);
    bramble.add(app);
    spectral.add(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: usage: " << one_line(e.what()) << "\n";
        return kUsage;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.kind << ": " << one_line(f.message) << "\n";
        return f.code;
    } catch (const json::exception& e) {
        std::cerr << "error: internal: " << one_line(e.what()) << "\n";
        return kInvariant;
    }
    return exit_code;
}
