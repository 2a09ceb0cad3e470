#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace tokentw {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw ParseError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

std::vector<std::size_t> index_list(const json& j, const char* what) {
    std::vector<std::size_t> out;
    for (const auto& v : as_array(j, what)) out.push_back(as_index(v, what));
    return out;
}

Edge edge_of(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + " must be a pair");
    return {as_int(j[0], what), as_int(j[1], what)};
}

int node_id(const std::string& key) {
    int id = 0;
    const auto* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, id);
    if (ec != std::errc{} || ptr != end) throw ParseError("bag key \"" + key + "\" is not an integer node id");
    return id;
}

} // namespace

json to_json(const HostRef& host) {
    return {{"family", std::string(to_string(host.family))}, {"n", host.n}, {"k", host.k}};
}

HostRef host_from_json(const json& j) {
    const auto& name = member(j, "family");
    if (!name.is_string()) throw ParseError("host family must be a string");
    auto family = parse_family(name.get<std::string>());
    if (!family) throw ParseError("unknown host family \"" + name.get<std::string>() + "\"");
    return {*family, as_int(member(j, "n"), "host n"), as_int(member(j, "k"), "host k")};
}

std::optional<HostRef> host_of(const json& j) {
    if (!j.is_object() || !j.contains("host") || j["host"].is_null()) return std::nullopt;
    return host_from_json(j["host"]);
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"labels", std::vector<int>(g.labels().begin(), g.labels().end())}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    std::vector<int> labels;
    for (const auto& v : as_array(member(j, "labels"), "labels")) labels.push_back(as_int(v, "label"));
    std::vector<Edge> edges;
    for (const auto& e : as_array(member(j, "edges"), "edges")) edges.push_back(edge_of(e, "edge"));
    try {
        return Graph(std::move(labels), std::move(edges));
    } catch (const InvalidParameter& e) {
        throw ParseError(e.what());
    }
}

json to_json(const TokenGraph& tg, const std::optional<HostRef>& host) {
    json j = to_json(tg.graph());
    json table = json::array();
    for (const auto& v : tg.vertex_table()) table.push_back(v.members);
    j["vertex_table"] = std::move(table);
    j["k"] = tg.k();
    j["base"] = to_json(tg.base());
    if (host) j["host"] = to_json(*host);
    return j;
}

json to_json(const TreeDecomposition& d) {
    json edges = json::array();
    for (const auto& e : d.tree.edges()) edges.push_back({e.u, e.v});
    json bags = json::object();
    for (const auto& [node, bag] : d.bags) bags[std::to_string(node)] = bag;
    json j = {{"is_path", d.is_path}, {"tree_edges", std::move(edges)}, {"bags", std::move(bags)}};
    if (d.host) j["host"] = to_json(*d.host);
    return j;
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition d;
    const auto& is_path = member(j, "is_path");
    if (!is_path.is_boolean()) throw ParseError("is_path must be a boolean");
    d.is_path = is_path.get<bool>();

    const auto& bags = member(j, "bags");
    if (!bags.is_object()) throw ParseError("bags must be an object");
    std::set<int> nodes;
    for (const auto& [key, bag] : bags.items()) {
        const int id = node_id(key);
        d.bags[id] = index_list(bag, "bag entry");
        std::sort(d.bags[id].begin(), d.bags[id].end());
        nodes.insert(id);
    }
    std::vector<Edge> edges;
    for (const auto& e : as_array(member(j, "tree_edges"), "tree_edges")) {
        auto edge = edge_of(e, "tree edge");
        if (edge.u > edge.v) std::swap(edge.u, edge.v);
        nodes.insert(edge.u);
        nodes.insert(edge.v);
        edges.push_back(edge);
    }
    try {
        d.tree = Graph(std::vector<int>(nodes.begin(), nodes.end()), std::move(edges));
    } catch (const InvalidParameter& e) {
        throw ParseError(std::string("tree: ") + e.what());
    }
    d.host = host_of(j);
    return d;
}

json to_json(const Bramble& b) {
    json j = {{"sets", b.sets}};
    if (b.host) j["host"] = to_json(*b.host);
    return j;
}

Bramble bramble_from_json(const json& j) {
    Bramble b;
    for (const auto& set : as_array(member(j, "sets"), "sets")) b.sets.push_back(index_list(set, "bramble entry"));
    b.host = host_of(j);
    return b;
}

json to_json(const ValidationReport& r) {
    json j = {{"ok", r.ok()},
              {"tree", r.tree_ok},
              {"path", r.path_ok},
              {"coverage", r.coverage_ok},
              {"edge_coverage", r.edge_ok},
              {"trace_connectivity", r.connectivity_ok}};
    if (!r.tree_message.empty()) j["tree_message"] = r.tree_message;
    if (r.uncovered_vertex) j["uncovered_vertex"] = *r.uncovered_vertex;
    if (r.uncovered_edge) j["uncovered_edge"] = {r.uncovered_edge->u, r.uncovered_edge->v};
    if (r.broken_trace)
        j["broken_trace"] = {{"vertex", r.broken_trace->vertex},
                             {"nodes", {r.broken_trace->node_a, r.broken_trace->node_b}}};
    return j;
}

json to_json(const BrambleReport& r) {
    json j = {{"ok", r.ok()}, {"sets_connected", r.sets_connected}, {"pairs_touch", r.pairs_touch}};
    if (r.disconnected_set) j["disconnected_set"] = *r.disconnected_set;
    if (r.non_touching_pair) j["non_touching_pair"] = {r.non_touching_pair->first, r.non_touching_pair->second};
    return j;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace tokentw
