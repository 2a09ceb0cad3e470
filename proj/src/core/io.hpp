#pragma once

#include "bramble.hpp"
#include "decomposition.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "token_graph.hpp"

#include <json.hpp>

#include <optional>

namespace tokentw {

// Readers throw ParseError naming the offending field.

nlohmann::json to_json(const HostRef& host);
HostRef host_from_json(const nlohmann::json& j);

// {"labels":[...],"edges":[[a,b],...]}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Graph schema over token indices plus "vertex_table" and "host".
nlohmann::json to_json(const TokenGraph& tg, const std::optional<HostRef>& host = std::nullopt);

// Optional "host" member of any document.
std::optional<HostRef> host_of(const nlohmann::json& j);

// {"is_path":bool,"tree_edges":[[id,id],...],"bags":{"id":[...]},"host":{...}}
nlohmann::json to_json(const TreeDecomposition& d);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

// {"sets":[[...],...],"host":{...}}
nlohmann::json to_json(const Bramble& b);
Bramble bramble_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const BrambleReport& r);

nlohmann::json parse_document(std::string_view text);

} // namespace tokentw
