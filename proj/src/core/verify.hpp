#pragma once

#include "bramble.hpp"
#include "oracles.hpp"
#include "token_graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tokentw {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyConfig {
    // Upper ends of the parameter ranges; each suite has its own default.
    std::optional<int> n_max;
    std::optional<int> k_max;
    std::uint64_t seed = kDefaultSeed;
    int random_graphs = 200;

    std::size_t token_cap = kDefaultTokenCap;
    std::size_t treewidth_cap = kDefaultTreewidthCap;
    std::size_t mmb_cap = kDefaultMmbCap;
    std::size_t eigen_cap = kDefaultEigenCap;
    std::size_t bramble_set_cap = kDefaultBrambleSetCap;
    std::uint64_t hitting_node_cap = kDefaultHittingSetNodeCap;
};

enum class ItemStatus { Pass, Fail, Capped, Error };
std::string_view to_string(ItemStatus status);

struct VerifyItem {
    std::string key;
    ItemStatus status = ItemStatus::Pass;
    nlohmann::json detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<VerifyItem> items;  // sorted by key
    nlohmann::json summary = nlohmann::json::object();

    bool passed() const;
    bool any(ItemStatus status) const;
};

// star-exact, path-exact, complete-exact, f2-exact, bagsize, lemmas,
// upper-bound, validity, brambles, mmb_tw, spectral, structure, all.
const std::vector<std::string>& suite_names();

// Module errors inside an item are recorded in the item, never thrown.
// Throws InvalidParameter for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyConfig& config = {});

nlohmann::json to_json(const SuiteReport& report, const VerifyConfig& config);

} // namespace tokentw
