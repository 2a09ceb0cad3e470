#pragma once

#include "formulas.hpp"
#include "oracles.hpp"
#include "token_graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tokentw {

struct TableOptions {
    bool run_oracle = true;
    std::size_t token_cap = kDefaultTokenCap;
    std::size_t treewidth_cap = kDefaultTreewidthCap;
};

struct TableRow {
    BoundReport bounds;
    std::int64_t vertices = 0;
    // Width of the explicit construction for this family (decomposition
    // width, or max border of the sum ordering for F_2(P_n)).
    std::optional<std::int64_t> constructed;
    std::string construction;
    std::optional<int> oracle;     // exact treewidth when within cap
    std::string skipped;           // why a column was left empty
};

struct BoundTable {
    Family family = Family::Complete;
    int k = 0;
    std::vector<TableRow> rows;
    // Non-decreasing in n over the rows where the value is present.
    bool upper_monotone = true;
    bool constructed_monotone = true;
    bool oracle_monotone = true;
    // Every row satisfies lower <= oracle/exact <= upper.
    bool consistent = true;
};

// Rows for n = n_lo..n_hi; parameters outside the family's range are
// rejected with InvalidParameter.
BoundTable bound_table(Family family, int k, int n_lo, int n_hi, const TableOptions& options = {});

std::string render_text(const BoundTable& table);
std::string render_csv(const BoundTable& table);
nlohmann::json to_json(const BoundTable& table);

} // namespace tokentw
