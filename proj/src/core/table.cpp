#include "table.hpp"

#include "combinatorics.hpp"
#include "decomposition.hpp"
#include "error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tokentw {

namespace {

std::int64_t vertex_count(Family family, int n, int k) {
    return binomial_saturating(family == Family::Star ? n + 1 : n, k);
}

void fill_construction(TableRow& row, const TableOptions& options) {
    const auto& b = row.bounds;
    const int n = b.n;
    const int k = b.k;
    if (row.vertices > static_cast<std::int64_t>(options.token_cap)) {
        row.skipped = "token cap";
        return;
    }
    switch (b.family) {
    case Family::Star:
        row.constructed = width(star_decomposition(n, k));
        row.construction = "star-decomposition";
        break;
    case Family::Path:
        if (k == 2) {
            row.constructed = max_border(token_graph(generate(Family::Path, n), 2, options.token_cap).graph(),
                                         f2pn_ordering(n));
            row.construction = "sum-ordering-max-border";
        } else if (k >= 3) {
            row.constructed = width(fkkn_lex_decomposition(n, k, options.token_cap));
            row.construction = "lexicographic-decomposition";
        }
        break;
    case Family::Complete:
        if (k == 2) {
            row.constructed = width(f2kn_path_decomposition(n));
            row.construction = "f2kn-path-decomposition";
        } else {
            row.constructed = width(fkkn_lex_decomposition(n, k, options.token_cap));
            row.construction = "lexicographic-decomposition";
        }
        break;
    }
}

template <typename Get>
bool monotone(const std::vector<TableRow>& rows, Get get) {
    std::optional<double> prev;
    for (const auto& row : rows) {
        auto v = get(row);
        if (!v) continue;
        if (prev && static_cast<double>(*v) < *prev) return false;
        prev = static_cast<double>(*v);
    }
    return true;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

template <typename T>
std::string cell(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "-";
}

std::vector<std::string> row_cells(const TableRow& row) {
    const auto& b = row.bounds;
    return {std::to_string(b.n),
            std::to_string(b.k),
            std::to_string(row.vertices),
            b.lower ? format_double(*b.lower) : "-",
            std::to_string(b.upper),
            cell(b.exact),
            cell(b.corollary_upper),
            cell(row.constructed),
            cell(row.oracle)};
}

const std::vector<std::string> kHeader = {"n", "k", "vertices", "lower", "upper", "exact", "corollary",
                                          "constructed", "oracle"};

} // namespace

BoundTable bound_table(Family family, int k, int n_lo, int n_hi, const TableOptions& options) {
    if (n_lo > n_hi)
        throw InvalidParameter("empty range " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
    BoundTable table;
    table.family = family;
    table.k = k;
    for (int n = n_lo; n <= n_hi; ++n) {
        TableRow row;
        row.bounds = family_bounds(family, n, k);
        row.vertices = vertex_count(family, n, k);
        fill_construction(row, options);
        if (options.run_oracle) {
            if (row.vertices <= static_cast<std::int64_t>(options.treewidth_cap)) {
                const auto tg = token_graph(generate(family, n), k, options.token_cap);
                row.oracle = exact_treewidth(tg.graph(), options.treewidth_cap).treewidth;
            } else if (row.skipped.empty()) {
                row.skipped = "treewidth cap";
            }
        }
        table.rows.push_back(std::move(row));
    }

    table.upper_monotone = monotone(table.rows, [](const TableRow& r) { return std::optional(r.bounds.upper); });
    table.constructed_monotone = monotone(table.rows, [](const TableRow& r) { return r.constructed; });
    table.oracle_monotone = monotone(table.rows, [](const TableRow& r) { return r.oracle; });
    for (const auto& row : table.rows) {
        const auto& b = row.bounds;
        if (!b.consistent()) table.consistent = false;
        if (row.oracle) {
            if (*row.oracle > b.upper) table.consistent = false;
            if (b.lower && *b.lower > *row.oracle + 1e-9) table.consistent = false;
            if (b.exact && *b.exact != *row.oracle) table.consistent = false;
        }
        if (row.constructed && row.oracle && *row.constructed < *row.oracle) table.consistent = false;
    }
    return table;
}

std::string render_text(const BoundTable& table) {
    std::vector<std::vector<std::string>> cells = {kHeader};
    for (const auto& row : table.rows) cells.push_back(row_cells(row));
    std::vector<std::size_t> widths(kHeader.size(), 0);
    for (const auto& r : cells)
        for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());

    std::ostringstream out;
    out << "family " << to_string(table.family) << ", k = " << table.k << "\n";
    for (const auto& r : cells) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) out << "  ";
            out << std::string(widths[c] - r[c].size(), ' ') << r[c];
        }
        out << "\n";
    }
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    out << "monotone: upper " << yes_no(table.upper_monotone) << ", constructed "
        << yes_no(table.constructed_monotone) << ", oracle " << yes_no(table.oracle_monotone)
        << "; consistent " << yes_no(table.consistent) << "\n";
    return out.str();
}

std::string render_csv(const BoundTable& table) {
    std::ostringstream out;
    out << "family";
    for (const auto& h : kHeader) out << "," << h;
    out << "\n";
    for (const auto& row : table.rows) {
        out << to_string(table.family);
        for (auto c : row_cells(row)) out << "," << (c == "-" ? "" : c);
        out << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const BoundTable& table) {
    using nlohmann::json;
    json rows = json::array();
    for (const auto& row : table.rows) {
        const auto& b = row.bounds;
        json r = {{"n", b.n}, {"k", b.k}, {"vertices", row.vertices}, {"upper", b.upper}, {"sources", b.sources}};
        r["lower"] = b.lower ? json(*b.lower) : json(nullptr);
        r["exact"] = b.exact ? json(*b.exact) : json(nullptr);
        if (b.corollary_upper) r["corollary"] = *b.corollary_upper;
        if (b.literal_upper) r["literal_upper"] = *b.literal_upper;
        r["constructed"] = row.constructed ? json(*row.constructed) : json(nullptr);
        if (!row.construction.empty()) r["construction"] = row.construction;
        r["oracle"] = row.oracle ? json(*row.oracle) : json(nullptr);
        if (!row.skipped.empty()) r["skipped"] = row.skipped;
        if (!b.notes.empty()) r["notes"] = b.notes;
        json asym = json::array();
        for (const auto& a : b.asymptotics)
            asym.push_back({{"side", a.side},
                            {"expression", a.expression},
                            {"leading_constant", a.leading_constant},
                            {"exponent", a.exponent}});
        r["asymptotics"] = std::move(asym);
        rows.push_back(std::move(r));
    }
    return {{"family", std::string(to_string(table.family))},
            {"k", table.k},
            {"rows", std::move(rows)},
            {"monotone",
             {{"upper", table.upper_monotone},
              {"constructed", table.constructed_monotone},
              {"oracle", table.oracle_monotone}}},
            {"consistent", table.consistent}};
}

} // namespace tokentw
