#include "rolap/tables.hpp"

#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "rolap/construct.hpp"
#include "rolap/counting.hpp"
#include "rolap/error.hpp"

namespace rolap {

TableId parse_table_id(std::string_view s) {
    static const std::pair<std::string_view, TableId> names[] = {
        {"I", TableId::I},   {"II", TableId::II}, {"III", TableId::III}, {"IV", TableId::IV}, {"V", TableId::V},
        {"1", TableId::I},   {"2", TableId::II},  {"3", TableId::III},   {"4", TableId::IV},  {"5", TableId::V},
    };
    for (const auto& [name, id] : names) {
        if (name == s) return id;
    }
    throw DomainError("unknown table id '" + std::string(s) + "'");
}

std::string to_string(TableId id) {
    static const char* const names[] = {"I", "II", "III", "IV", "V"};
    return names[static_cast<int>(id) - 1];
}

std::pair<int, int> table_k_range(TableId id) {
    switch (id) {
        case TableId::I: return {2, 23};
        case TableId::II: return {1, 6};
        default: return {2, 14};
    }
}

std::string_view golden_table_text(TableId id) { return detail::kGoldenTables[static_cast<int>(id) - 1]; }

namespace {

using GoldenRows = std::map<int, std::vector<std::string>>;

GoldenRows parse_golden(TableId id) {
    GoldenRows rows;
    std::istringstream in{std::string(golden_table_text(id))};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, '\t')) cells.push_back(cell);
        const int k = std::stoi(cells.front());
        cells.erase(cells.begin());
        rows[k] = std::move(cells);
    }
    return rows;
}

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

/// Integers print bare, other values to one decimal place.
std::string render(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return to_decimal(r, 1);
}

void compare(TableRow& row, const std::vector<std::string>& got, const std::vector<std::string>& expected) {
    row.match = got == expected;
    if (row.match) {
        row.status = "MATCH";
        return;
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "/" : "") + v[i];
        return s;
    };
    row.status = "MISMATCH(got=" + join(got) + ", expected=" + join(expected) + ")";
}

/// Size pairs compare unordered; tables disagree on which side is listed first.
std::vector<std::string> unordered_pair(std::uint64_t a, std::uint64_t b, const std::string& product) {
    if (a > b) std::swap(a, b);
    return {str(a), str(b), product};
}

}  // namespace

TableReport reproduce_table(const TableSpec& spec) {
    const auto [lo, hi] = table_k_range(spec.id);
    const int k_min = spec.k_min ? spec.k_min : lo;
    const int k_max = spec.k_max ? spec.k_max : hi;
    if (k_min < lo || k_max > hi || k_min > k_max) {
        throw DomainError("table " + to_string(spec.id) + " covers k = " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    }
    const GoldenRows golden = parse_golden(spec.id);

    TableReport report;
    report.id = spec.id;
    std::optional<DoublingTrace> trace;
    if (spec.id == TableId::I || spec.id == TableId::V) trace = doubling(k_max);

    switch (spec.id) {
        case TableId::I: report.columns = {"p", "s", "coefficient", "offset"}; break;
        case TableId::II:
            report.columns = {"independence", "coefficient", "offset", "x_size", "y_size", "max_nontrivial"};
            break;
        case TableId::III: report.columns = {"p", "s", "coefficient", "offset", "m"}; break;
        case TableId::IV: report.columns = {"mminimum", "zeroblock", "z", "offset"}; break;
        case TableId::V: report.columns = {"doubling", "mminimum", "zeroblock", "upper", "offset"}; break;
    }

    for (int k = k_min; k <= k_max; ++k) {
        TableRow row;
        row.k = k;
        const auto& expected = golden.at(k);
        const std::string offset = std::to_string(2 * k);
        switch (spec.id) {
            case TableId::I: {
                const auto& step = trace->at(k);
                row.values = {str(step.prefixes.size()), str(step.suffixes.size()), str(step.product()), offset};
                compare(row, unordered_pair(step.prefixes.size(), step.suffixes.size(), row.values[2]),
                        unordered_pair(std::stoull(expected[0]), std::stoull(expected[1]), expected[2]));
                break;
            }
            case TableId::II: {
                const OverlapGraph g = build_overlap_graph(k);
                const SearchResult prod = max_product_search(g, spec.search);
                const SearchResult card = max_cardinality_search(g, spec.search);
                row.values = {str(prod.cardinality()), str(prod.product()), offset,
                              str(prod.x_set.size()),  str(prod.y_set.size()), str(card.cardinality())};
                compare(row, {row.values[0], row.values[1], offset}, {expected[0], expected[1], expected[2]});
                break;
            }
            case TableId::III: {
                const MMinimumResult r = m_minimum(k);
                row.values = {str(r.system.prefixes.size()), str(r.system.suffixes.size()),
                              str(r.size.coefficient), offset, str(r.m)};
                compare(row, {row.values[0], row.values[1], row.values[2], offset}, expected);
                break;
            }
            case TableId::IV: {
                const MMinimumResult m = m_minimum(k);
                const ZeroBlockResult z = zero_block(k);
                row.values = {str(m.size.coefficient), str(z.size.coefficient), std::to_string(z.z), offset};
                compare(row, row.values, expected);
                break;
            }
            case TableId::V: {
                std::string upper;
                if (k <= 6) {
                    upper = str(max_product_search(build_overlap_graph(k), spec.search).product());
                } else {
                    upper = render(upper_bound_1k(2 * k, k));
                }
                row.values = {str(trace->at(k).product()), str(m_minimum(k).size.coefficient),
                              str(zero_block(k).size.coefficient), upper, offset};
                compare(row, row.values, expected);
                break;
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool TableReport::all_match() const {
    for (const auto& r : rows) {
        if (!r.match) return false;
    }
    return true;
}

std::string TableReport::to_tsv() const {
    std::ostringstream os;
    os << "k";
    for (const auto& c : columns) os << '\t' << c;
    os << "\tstatus\n";
    for (const auto& r : rows) {
        os << r.k;
        for (const auto& v : r.values) os << '\t' << v;
        os << '\t' << r.status << '\n';
    }
    return os.str();
}

std::string TableReport::to_json() const {
    nlohmann::ordered_json j;
    j["table"] = to_string(id);
    j["columns"] = columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["k"] = r.k;
        for (std::size_t i = 0; i < columns.size(); ++i) row[columns[i]] = r.values[i];
        row["match"] = r.match;
        row["status"] = r.status;
        j["rows"].push_back(std::move(row));
    }
    j["all_match"] = all_match();
    return j.dump();
}

}  // namespace rolap
