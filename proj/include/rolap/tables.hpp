#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rolap/overlapgraph.hpp"

namespace rolap {

/// I: doubling, II: exact small k, III: m-minimum, IV: zero block vs m-minimum,
/// V: summary with upper bounds.
enum class TableId { I = 1, II, III, IV, V };

/// Accepts roman numerals or 1..5.
[[nodiscard]] TableId parse_table_id(std::string_view s);
[[nodiscard]] std::string to_string(TableId id);

/// Published k range of each table.
[[nodiscard]] std::pair<int, int> table_k_range(TableId id);

struct TableSpec {
    TableId id = TableId::I;
    int k_min = 0;  ///< 0 means the table's first row
    int k_max = 0;  ///< 0 means the table's last row
    SearchOptions search;
};

struct TableRow {
    int k = 0;
    std::vector<std::string> values;  ///< one per report column after k
    bool match = true;
    std::string status;  ///< MATCH or MISMATCH(got=..., expected=...)
};

struct TableReport {
    TableId id = TableId::I;
    std::vector<std::string> columns;  ///< excluding k and status
    std::vector<TableRow> rows;

    [[nodiscard]] bool all_match() const;
    [[nodiscard]] std::string to_tsv() const;
    [[nodiscard]] std::string to_json() const;
};

/// Recomputes each row with the owning construction or search and compares it
/// with the embedded golden values.  Throws DomainError if the range falls
/// outside the table.
[[nodiscard]] TableReport reproduce_table(const TableSpec& spec);

/// Raw golden TSV for one table.
[[nodiscard]] std::string_view golden_table_text(TableId id);

namespace detail {
extern const char* const kGoldenTables[5];
}

}  // namespace rolap
