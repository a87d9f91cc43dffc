#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdtrank/designated.hpp"

namespace pdtrank {

/// One row of a rank table: a partition with overline designated summands,
/// its delta image, both ranks and its class.
struct RankRow {
    std::string partition;
    std::string alpha;
    std::string beta;
    std::string rank;        // integer or "X"
    std::string mrank;
    std::string mrank_mod3;  // in 0..2
    std::string rank_class;  // "A1".."B5" or "none"

    /// Value of a column by its header name; throws std::out_of_range on an unknown name.
    const std::string& column(const std::string& name) const;
};

/// Column headers in output order.
const std::vector<std::string>& rank_columns();

RankRow make_rank_row(const OverlinePartition& lambda);

/// One row per element of S1(n) in enumeration order.
std::vector<RankRow> rank_table(int n);

void write_tsv(std::ostream& out, const std::vector<RankRow>& rows);
nlohmann::json rows_to_json(const std::vector<RankRow>& rows);

/// A transcribed table: named columns, rows keyed by partition text, and
/// declared deviations (partition, column, value the code produces).
struct GoldenTable {
    struct Deviation {
        std::string partition;
        std::string column;
        std::string computed;
    };
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<Deviation> deviations;
};

/// Format: "#"-prefixed comment lines, one header line, tab-separated rows.
/// A comment line "#deviation<TAB>partition<TAB>column<TAB>computed" declares a
/// known disagreement. Throws std::runtime_error on malformed input.
GoldenTable read_golden(const std::filesystem::path& path);
GoldenTable parse_golden(std::istream& in);

struct GoldenComparison {
    bool matches = false;           // equal except exactly the declared deviations
    std::vector<std::string> notes; // every mismatch or deviation, human readable
    std::string first_failure;      // empty when matches
};

/// Rows are paired by canonical partition text; every golden row must pair with
/// exactly one computed row and vice versa. Only the golden table's columns are compared.
GoldenComparison compare_to_golden(const GoldenTable& golden, const std::vector<RankRow>& computed);

}  // namespace pdtrank
