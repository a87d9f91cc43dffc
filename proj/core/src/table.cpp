#include "pdtrank/table.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pdtrank/delta.hpp"
#include "pdtrank/ranks.hpp"
#include "text_util.hpp"

namespace pdtrank {

const std::vector<std::string>& rank_columns() {
    static const std::vector<std::string> columns = {"partition", "alpha",      "beta", "rank",
                                                     "mrank",     "mrank_mod3", "class"};
    return columns;
}

const std::string& RankRow::column(const std::string& name) const {
    if (name == "partition") return partition;
    if (name == "alpha") return alpha;
    if (name == "beta") return beta;
    if (name == "rank") return rank;
    if (name == "mrank") return mrank;
    if (name == "mrank_mod3") return mrank_mod3;
    if (name == "class") return rank_class;
    throw std::out_of_range("unknown rank table column \"" + name + "\"");
}

RankRow make_rank_row(const OverlinePartition& lambda) {
    const S2Triple image = delta(lambda);
    const int mrank = modified_rank(lambda);
    return RankRow{
        .partition = format_overline(lambda),
        .alpha = to_text(image.alpha()),
        .beta = to_text(image.beta()),
        .rank = pdt_rank(lambda).to_string(),
        .mrank = std::to_string(mrank),
        .mrank_mod3 = std::to_string(((mrank % 3) + 3) % 3),
        .rank_class = std::string(to_string(classify(lambda))),
    };
}

std::vector<RankRow> rank_table(int n) {
    std::vector<RankRow> rows;
    for_each_s1(n, [&](const OverlinePartition& lambda) { rows.push_back(make_rank_row(lambda)); });
    return rows;
}

void write_tsv(std::ostream& out, const std::vector<RankRow>& rows) {
    const auto& columns = rank_columns();
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "\t" : "") << row.column(columns[i]);
        out << '\n';
    }
}

nlohmann::json rows_to_json(const std::vector<RankRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json j = nlohmann::json::object();
        j["partition"] = row.partition;
        j["alpha"] = row.alpha;
        j["beta"] = row.beta;
        j["rank"] = row.rank == "X" ? nlohmann::json(nullptr) : nlohmann::json(std::stoi(row.rank));
        j["mrank"] = std::stoi(row.mrank);
        j["mrank_mod3"] = std::stoi(row.mrank_mod3);
        j["class"] = row.rank_class;
        out.push_back(std::move(j));
    }
    return out;
}

GoldenTable parse_golden(std::istream& in) {
    GoldenTable table;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& why) {
        return std::runtime_error("golden table line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::trim(line).empty()) continue;
        if (line.front() == '#') {
            const auto fields = detail::split(line, '\t');
            if (fields.front() == "#deviation") {
                if (fields.size() != 4) throw fail("#deviation needs partition, column and computed value");
                table.deviations.push_back(
                    {std::string(fields[1]), std::string(fields[2]), std::string(fields[3])});
            }
            continue;
        }
        std::vector<std::string> cells;
        for (auto cell : detail::split(line, '\t')) cells.emplace_back(detail::trim(cell));
        if (table.columns.empty()) {
            table.columns = std::move(cells);
            if (table.columns.empty() || table.columns.front() != "partition") {
                throw fail("first column must be \"partition\"");
            }
            continue;
        }
        if (cells.size() != table.columns.size()) {
            throw fail("expected " + std::to_string(table.columns.size()) + " cells, got " +
                       std::to_string(cells.size()));
        }
        table.rows.push_back(std::move(cells));
    }
    if (table.columns.empty()) throw std::runtime_error("golden table has no header");
    return table;
}

GoldenTable read_golden(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden table " + path.string());
    return parse_golden(in);
}

namespace {

std::string canonical_cell(const std::string& column, const std::string& value) {
    if (column == "partition") return format_overline(parse_overline(value));
    if (column == "alpha" || column == "beta") return to_text(parse_partition(value));
    return value;
}

}  // namespace

GoldenComparison compare_to_golden(const GoldenTable& golden, const std::vector<RankRow>& computed) {
    GoldenComparison result;
    auto fail = [&](const std::string& why) {
        result.notes.push_back(why);
        if (result.first_failure.empty()) result.first_failure = why;
    };

    std::map<std::string, const RankRow*> by_key;
    for (const auto& row : computed) by_key.emplace(row.partition, &row);
    const auto& known = rank_columns();
    for (const auto& column : golden.columns) {
        if (std::find(known.begin(), known.end(), column) == known.end()) {
            fail("golden column \"" + column + "\" is not produced");
            return result;
        }
    }

    std::set<std::pair<std::string, std::string>> observed_deviations;
    std::set<std::string> seen;
    for (const auto& cells : golden.rows) {
        std::string key;
        try {
            key = canonical_cell("partition", cells.front());
        } catch (const std::invalid_argument& e) {
            fail(e.what());
            continue;
        }
        if (!seen.insert(key).second) {
            fail("golden row " + key + " appears twice");
            continue;
        }
        auto it = by_key.find(key);
        if (it == by_key.end()) {
            fail("golden row " + key + " not produced");
            continue;
        }
        for (std::size_t c = 1; c < golden.columns.size(); ++c) {
            const std::string& column = golden.columns[c];
            const std::string actual = it->second->column(column);
            const std::string expected = canonical_cell(column, cells[c]);
            if (actual == expected) continue;
            bool declared = false;
            for (const auto& d : golden.deviations) {
                if (d.column == column && canonical_cell("partition", d.partition) == key &&
                    d.computed == actual) {
                    declared = true;
                }
            }
            if (declared) {
                observed_deviations.emplace(key, column);
                result.notes.push_back("documented deviation: " + key + " " + column + " table=" +
                                       expected + " computed=" + actual);
            } else {
                fail(key + " " + column + ": expected " + expected + ", got " + actual);
            }
        }
    }
    for (const auto& row : computed) {
        if (!seen.count(row.partition)) fail("computed row " + row.partition + " missing from golden table");
    }
    for (const auto& d : golden.deviations) {
        if (!observed_deviations.count({canonical_cell("partition", d.partition), d.column})) {
            fail("declared deviation not observed: " + d.partition + " " + d.column);
        }
    }
    result.matches = result.first_failure.empty();
    return result;
}

}  // namespace pdtrank
