#include "cli.hpp"

#include <climits>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdtrank/pdtrank.hpp"

namespace pdtrank::cli {

namespace {

struct Options {
    int n = 5;
    int modulus = 3;
    int terms = 20;
    int max_n = 0;
    std::string format = "tsv";
    std::string which;
    std::string check;
    bool all = false;
    std::string data_dir;
};

std::string delta_text(const S2Triple& t) {
    return "alpha=" + to_text(t.alpha()) + ", beta=" + to_text(t.beta()) + ", t=" + std::to_string(t.tag());
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for_each_s1(o.n, [&](const OverlinePartition& lambda) {
            const S2Triple image = delta(lambda);
            const RankValue rank = pdt_rank(lambda);
            rows.push_back({{"partition", format_overline(lambda)},
                            {"lambda", to_json(lambda)},
                            {"alpha", to_text(image.alpha())},
                            {"beta", to_text(image.beta())},
                            {"t", image.tag()},
                            {"rank", rank.is_exceptional() ? nlohmann::json(nullptr) : nlohmann::json(rank.value())},
                            {"class", std::string(to_string(classify(lambda)))},
                            {"mrank", modified_rank(lambda)}});
        });
        out << rows.dump(2) << '\n';
        return kExitPass;
    }
    out << "partition\tdelta\trank\tclass\tmrank\n";
    for_each_s1(o.n, [&](const OverlinePartition& lambda) {
        out << format_overline(lambda) << '\t' << delta_text(delta(lambda)) << '\t'
            << pdt_rank(lambda).to_string() << '\t' << to_string(classify(lambda)) << '\t'
            << modified_rank(lambda) << '\n';
    });
    return kExitPass;
}

int cmd_table(const Options& o, std::ostream& out) {
    write_tsv(out, rank_table(o.n));
    return kExitPass;
}

template <typename Map>
nlohmann::json keyed(const Map& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

int cmd_counts(const Options& o, std::ostream& out) {
    const auto ndt = ndt_counts(o.n).counts;
    const auto nmdt = nmdt_counts(o.n);
    const auto ndt_res = residue_sums(ndt, o.modulus);
    const auto nmdt_res = residue_sums(nmdt, o.modulus);
    if (o.format == "json") {
        const nlohmann::json j = {{"n", o.n},          {"modulus", o.modulus},  {"ndt", keyed(ndt)},
                                  {"nmdt", keyed(nmdt)}, {"ndt_residue", keyed(ndt_res)},
                                  {"nmdt_residue", keyed(nmdt_res)}};
        out << j.dump(2) << '\n';
        return kExitPass;
    }
    out << "kind\tkey\tvalue\n";
    for (const auto& [m, c] : ndt) out << "ndt\t" << m << '\t' << c << '\n';
    for (const auto& [m, c] : nmdt) out << "nmdt\t" << m << '\t' << c << '\n';
    for (const auto& [r, c] : ndt_res) out << "ndt_residue\t" << r << '\t' << c << '\n';
    for (const auto& [r, c] : nmdt_res) out << "nmdt_residue\t" << r << '\t' << c << '\n';
    return kExitPass;
}

Series series_by_name(const std::string& which, int terms) {
    if (which == "pdt") return pdt_generating_function(terms);
    if (which == "pd-prefactor") return pd_prefactor(terms);
    if (which == "lambert") return lambert_pdt(terms);
    if (which == "theta") return theta_alternating(terms);
    if (which == "G") return dissection_series(terms);
    throw std::invalid_argument("unknown series " + which);
}

nlohmann::json coefficient_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return to_string(c);
}

int cmd_series(const Options& o, std::ostream& out) {
    const Series s = series_by_name(o.which, o.terms);
    if (o.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (int n = 0; n <= o.terms; ++n) coeffs.push_back(coefficient_json(s[n]));
        out << nlohmann::json{{"series", o.which}, {"terms", o.terms}, {"coefficients", coeffs}}.dump()
            << '\n';
        return kExitPass;
    }
    out << "n\tcoefficient\n";
    for (int n = 0; n <= o.terms; ++n) out << n << '\t' << to_string(s[n]) << '\n';
    return kExitPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<const CheckDefinition*> selected;
    if (o.all) {
        for (const auto& check : check_registry()) selected.push_back(&check);
    } else {
        selected.push_back(find_check(o.check));
    }
    CheckParams params;
    params.max_n = o.max_n;
    params.terms = o.terms;
    params.data_dir = o.data_dir;

    bool all_passed = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto* check : selected) {
        const CheckReport report = run_check(*check, params);
        all_passed = all_passed && report.passed;
        if (o.format == "json") {
            reports.push_back(to_json(report));
        } else {
            out << format_report(report) << std::flush;
        }
    }
    if (o.format == "json") out << reports.dump(2) << '\n';
    return all_passed ? kExitPass : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partitions with overline designated summands: enumeration, ranks, q-series checks",
                 "pdtrank"};
    app.require_subcommand(1);
    Options o;

    auto* enumerate = app.add_subcommand("enumerate", "list S1(n) with delta image, ranks and class");
    enumerate->add_option("--n", o.n, "weight")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    auto* table = app.add_subcommand("table", "rank table in the layout of the golden tables");
    table->add_option("--which", o.which, "table")->required()->check(CLI::IsMember({"2.1", "4.2"}));
    table->add_option("--n", o.n, "weight")->capture_default_str()->check(CLI::PositiveNumber);

    auto* counts = app.add_subcommand("counts", "signed pdt-rank counts and residue sums");
    counts->add_option("--n", o.n, "weight")->required()->check(CLI::PositiveNumber);
    counts->add_option("--modulus", o.modulus, "modulus")->capture_default_str()->check(CLI::Range(2, INT_MAX));
    counts->add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    auto* series = app.add_subcommand("series", "print series coefficients 0..terms");
    series->add_option("--which", o.which, "series")
        ->required()
        ->check(CLI::IsMember({"pdt", "pd-prefactor", "lambert", "theta", "G"}));
    series->add_option("--terms", o.terms, "highest power of q")->capture_default_str()->check(CLI::NonNegativeNumber);
    series->add_option("--format", o.format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    std::vector<std::string> names;
    for (const auto& check : check_registry()) names.push_back(check.name);
    auto* verify = app.add_subcommand("verify", "run named checks; exit 1 if any fails");
    auto* check_opt = verify->add_option("--check", o.check, "check name")->check(CLI::IsMember(names));
    auto* all_flag = verify->add_flag("--all", o.all, "run every check");
    check_opt->excludes(all_flag);
    verify->add_option("--max-n", o.max_n, "enumeration bound")->check(CLI::PositiveNumber);
    auto* terms_opt = verify->add_option("--terms", o.terms, "series precision")->check(CLI::PositiveNumber);
    verify->add_option("--data-dir", o.data_dir, "directory with the golden tables");
    verify->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        if (verify->parsed()) {
            if (!o.all && o.check.empty()) throw CLI::RequiredError("--check or --all");
            if (terms_opt->count() == 0) o.terms = 0;
            if (o.format == "tsv") o.format = "text";
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (table->parsed()) return cmd_table(o, out);
        if (counts->parsed()) return cmd_counts(o, out);
        if (series->parsed()) return cmd_series(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace pdtrank::cli
