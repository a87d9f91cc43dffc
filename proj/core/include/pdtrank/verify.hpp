#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pdtrank {

struct Witness {
    int n = 0;
    std::string expected;
    std::string actual;
};

/// Outcome of one named check. A failed report always carries a witness.
struct CheckReport {
    std::string name;
    std::string range;
    bool passed = true;
    std::optional<Witness> first_failure;
    std::vector<std::string> notes;
};

struct CheckParams {
    int max_n = 0;   // enumeration bound; 0 selects the check's default
    int terms = 0;   // series precision; 0 selects the check's default
    std::filesystem::path data_dir;  // empty selects default_data_dir()
};

struct CheckDefinition {
    std::string name;
    std::string summary;
    int default_max_n = 0;  // 0 when the check has no enumeration bound
    int default_terms = 0;  // 0 when the check has no series precision
    std::function<CheckReport(const CheckParams&)> run;
};

/// Every published check, in the order `verify --all` runs them.
const std::vector<CheckDefinition>& check_registry();

const CheckDefinition* find_check(std::string_view name);

/// Fills defaults into `params` and runs the check.
CheckReport run_check(const CheckDefinition& check, CheckParams params = {});

/// Directory holding the golden tables, fixed at build time.
std::filesystem::path default_data_dir();

std::string format_report(const CheckReport& report);
nlohmann::json to_json(const CheckReport& report);

}  // namespace pdtrank
