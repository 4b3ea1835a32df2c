#pragma once

// Identity suites behind `iterlog verify`.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iterlog {

struct Check {
    std::string name;
    std::string paper_ref;  // name of the identity being checked
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    // Optional per-item table, printed in plain output only.
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table;

    bool ok() const;
};

struct VerifyOptions {
    int n = 16;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();  // without "all"

// Throws ParseError for an unknown suite. "all" runs every suite in parallel
// and concatenates the reports in suite_names() order.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opt);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace iterlog
