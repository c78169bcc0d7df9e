#pragma once

#include "entrolab/config.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace entrolab {

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::optional<std::size_t> cases;  ///< overrides the suite's default count
    unsigned jobs = 1;
    Config config;
};

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    nlohmann::json certificates = nlohmann::json::array();
    nlohmann::json notes = nlohmann::json::object();
    double seconds = 0;  ///< wall time; kept out of the JSON report

    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite. Results do not depend on `jobs`. Throws InvalidArgument
/// for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

/// {"schema": "entrolab-report/1", "seed": ..., "suites": [...]}.
nlohmann::json make_report(const std::vector<SuiteResult>& results, std::uint64_t seed);

}  // namespace entrolab
