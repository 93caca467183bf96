#pragma once

#include <string>
#include <vector>

#include "hankelforge/json_io.hpp"

namespace hankelforge {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long checks = 0;
    std::vector<std::string> failures;  // first few failing checks, for diagnosis
    Json details = Json::object();      // measured constants and the like
};

struct VerifyOptions {
    int max_s = 6;
    bool parallel = true;
};

/// Suite names accepted by run_suite / the CLI --suite flag, in run order.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

/// Runs the named suites (fanned out across threads when options.parallel)
/// and returns results in the given order.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& options);

}  // namespace hankelforge
