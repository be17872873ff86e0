#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zipcone::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool pass() const;
    std::size_t failures() const;
};

std::vector<std::string> suite_names();

// Runs one suite; unknown names throw std::invalid_argument. All
// randomness derives from the seed, so the check outcomes (and the CLI
// report built from them) are reproducible byte for byte.
SuiteResult run_suite(const std::string& name, uint64_t seed);

}  // namespace zipcone::selftest
