#pragma once

#include <string>
#include <vector>

namespace ising::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;  // instance count when passing, first failure otherwise
};

// All registered identity-suite ids, in a stable order.
std::vector<std::string> suite_ids();

// Runs one suite; throws UsageError for an unknown id.
CheckResult run_suite(const std::string& id);

std::vector<CheckResult> run_all();

}  // namespace ising::verify
