#pragma once

#include <string>
#include <vector>

namespace socoulomb {

// Outcome of one verified relation.  Assertion rows pass exactly when the
// computed residual vanishes identically; informational rows always pass and
// carry their observation in `note`.
struct RelationResult {
    std::string id;
    bool pass = false;
    bool info = false;
    int residual_terms = 0;
    double millis = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<RelationResult> relations;
    bool pass = true;
    double millis = 0.0;
};

// Names of every registered relation suite, sorted.
std::vector<std::string> suite_names();

// Run one suite to completion; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name);

}  // namespace socoulomb
