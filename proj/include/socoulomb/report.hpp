#pragma once

#include "socoulomb/verifier.hpp"

#include <string>
#include <vector>

namespace socoulomb {

// Render suite reports for the CLI.  With timing == false every millisecond
// field is emitted as zero, which makes repeated runs byte-identical.
std::string report_text(const std::vector<SuiteReport>& reports, bool timing);
std::string report_json(const std::vector<SuiteReport>& reports, bool timing);
std::string report_csv(const std::vector<SuiteReport>& reports, bool timing);

}  // namespace socoulomb
