#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heatforms {

/// Quantified outcome of one identity check.  `gated` distinguishes
/// pass/fail checks from purely informational diagnostics.
struct VerificationReport {
    std::string check;
    std::string complex_name;
    int degree = -1;
    std::string scheme;
    std::vector<double> times;
    std::vector<double> abs_residuals;
    std::vector<double> rel_residuals;
    double tolerance = 0.0;
    bool pass = false;
    bool gated = true;
    std::vector<std::string> notes;

    nlohmann::json to_json() const;
};

}  // namespace heatforms
