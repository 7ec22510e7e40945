#pragma once

#include <string>
#include <vector>

#include "heatforms/identity.hpp"

namespace heatforms {

/// Configuration of a discrete verification run.
struct SuiteConfig {
    std::string mesh = "torus8";          // builtin name or path to an OFF file
    std::string scheme = "both";          // identity | barycentric-lumped | both
    std::vector<int> degrees;             // empty = all valid degrees
    std::vector<double> times = {0.01, 0.1, 1.0};
    double tolerance = 1e-8;
    double cfactor = 2.0;                 // diffusion-scaling test factor
    unsigned seed = 1234;                 // random cochains for evolution checks
    int random_cochains = 10;
    int jobs = 1;
};

/// Resolve a builtin mesh name (tetra, ico<N>, torus<N>) or load an OFF
/// path.  Throws std::invalid_argument listing the builtins on an unknown
/// name.
SimplicialComplex builtin_mesh(const std::string& name);

/// Validate a config; throws std::invalid_argument naming the offending
/// field.
void validate_config(const SuiteConfig& config, const SimplicialComplex& c);

/// Run the full check suite for one mesh.  Report order is deterministic;
/// with jobs > 1 the checks run concurrently but results are identical.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// Stable file name for a report, unique within one suite run.
std::string report_filename(const VerificationReport& r);

/// Serialize every report into its own JSON file under dir.
void write_reports(const std::vector<VerificationReport>& reports,
                   const std::string& dir);

/// True iff every gated report passes.
bool all_gated_pass(const std::vector<VerificationReport>& reports);

}  // namespace heatforms
