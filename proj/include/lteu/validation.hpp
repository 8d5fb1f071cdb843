#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lteu/scenario.hpp"

namespace lteu {

// One model-vs-oracle comparison. Gated rows carry a threshold and pass when
// statistic <= threshold; rows without a threshold are informational and
// always pass.
struct CheckResult {
    std::string name;
    double statistic = 0.0;
    std::optional<double> threshold;
    bool pass = true;
};

namespace checks {

// Contention fixed point re-substituted into its defining pair of equations.
std::vector<CheckResult> dcf_fixed_point(const ScenarioConfig& config);

// Analytic throughput and collision probability against the slot simulator
// at the module-default MAC timing.
std::vector<CheckResult> dcf_simulation(const ScenarioConfig& config);

// Shape of the Wi-Fi throughput curve over the station sweep, and the slot
// simulator's agreement with it, at the configured MAC timing.
std::vector<CheckResult> wifi_curve(const ScenarioConfig& config);

// Closed-form special functions against adaptive quadrature of their
// defining integrals on a random grid.
std::vector<CheckResult> special_functions(const ScenarioConfig& config);

// Closed-form ergodic throughput against direct integration of the SINR law.
std::vector<CheckResult> rate_consistency(const ScenarioConfig& config);

// Simulated post-precoding SINR distribution against the analytic law, with
// and without quantization error.
std::vector<CheckResult> sinr_distribution(const ScenarioConfig& config);

// Residual-interference sum at a Wi-Fi receiver against both candidate
// Gamma laws, plus the orthonormal-precoder fixture with an exact law.
std::vector<CheckResult> interference_distribution(const ScenarioConfig& config);

// Zero-forcing nulling quality over random scenario draws.
std::vector<CheckResult> precoder_orthogonality(const ScenarioConfig& config);

// Served-user-count sweep: Monte Carlo agreement and curve shape for both
// feedback budgets.
std::vector<CheckResult> rate_sweep(const ScenarioConfig& config);

// DoF split sweep and weight sweep: trends, endpoints, and optimizer
// accounting (evaluation count, returned-best).
std::vector<CheckResult> allocation_sweep(const ScenarioConfig& config);

// Greedy station selection against exhaustive subset search.
std::vector<CheckResult> station_selection(const ScenarioConfig& config);

// Exact algebraic identities of the channel model: quantization
// reconstruction, SINR form agreement, residual nulling, codebook error
// statistics, channel moments.
std::vector<CheckResult> model_identities(const ScenarioConfig& config);

}  // namespace checks

// Every check, in report order. A check that throws is converted into a
// failing row with a huge statistic rather than aborting the suite.
std::vector<CheckResult> validation_checks(const ScenarioConfig& config);

// JSON object mapping each check name to {statistic, threshold, pass};
// informational rows carry a null threshold. Ends with a newline.
std::string validation_report_json(const std::vector<CheckResult>& checks);

// Runs all checks, writes the JSON report to out_path ("" or "-" means
// stdout), prints one line per check on stderr when verbose, and returns 0
// only when every gated check passes.
int run_validate(const ScenarioConfig& config, const std::string& out_path,
                 bool verbose = false);

}  // namespace lteu
