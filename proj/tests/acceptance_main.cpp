// Acceptance gate: one pass/fail line per shipped guarantee, exercised at the
// default scenario configuration. Exits nonzero when any line fails.
#include "lteu/scenario.hpp"
#include "lteu/validation.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace lteu;

namespace {

struct GroupRun {
    std::map<std::string, CheckResult> rows;
    double seconds = 0.0;
};

GroupRun run_group(std::vector<CheckResult> (*fn)(const ScenarioConfig&),
                   const ScenarioConfig& config) {
    GroupRun out;
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> rows;
    try {
        rows = fn(config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: check group threw: %s\n", e.what());
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (CheckResult& r : rows) {
        std::string name = r.name;
        out.rows.emplace(std::move(name), std::move(r));
    }
    return out;
}

double stat(const GroupRun& g, const std::string& name) {
    auto it = g.rows.find(name);
    return it == g.rows.end() ? 1e300 : it->second.statistic;
}

bool row_pass(const GroupRun& g, const std::string& name) {
    auto it = g.rows.find(name);
    return it != g.rows.end() && it->second.pass;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

int failures = 0;

void report(int idx, bool pass_checks, double seconds, double budget_s, const char* desc,
            const std::string& stats) {
    bool in_time = budget_s <= 0.0 || seconds < budget_s;
    bool pass = pass_checks && in_time;
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %-42s %s (%.1fs%s)\n", idx, pass ? "PASS" : "FAIL", desc,
                stats.c_str(), seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
}

}  // namespace

int main() {
    ScenarioConfig config;

    {
        GroupRun g = run_group(&checks::dcf_fixed_point, config);
        report(1, row_pass(g, "dcf_fixed_point_residual_max"), g.seconds, 1.0,
               "backoff fixed point residuals",
               fmt("residual=%.3g gate=1e-12", stat(g, "dcf_fixed_point_residual_max")));
    }
    {
        GroupRun g = run_group(&checks::dcf_simulation, config);
        report(2,
               row_pass(g, "dcf_sim_throughput_rel_dev_max") &&
                   row_pass(g, "dcf_sim_collision_rel_dev_max"),
               g.seconds, 30.0, "backoff model vs slot simulation",
               fmt("throughput_dev=%.4f collision_dev=%.4f gate=0.05",
                   stat(g, "dcf_sim_throughput_rel_dev_max"),
                   stat(g, "dcf_sim_collision_rel_dev_max")));
    }
    {
        GroupRun g = run_group(&checks::wifi_curve, config);
        report(3,
               row_pass(g, "wifi_curve_peak_offset") &&
                   row_pass(g, "wifi_curve_unimodal_violations"),
               g.seconds, 5.0, "contender sweep unimodal, peak near five",
               fmt("peak_offset=%.0f unimodal_violations=%.0f",
                   stat(g, "wifi_curve_peak_offset"),
                   stat(g, "wifi_curve_unimodal_violations")));
    }
    {
        GroupRun g = run_group(&checks::special_functions, config);
        report(4,
               row_pass(g, "special_e1_rel_err_max") && row_pass(g, "special_i2_rel_err_max") &&
                   row_pass(g, "special_psi_rel_err_max"),
               g.seconds, 10.0, "special functions vs quadrature",
               fmt("e1=%.3g i2=%.3g psi=%.3g gate=1e-7", stat(g, "special_e1_rel_err_max"),
                   stat(g, "special_i2_rel_err_max"), stat(g, "special_psi_rel_err_max")));
    }
    {
        GroupRun g = run_group(&checks::rate_consistency, config);
        report(5, row_pass(g, "rate_closed_vs_quadrature_rel_max"), g.seconds, 5.0,
               "throughput closed form vs quadrature",
               fmt("rel_dev=%.3g gate=1e-6", stat(g, "rate_closed_vs_quadrature_rel_max")));
    }
    {
        GroupRun g = run_group(&checks::sinr_distribution, config);
        report(6,
               row_pass(g, "sinr_ks_perfect_csi") && row_pass(g, "sinr_ks_best_documented_map"),
               g.seconds, 60.0, "SINR law vs beamforming simulation",
               fmt("ks_perfect=%.4f ks_sigma_b=%.4f ks_fitted=%.4f",
                   stat(g, "sinr_ks_perfect_csi"), stat(g, "sinr_ks_sigma_quant_error"),
                   stat(g, "sinr_ks_sigma_fitted")));
    }
    {
        GroupRun g = run_group(&checks::interference_distribution, config);
        report(7, row_pass(g, "interference_fixture_ks_default_mode"), g.seconds, 60.0,
               "interference law vs projection simulation",
               fmt("ks_default=%.4f zf_mean=%.3f ks_erlang=%.4f ks_gamma2k=%.4f",
                   stat(g, "interference_fixture_ks_default_mode"),
                   stat(g, "interference_zf_sum_mean"), stat(g, "interference_zf_ks_erlang"),
                   stat(g, "interference_zf_ks_gamma_2k")));
    }
    {
        GroupRun g = run_group(&checks::rate_sweep, config);
        report(8,
               row_pass(g, "rate_sweep_b4_argmax_offset") &&
                   row_pass(g, "rate_sweep_b8_monotone_violations"),
               g.seconds, 5.0, "served-user sweep shape at 4 and 8 bits",
               fmt("b4_argmax_offset=%.0f b8_violations=%.0f",
                   stat(g, "rate_sweep_b4_argmax_offset"),
                   stat(g, "rate_sweep_b8_monotone_violations")));
    }

    GroupRun alloc = run_group(&checks::allocation_sweep, config);
    report(9,
           row_pass(alloc, "dof_sweep_rs_monotone_violations") &&
               row_pass(alloc, "dof_sweep_rw_monotone_violations") &&
               row_pass(alloc, "weight_sweep_sue_dof_monotone_violations") &&
               row_pass(alloc, "weight_sweep_endpoint_offset"),
           alloc.seconds, 30.0, "DoF and weight sweep trends",
           fmt("rs_viol=%.0f rw_viol=%.0f dof_viol=%.0f endpoint_offset=%.0f",
               stat(alloc, "dof_sweep_rs_monotone_violations"),
               stat(alloc, "dof_sweep_rw_monotone_violations"),
               stat(alloc, "weight_sweep_sue_dof_monotone_violations"),
               stat(alloc, "weight_sweep_endpoint_offset")));

    {
        GroupRun g = run_group(&checks::precoder_orthogonality, config);
        report(10, row_pass(g, "zf_nulled_inner_product_max"), g.seconds, 10.0,
               "zero-forcing null depth",
               fmt("max_inner=%.3g gate=1e-8", stat(g, "zf_nulled_inner_product_max")));
    }

    {
        GroupRun sel = run_group(&checks::station_selection, config);
        report(11,
               row_pass(alloc, "optimizer_eval_count_max") &&
                   row_pass(alloc, "optimizer_returned_best_margin") &&
                   row_pass(sel, "greedy_selection_gap_max"),
               alloc.seconds + sel.seconds, 30.0, "allocator budget and optimality",
               fmt("evals=%.0f best_margin=%.3g greedy_gap=%.3g",
                   stat(alloc, "optimizer_eval_count_max"),
                   stat(alloc, "optimizer_returned_best_margin"),
                   stat(sel, "greedy_selection_gap_max")));
    }

    {
        // Determinism is independent of the sample counts, so the twin runs
        // use a lighter scenario to keep the gate quick.
        ScenarioConfig reduced = config;
        reduced.n_samples = 20000;
        reduced.n_slots = 100000;
        auto start = std::chrono::steady_clock::now();
        std::string first = validation_report_json(validation_checks(reduced));
        std::string second = validation_report_json(validation_checks(reduced));
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool same = !first.empty() && first == second;
        report(12, same, seconds, 0.0, "validation report byte determinism",
               fmt("bytes=%zu identical=%s", first.size(), same ? "yes" : "no"));
    }

    if (failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
    } else {
        std::printf("acceptance: %d of 12 criteria failed\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
