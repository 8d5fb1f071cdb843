#pragma once

#include "lteu/dof_optimizer.hpp"
#include "lteu/scenario.hpp"

#include <string>
#include <vector>

namespace lteu {

struct Fig2Row {
    int k_sues = 0;
    int feedback_bits = 0;
    double r_s_closed = 0.0;  // bits/s
    double r_s_mc = 0.0;      // bits/s
};

struct Fig3Row {
    int m_users = 0;
    double r_w_analytic = 0.0;  // bits/s
    double r_w_sim = 0.0;       // bits/s
};

struct Fig4Row {
    int sue_dof = 0;
    double r_small = 0.0;  // bits/s
    double r_wifi = 0.0;   // bits/s
};

struct Table3Row {
    double e_s = 0.0;
    double e_w = 0.0;
    double r_small = 0.0;  // bits/s
    double r_wifi = 0.0;   // bits/s
    int sue_dof = 0;
    int wifi_dof = 0;
};

// Served-user sweep at 4 and 8 feedback bits: closed-form throughput next to
// a Monte Carlo column sampled from the same SINR law. Writes CSV when
// out_path is nonempty; throws if the 4-bit peak or 8-bit monotonicity the
// sweep is meant to show does not hold.
std::vector<Fig2Row> run_fig2(const ScenarioConfig& config, const std::string& out_path);

// Contender sweep M = 1..15: fixed-point model next to the slot-level
// simulator. Throws if the analytic column is not unimodal.
std::vector<Fig3Row> run_fig3(const ScenarioConfig& config, const std::string& out_path);

// One scenario draw, sweeping the user-side DoF split; throws if the
// small-cell column decreases or the Wi-Fi column increases anywhere.
std::vector<Fig4Row> run_fig4(const ScenarioConfig& config, const std::string& out_path);

// Weight sweep (0.1,0.9)..(0.5,0.5) in 0.05 steps through the allocator.
std::vector<Table3Row> run_table3(const ScenarioConfig& config, const std::string& out_path);

// The nine weight pairs used by run_table3.
std::vector<Weights> table3_weights();

// Allocator inputs for the configured scenario: one seeded station draw
// fixes the path losses shared by the DoF and weight sweeps.
ScenarioInputs scenario_inputs(const ScenarioConfig& config);

}  // namespace lteu
