#pragma once

#include "lteu/channel_model.hpp"
#include "lteu/interference_stats.hpp"
#include "lteu/wifi_dcf.hpp"

#include <string>
#include <vector>

namespace lteu {

struct Weights {
    double e_s = 0.5;
    double e_w = 0.5;

    bool valid() const {
        return e_s >= 0.0 && e_s <= 1.0 && e_w >= 0.0 && e_w <= 1.0 &&
               std::abs(e_s + e_w - 1.0) <= 1e-9;
    }
};

struct RateRequirements {
    double min_sue_rate = 10e6;   // bits/s per served user
    double min_wifi_rate = 10e6;  // bits/s per active Wi-Fi station

    bool valid() const { return min_sue_rate >= 0.0 && min_wifi_rate >= 0.0; }
};

// Everything the allocator needs to score one DoF split. The access threshold
// is in watts; Wi-Fi path losses come from the scenario geometry.
struct ScenarioInputs {
    SmallCellConfig small_cell;
    WifiMacConfig mac;
    std::vector<double> wifi_path_loss;
    double threshold_w = 0.0;
    DistMode dist_mode = DistMode::erlang;

    bool valid() const {
        return small_cell.valid() && mac.valid() && threshold_w >= 0.0 &&
               !wifi_path_loss.empty();
    }
};

struct VisitedPoint {
    int wifi_dof = 0;
    double objective = 0.0;
    bool feasible = false;
};

struct DofAllocation {
    int wifi_dof = 0;               // stations granted a null
    int sue_dof = 0;                // antenna dimensions left for users
    int k_served = 0;               // users actually served
    std::vector<int> selected_wifi; // which stations get the nulls
    double r_small = 0.0;           // bits/s
    double r_wifi = 0.0;            // bits/s
    double objective = 0.0;         // min(e_s*r_small, e_w*r_wifi)
    double m_bar = 0.0;             // expected Wi-Fi contenders
    bool m_bar_clamped = false;     // m_bar fell below one contender
    bool feasible = false;
    int iterations = 1;             // distinct DoF splits evaluated
    std::vector<VisitedPoint> visited;
    std::string diagnostic;
};

struct ConstraintReport {
    bool sue_rate_ok = false;    // r_small / k_served meets the requirement
    bool wifi_rate_ok = false;   // r_wifi per contender meets the requirement
    bool sue_count_ok = false;   // 2 <= k_served <= sue_dof
    bool dof_budget_ok = false;  // sue_dof + wifi_dof spends exactly n_antennas - 1

    bool all() const { return sue_rate_ok && wifi_rate_ok && sue_count_ok && dof_budget_ok; }
};

// The d largest-gain stations, ties broken toward the smaller index; returned
// in ascending index order.
std::vector<int> select_wifi_users(int d, const std::vector<double>& per_user_gain);

// Scores one split: d nulls to Wi-Fi, the rest of the budget to users.
DofAllocation evaluate_allocation(int d, const ScenarioInputs& inputs, const Weights& weights,
                                  const RateRequirements& reqs);

// Bisection over the Wi-Fi DoF budget, returning the best visited allocation
// (best feasible one when any split is feasible).
DofAllocation allocate_dof(const ScenarioInputs& inputs, const Weights& weights,
                           const RateRequirements& reqs);

ConstraintReport check_constraints(const DofAllocation& alloc, const RateRequirements& reqs,
                                   double m_bar, int n_antennas);

}  // namespace lteu
