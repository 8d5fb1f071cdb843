#include "lteu/dof_optimizer.hpp"

#include "lteu/lte_analytics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lteu {

std::vector<int> select_wifi_users(int d, const std::vector<double>& per_user_gain) {
    auto m = static_cast<int>(per_user_gain.size());
    if (d < 0 || d > m) throw std::domain_error("select_wifi_users: requires 0 <= d <= M");
    std::vector<int> order(per_user_gain.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return per_user_gain[static_cast<std::size_t>(a)] >
               per_user_gain[static_cast<std::size_t>(b)];
    });
    std::vector<int> picked(order.begin(), order.begin() + d);
    std::sort(picked.begin(), picked.end());
    return picked;
}

DofAllocation evaluate_allocation(int d, const ScenarioInputs& inputs, const Weights& weights,
                                  const RateRequirements& reqs) {
    if (!inputs.valid()) throw std::invalid_argument("evaluate_allocation: invalid inputs");
    if (!weights.valid()) throw std::invalid_argument("evaluate_allocation: invalid weights");
    if (!reqs.valid()) throw std::invalid_argument("evaluate_allocation: invalid requirements");
    int nt = inputs.small_cell.n_antennas;
    if (d < 0 || d > nt - 3) {
        throw std::domain_error("evaluate_allocation: requires 0 <= d <= n_antennas - 3");
    }
    if (d > static_cast<int>(inputs.wifi_path_loss.size())) {
        throw std::domain_error("evaluate_allocation: more nulls than Wi-Fi stations");
    }

    DofAllocation alloc;
    alloc.wifi_dof = d;
    alloc.sue_dof = nt - 1 - d;

    SueCount choice = optimal_sue_count(alloc.sue_dof, inputs.small_cell);
    alloc.k_served = choice.k_star;
    alloc.r_small = choice.r_s_star;

    const auto& losses = inputs.wifi_path_loss;
    double eps = inputs.small_cell.wifi_csi_corr;
    double power = inputs.small_cell.tx_power;
    std::vector<double> gains(losses.size());
    for (std::size_t m = 0; m < losses.size(); ++m) {
        auto nulled = interference_model(true, alloc.k_served, losses[m], eps, power,
                                         inputs.dist_mode);
        auto open = interference_model(false, alloc.k_served, losses[m], eps, power,
                                       inputs.dist_mode);
        gains[m] = access_probability(nulled, inputs.threshold_w) -
                   access_probability(open, inputs.threshold_w);
    }
    alloc.selected_wifi = select_wifi_users(d, gains);

    AccessProfile profile =
        expected_active_users(alloc.selected_wifi, losses, alloc.k_served, eps, power,
                              inputs.dist_mode, inputs.threshold_w);
    alloc.m_bar = profile.expected_active;
    alloc.m_bar_clamped = alloc.m_bar < 1.0;
    if (alloc.m_bar_clamped) {
        // Below one expected contender the saturation model does not apply;
        // the band carries a lone station's throughput scaled by the fraction
        // of time any contender is present. Continuous at m_bar = 1.
        alloc.r_wifi = alloc.m_bar * wifi_throughput(1.0, inputs.mac).throughput_bps;
    } else {
        alloc.r_wifi = wifi_throughput(alloc.m_bar, inputs.mac).throughput_bps;
    }

    alloc.objective = std::min(weights.e_s * alloc.r_small, weights.e_w * alloc.r_wifi);
    ConstraintReport report = check_constraints(alloc, reqs, alloc.m_bar, nt);
    alloc.feasible = !alloc.m_bar_clamped && report.all();
    return alloc;
}

DofAllocation allocate_dof(const ScenarioInputs& inputs, const Weights& weights,
                           const RateRequirements& reqs) {
    if (!inputs.valid()) throw std::invalid_argument("allocate_dof: invalid inputs");
    int nt = inputs.small_cell.n_antennas;
    if (nt < 4) throw std::domain_error("allocate_dof: requires n_antennas >= 4");

    std::map<int, DofAllocation> seen;
    auto eval = [&](int d) -> const DofAllocation& {
        auto it = seen.find(d);
        if (it == seen.end()) {
            it = seen.emplace(d, evaluate_allocation(d, inputs, weights, reqs)).first;
        }
        return it->second;
    };

    int d_min = 0;
    int d_max = std::min(nt - 3, static_cast<int>(inputs.wifi_path_loss.size()));
    while (d_max - d_min > 1) {
        int mid = (d_min + d_max) / 2;
        const DofAllocation& a = eval(mid);
        // The weighted gap e_s*R_s - e_w*R_w falls as nulls move to Wi-Fi, so a
        // positive gap means the balance point lies at more Wi-Fi DoF.
        if (weights.e_s * a.r_small > weights.e_w * a.r_wifi) {
            d_min = mid;
        } else {
            d_max = mid;
        }
    }
    eval(d_min);
    eval(d_max);

    const DofAllocation* best_feasible = nullptr;
    const DofAllocation* best_any = nullptr;
    for (const auto& [d, alloc] : seen) {
        if (!best_any || alloc.objective > best_any->objective) best_any = &alloc;
        if (alloc.feasible &&
            (!best_feasible || alloc.objective > best_feasible->objective)) {
            best_feasible = &alloc;
        }
    }

    DofAllocation result = best_feasible ? *best_feasible : *best_any;
    result.iterations = static_cast<int>(seen.size());
    result.visited.reserve(seen.size());
    for (const auto& [d, alloc] : seen) {
        result.visited.push_back({d, alloc.objective, alloc.feasible});
    }
    if (!best_feasible) {
        result.diagnostic = "no feasible DoF split; returning the best visited objective";
    }
    return result;
}

ConstraintReport check_constraints(const DofAllocation& alloc, const RateRequirements& reqs,
                                   double m_bar, int n_antennas) {
    ConstraintReport r;
    r.sue_rate_ok = alloc.k_served > 0 &&
                    alloc.r_small / alloc.k_served >= reqs.min_sue_rate;
    r.wifi_rate_ok = alloc.r_wifi / std::max(m_bar, 1.0) >= reqs.min_wifi_rate;
    r.sue_count_ok = alloc.k_served >= 2 && alloc.k_served <= alloc.sue_dof;
    r.dof_budget_ok = alloc.sue_dof + alloc.wifi_dof == n_antennas - 1 &&
                      static_cast<int>(alloc.selected_wifi.size()) == alloc.wifi_dof;
    return r;
}

}  // namespace lteu
