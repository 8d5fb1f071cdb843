#pragma once

#include "lteu/channel_model.hpp"
#include "lteu/special_functions.hpp"

namespace lteu {

// Parameters of the small-cell SINR law: K users share the transmit power,
// and residual beamforming interference enters through the coefficient sigma.
struct SinrModel {
    int k_sues = 1;
    double sigma = 0.0;
    double tx_power = 0.023;
    double noise_power = thermal_noise_power(20e6);

    bool valid() const {
        return k_sues >= 1 && sigma >= 0.0 && tx_power > 0.0 && noise_power > 0.0;
    }
};

// F(x) = 1 - exp(-K*N0*x/P_T) / (1 + sigma*x)^(K-1) for x >= 0.
double sinr_cdf(double x, const SinrModel& model);

// Mean downlink rate in bits/s over all K users, closed form.
double small_cell_throughput(const SinrModel& model, double bandwidth_hz);

// Same quantity by adaptive quadrature of K * integral of (1-F(x))/((1+x)ln2);
// serves as the independent oracle for the closed form.
double small_cell_throughput_quadrature(const SinrModel& model, double bandwidth_hz);

struct SueCount {
    int k_star = 0;
    double r_s_star = 0.0;  // bits/s at k_star
};

// Exhaustive search over K = 2..n_dof for the user count maximizing the
// closed-form throughput, with sigma taken from the config's sigma map.
// Ties break toward the smaller K.
SueCount optimal_sue_count(int n_dof, const SmallCellConfig& config);

}  // namespace lteu
