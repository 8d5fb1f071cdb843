#include "lteu/lte_analytics.hpp"

#include "lteu/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lteu {
namespace {

double noise_load(const SinrModel& model) {
    return model.k_sues * model.noise_power / model.tx_power;
}

void require_valid(const SinrModel& model, const char* where) {
    if (!model.valid()) throw std::invalid_argument(std::string(where) + ": invalid model");
}

}  // namespace

double sinr_cdf(double x, const SinrModel& model) {
    require_valid(model, "sinr_cdf");
    if (x < 0.0) throw std::domain_error("sinr_cdf: requires x >= 0");
    double a = noise_load(model);
    return 1.0 - std::exp(-a * x) / std::pow(1.0 + model.sigma * x, model.k_sues - 1);
}

double small_cell_throughput(const SinrModel& model, double bandwidth_hz) {
    require_valid(model, "small_cell_throughput");
    if (bandwidth_hz <= 0.0) {
        throw std::domain_error("small_cell_throughput: requires bandwidth > 0");
    }
    double a = noise_load(model);
    double k = model.k_sues;
    double spectral;
    if (model.k_sues == 1 || model.sigma == 0.0) {
        spectral = k * M_LOG2E * exp_e1_scaled(a);
    } else {
        spectral = k * M_LOG2E * std::pow(model.sigma, 1.0 - k) *
                   psi(a, 1.0 / model.sigma, model.k_sues - 1);
    }
    return bandwidth_hz * spectral;
}

double small_cell_throughput_quadrature(const SinrModel& model, double bandwidth_hz) {
    require_valid(model, "small_cell_throughput_quadrature");
    if (bandwidth_hz <= 0.0) {
        throw std::domain_error("small_cell_throughput_quadrature: requires bandwidth > 0");
    }
    double a = noise_load(model);
    double sigma = model.sigma;
    double km1 = model.k_sues - 1;
    // Substituting x = e^u - 1 turns K/ln2 * integral of (1-F(x))/(1+x) dx
    // into K/ln2 * integral of the survival function over u; the upper limit
    // puts the truncated tail below e^-46 of the integrand scale.
    auto survival_u = [&](double u) {
        double x = std::expm1(u);
        return std::exp(-a * x) / std::pow(1.0 + sigma * x, km1);
    };
    double upper = std::log1p(46.0 / a);
    double spectral = model.k_sues * M_LOG2E * integrate(survival_u, 0.0, upper, 1e-10);
    return bandwidth_hz * spectral;
}

SueCount optimal_sue_count(int n_dof, const SmallCellConfig& config) {
    if (n_dof < 2) throw std::domain_error("optimal_sue_count: requires n_dof >= 2");
    if (!config.valid()) throw std::invalid_argument("optimal_sue_count: invalid config");
    SueCount best;
    for (int k = 2; k <= n_dof; ++k) {
        SinrModel model{k, config.sigma(), config.tx_power, config.noise_power};
        double r = small_cell_throughput(model, config.bandwidth_hz);
        if (best.k_star == 0 || r > best.r_s_star) {
            best.k_star = k;
            best.r_s_star = r;
        }
    }
    return best;
}

}  // namespace lteu
