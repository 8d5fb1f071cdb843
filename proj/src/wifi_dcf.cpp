#include "lteu/wifi_dcf.hpp"

#include <cmath>
#include <stdexcept>

namespace lteu {

namespace {

// tau = 2(1-2p)/((1-2p)(W+1) + pW(1-(2p)^L)) rewritten through the geometric
// sum so the p = 1/2 point needs no special case.
double tau_of_p(double p, int w, int l) {
    double s = 0.0;
    double term = 1.0;
    for (int j = 0; j < l; ++j) {
        s += term;
        term *= 2.0 * p;
    }
    return 2.0 / ((w + 1) + p * w * s);
}

}  // namespace

double backoff_attempt_probability(double p_collision, const WifiMacConfig& mac) {
    if (!(p_collision >= 0.0) || !(p_collision <= 1.0)) {
        throw std::domain_error("backoff_attempt_probability: p_collision in [0,1]");
    }
    if (!mac.valid()) throw std::invalid_argument("backoff_attempt_probability: invalid mac config");
    return tau_of_p(p_collision, mac.min_window, mac.max_stage);
}

std::pair<double, double> solve_tau(double m_users, const WifiMacConfig& mac) {
    if (!(m_users >= 1.0)) throw std::domain_error("solve_tau: requires m_users >= 1");
    if (!mac.valid()) throw std::invalid_argument("solve_tau: invalid mac config");
    const int w = mac.min_window;
    const int l = mac.max_stage;
    // g(tau) = tau_of_p(p(tau)) - tau is positive at 0+ and negative at 1-,
    // and p(tau) is nondecreasing, so bisection converges.
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double p = 1.0 - std::pow(1.0 - mid, m_users - 1.0);
        if (tau_of_p(p, w, l) - mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double tau = 0.5 * (lo + hi);
    double p = 1.0 - std::pow(1.0 - tau, m_users - 1.0);
    tau = tau_of_p(p, w, l);  // final polish keeps the pair self-consistent
    p = 1.0 - std::pow(1.0 - tau, m_users - 1.0);
    return {tau, p};
}

double success_probability(double tau, double m_users) {
    if (!(tau > 0.0) || !(tau < 1.0)) throw std::domain_error("success_probability: tau in (0,1)");
    double p_tr = 1.0 - std::pow(1.0 - tau, m_users);
    return m_users * tau * std::pow(1.0 - tau, m_users - 1.0) / p_tr;
}

double busy_probability(double tau, double m_users) {
    return 1.0 - std::pow(1.0 - tau, m_users);
}

std::pair<double, double> occupancy_durations(const WifiMacConfig& mac) {
    if (!mac.valid()) throw std::invalid_argument("occupancy_durations: invalid mac config");
    double header = (mac.mac_header_bits + mac.phy_header_bits) / mac.bit_rate;
    double data = mac.payload_bits / mac.bit_rate;
    double q_success = header + data + mac.sifs + mac.ack_time + mac.difs;
    double q_collision = header + data + mac.difs + mac.collision_extra_time;
    return {q_success, q_collision};
}

DcfSolution wifi_throughput(double m_users, const WifiMacConfig& mac) {
    auto [tau, p] = solve_tau(m_users, mac);
    auto [qs, qc] = occupancy_durations(mac);
    DcfSolution sol;
    sol.tau = tau;
    sol.p_collision = p;
    sol.p_busy = busy_probability(tau, m_users);
    sol.p_success = success_probability(tau, m_users);
    double denom = (1.0 - sol.p_busy) * mac.slot_time +
                   sol.p_busy * sol.p_success * qs +
                   sol.p_busy * (1.0 - sol.p_success) * qc;
    sol.throughput_bps = sol.p_busy * sol.p_success * mac.payload_bits / denom;
    return sol;
}

}  // namespace lteu
