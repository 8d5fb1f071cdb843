#pragma once

#include <vector>

namespace lteu {

// Candidate laws for the normalized interference sum at a Wi-Fi receiver.
// gamma_2k: Gamma(2K, K). erlang: Gamma(K, 1), the sum of K unit-mean
// exponentials. The shipped default is erlang; `validate` emits the
// Kolmogorov-Smirnov comparison of both against simulation.
enum class DistMode { gamma_2k, erlang };

struct InterferenceModel {
    double shape = 1.0;
    double scale = 1.0;
    // Multiplier in watts applied to the Gamma variate; zero means the
    // receiver sees no residual interference at all.
    double coefficient = 0.0;
};

// P(X <= x) for X ~ Gamma(shape, scale).
double gamma_cdf(double x, double shape, double scale);

// Interference law at one Wi-Fi receiver with path loss path_loss, under a
// cell serving k_sues users at total power tx_power. Selected receivers are
// granted a beamforming null, shrinking the coefficient by (1 - epsilon).
InterferenceModel interference_model(bool selected, int k_sues, double path_loss,
                                     double epsilon, double tx_power,
                                     DistMode dist_mode = DistMode::erlang);

// Probability that the received interference stays at or below threshold.
double access_probability(const InterferenceModel& model, double threshold);

struct AccessProfile {
    std::vector<double> per_user_access;
    double expected_active = 0.0;  // sum of the per-user probabilities
};

// Access probability of every Wi-Fi station and the expected number of
// contenders, with stations in selected_set treated as nulled.
AccessProfile expected_active_users(const std::vector<int>& selected_set,
                                    const std::vector<double>& path_loss, int k_sues,
                                    double epsilon, double tx_power, DistMode dist_mode,
                                    double threshold);

// Default access threshold: 10 dB above the noise floor.
double default_threshold(double noise_power);

}  // namespace lteu
