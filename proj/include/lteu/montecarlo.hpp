#pragma once

#include "lteu/channel_model.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lteu {

struct SampleBatch {
    std::vector<double> values;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    std::string label;
};

// SINR of the first served user under full zero-forcing: each sample draws a
// channel set, quantizes the user channels at the config's error fraction,
// builds precoders that null the other users, the AP, and n_wifi_nulled
// station estimates, and evaluates the decomposition-form SINR.
SampleBatch simulate_sinr_samples(const SmallCellConfig& config, int k_sues,
                                  int n_wifi_nulled, std::int64_t n_samples,
                                  std::uint64_t seed);

// Normalized residual-interference sum over the served streams at one Wi-Fi
// receiver, sum of |phi^H v_k|^2 with phi an independent CN(0,1) draw. The
// sum is scale-free; epsilon only enters the scenario draw the precoders come
// from. Nulls are fully loaded: n_antennas - 1 - k_sues station estimates.
SampleBatch simulate_interference_samples(const SmallCellConfig& config, int k_sues,
                                          double epsilon, std::int64_t n_samples,
                                          std::uint64_t seed);

// Same sum against an exactly orthonormal set of k_dirs directions, the
// reference fixture whose law is Erlang(k_dirs, 1) by construction.
SampleBatch orthonormal_interference_samples(int k_dirs, int n_antennas,
                                             std::int64_t n_samples, std::uint64_t seed);

// Sup-norm distance between the batch's empirical CDF and the supplied CDF.
double ks_distance(const SampleBatch& samples, const std::function<double(double)>& cdf);

}  // namespace lteu
