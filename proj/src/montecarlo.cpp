#include "lteu/montecarlo.hpp"

#include "lteu/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lteu {
namespace {

std::uint64_t sample_seed(std::uint64_t seed, std::int64_t i) {
    return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i + 1);
}

Eigen::VectorXcd draw_cn(std::mt19937_64& eng, Eigen::Index n) {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double re = nd(eng);
        double im = nd(eng);
        v[i] = std::complex<double>(re, im);
    }
    return v;
}

PrecoderTargets full_targets(int k_sues, int n_wifi_nulled) {
    PrecoderTargets t;
    t.served_sues.resize(static_cast<std::size_t>(k_sues));
    std::iota(t.served_sues.begin(), t.served_sues.end(), 0);
    t.nulled_wifi.resize(static_cast<std::size_t>(n_wifi_nulled));
    std::iota(t.nulled_wifi.begin(), t.nulled_wifi.end(), 0);
    return t;
}

Precoders draw_precoders(const SmallCellConfig& config, int k_sues, int n_wifi_nulled,
                         std::uint64_t scenario_seed,
                         std::vector<QuantizedChannel>* quantized_out,
                         ChannelSet* set_out) {
    ChannelSet set = generate_channels(config, k_sues, n_wifi_nulled, GeometryConfig{},
                                       scenario_seed);
    std::vector<QuantizedChannel> quantized;
    std::vector<Eigen::VectorXcd> sue_est;
    quantized.reserve(static_cast<std::size_t>(k_sues));
    sue_est.reserve(static_cast<std::size_t>(k_sues));
    for (const auto& h : set.sue_channels) {
        quantized.push_back(quantize_channel(h, config.quant_error));
        sue_est.push_back(quantized.back().direction_est);
    }
    Precoders p = build_precoders(full_targets(k_sues, n_wifi_nulled), sue_est,
                                  set.wifi_channels_est, set.ap_channel);
    if (quantized_out) *quantized_out = std::move(quantized);
    if (set_out) *set_out = std::move(set);
    return p;
}

}  // namespace

SampleBatch simulate_sinr_samples(const SmallCellConfig& config, int k_sues,
                                  int n_wifi_nulled, std::int64_t n_samples,
                                  std::uint64_t seed) {
    if (!config.valid()) throw std::invalid_argument("simulate_sinr_samples: invalid config");
    if (k_sues < 1 || n_wifi_nulled < 0) {
        throw std::domain_error("simulate_sinr_samples: requires k_sues >= 1, nulls >= 0");
    }
    if (k_sues > config.n_antennas - n_wifi_nulled - 1) {
        throw std::domain_error("simulate_sinr_samples: too many users for the DoF budget");
    }
    if (n_samples < 1) throw std::domain_error("simulate_sinr_samples: requires n >= 1");

    SampleBatch batch;
    batch.values.reserve(static_cast<std::size_t>(n_samples));
    batch.n = n_samples;
    batch.seed = seed;
    batch.label = "sinr";
    for (std::int64_t i = 0; i < n_samples; ++i) {
        std::vector<QuantizedChannel> quantized;
        ChannelSet set;
        Precoders p = draw_precoders(config, k_sues, n_wifi_nulled, sample_seed(seed, i),
                                     &quantized, &set);
        batch.values.push_back(sue_sinr(set, quantized, p, config).front());
    }
    return batch;
}

SampleBatch simulate_interference_samples(const SmallCellConfig& config, int k_sues,
                                          double epsilon, std::int64_t n_samples,
                                          std::uint64_t seed) {
    if (!config.valid()) {
        throw std::invalid_argument("simulate_interference_samples: invalid config");
    }
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::domain_error("simulate_interference_samples: requires 0 <= epsilon <= 1");
    }
    int n_wifi_nulled = config.n_antennas - 1 - k_sues;
    if (k_sues < 1 || n_wifi_nulled < 0) {
        throw std::domain_error("simulate_interference_samples: infeasible k_sues");
    }
    if (n_samples < 1) {
        throw std::domain_error("simulate_interference_samples: requires n >= 1");
    }

    SmallCellConfig cfg = config;
    cfg.wifi_csi_corr = epsilon;

    auto eng = make_engine(seed, "interference_phi");
    SampleBatch batch;
    batch.values.reserve(static_cast<std::size_t>(n_samples));
    batch.n = n_samples;
    batch.seed = seed;
    batch.label = "interference";
    for (std::int64_t i = 0; i < n_samples; ++i) {
        Precoders p = draw_precoders(cfg, k_sues, n_wifi_nulled, sample_seed(seed, i),
                                     nullptr, nullptr);
        Eigen::VectorXcd phi = draw_cn(eng, cfg.n_antennas);
        double sum = 0.0;
        for (const auto& v : p.vectors) sum += std::norm(phi.dot(v));
        batch.values.push_back(sum);
    }
    return batch;
}

SampleBatch orthonormal_interference_samples(int k_dirs, int n_antennas,
                                             std::int64_t n_samples, std::uint64_t seed) {
    if (k_dirs < 1 || k_dirs > n_antennas) {
        throw std::domain_error("orthonormal_interference_samples: requires 1 <= k <= n");
    }
    if (n_samples < 1) {
        throw std::domain_error("orthonormal_interference_samples: requires n >= 1");
    }
    auto eng = make_engine(seed, "orthonormal_fixture");
    SampleBatch batch;
    batch.values.reserve(static_cast<std::size_t>(n_samples));
    batch.n = n_samples;
    batch.seed = seed;
    batch.label = "orthonormal";
    for (std::int64_t i = 0; i < n_samples; ++i) {
        Eigen::MatrixXcd g(n_antennas, k_dirs);
        for (int c = 0; c < k_dirs; ++c) g.col(c) = draw_cn(eng, n_antennas);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q =
            qr.householderQ() * Eigen::MatrixXcd::Identity(n_antennas, k_dirs);
        Eigen::VectorXcd phi = draw_cn(eng, n_antennas);
        batch.values.push_back((q.adjoint() * phi).squaredNorm());
    }
    return batch;
}

double ks_distance(const SampleBatch& samples, const std::function<double(double)>& cdf) {
    if (samples.values.empty()) throw std::invalid_argument("ks_distance: empty batch");
    std::vector<double> xs = samples.values;
    std::sort(xs.begin(), xs.end());
    double n = static_cast<double>(xs.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double f = cdf(xs[i]);
        double hi = (static_cast<double>(i) + 1.0) / n - f;
        double lo = f - static_cast<double>(i) / n;
        worst = std::max({worst, std::abs(hi), std::abs(lo)});
    }
    return worst;
}

}  // namespace lteu
