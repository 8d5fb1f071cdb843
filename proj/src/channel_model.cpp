#include "lteu/channel_model.hpp"

#include "lteu/rng.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace lteu {
namespace {

Eigen::VectorXcd draw_cn_vector(std::mt19937_64& eng, Eigen::Index n) {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double re = nd(eng);
        double im = nd(eng);
        v[i] = std::complex<double>(re, im);
    }
    return v;
}

Eigen::VectorXcd mix_with_fresh(const Eigen::VectorXcd& est, double epsilon,
                                std::mt19937_64& eng) {
    Eigen::VectorXcd phi = draw_cn_vector(eng, est.size());
    return std::sqrt(epsilon) * est + std::sqrt(1.0 - epsilon) * phi;
}

// Deterministic unit vector orthogonal to the given unit vector: take the
// basis vector least aligned with it and project.
Eigen::VectorXcd orthogonal_unit(const Eigen::VectorXcd& dir) {
    Eigen::Index n = dir.size();
    Eigen::Index j = 0;
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs(dir[i]) < std::abs(dir[j])) j = i;
    }
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e[j] = 1.0;
    Eigen::VectorXcd u = e - dir * dir.dot(e);
    double nrm = u.norm();
    if (nrm < 1e-12) throw std::runtime_error("orthogonal_unit: degenerate direction");
    return u / nrm;
}

}  // namespace

double thermal_noise_power(double bandwidth_hz) {
    return std::pow(10.0, -174.0 / 10.0) * bandwidth_hz / 1000.0;
}

double SmallCellConfig::derived_quant_error(int bits, int nt) {
    if (bits < 0 || nt < 2) {
        throw std::domain_error("derived_quant_error: requires bits >= 0 and nt >= 2");
    }
    return std::exp2(-static_cast<double>(bits) / (nt - 1));
}

double SmallCellConfig::sigma() const {
    switch (sigma_mode) {
        case SigmaMode::quant_error:
            return quant_error;
        case SigmaMode::fitted:
            return kSigmaFitCoeff * quant_error;
        case SigmaMode::calibrated:
            return kSigmaCalCoeff * std::pow(quant_error, kSigmaCalExponent);
    }
    throw std::logic_error("sigma: unknown mode");
}

bool SmallCellConfig::valid() const {
    return n_antennas >= 2 && tx_power > 0.0 && noise_power > 0.0 && bandwidth_hz > 0.0 &&
           feedback_bits >= 0 && quant_error >= 0.0 && quant_error <= 1.0 &&
           wifi_csi_corr >= 0.0 && wifi_csi_corr <= 1.0;
}

bool GeometryConfig::valid() const {
    return cell_radius_m > 0.0 && path_loss_exp > 0.0 && ref_dist_m > 0.0 &&
           ap_distance_m >= 0.0 && ap_spread_m >= 0.0;
}

double GeometryConfig::path_loss(double dist_m) const {
    double d = std::max(dist_m, ref_dist_m);
    return std::pow(d / ref_dist_m, -path_loss_exp);
}

ChannelSet generate_channels(const SmallCellConfig& config, int n_sues, int n_wifi,
                             const GeometryConfig& geometry, std::uint64_t seed) {
    if (!config.valid()) throw std::invalid_argument("generate_channels: invalid config");
    if (!geometry.valid()) throw std::invalid_argument("generate_channels: invalid geometry");
    if (n_sues < 1) throw std::domain_error("generate_channels: requires n_sues >= 1");
    if (n_wifi < 0) throw std::domain_error("generate_channels: requires n_wifi >= 0");

    auto eng = make_engine(seed, "channels");
    const Eigen::Index nt = config.n_antennas;

    ChannelSet set;
    set.sue_channels.reserve(n_sues);
    for (int k = 0; k < n_sues; ++k) set.sue_channels.push_back(draw_cn_vector(eng, nt));

    set.wifi_channels_est.reserve(n_wifi);
    set.wifi_channels.reserve(n_wifi);
    for (int m = 0; m < n_wifi; ++m) set.wifi_channels_est.push_back(draw_cn_vector(eng, nt));
    for (int m = 0; m < n_wifi; ++m) {
        set.wifi_channels.push_back(mix_with_fresh(set.wifi_channels_est[m],
                                                   config.wifi_csi_corr, eng));
    }

    set.ap_channel = draw_cn_vector(eng, nt);

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    set.path_loss.reserve(n_wifi);
    for (int m = 0; m < n_wifi; ++m) {
        double ang = 2.0 * M_PI * unif(eng);
        double spread = geometry.placement == GeometryConfig::Placement::ap_cluster
                            ? geometry.ap_spread_m
                            : geometry.cell_radius_m;
        double rad = spread * std::sqrt(unif(eng));
        double cx = geometry.placement == GeometryConfig::Placement::ap_cluster
                        ? geometry.ap_distance_m
                        : 0.0;
        double dist = std::hypot(cx + rad * std::cos(ang), rad * std::sin(ang));
        set.path_loss.push_back(geometry.path_loss(dist));
    }
    return set;
}

Eigen::VectorXcd apply_wifi_csi_error(const Eigen::VectorXcd& f_est, double epsilon,
                                      std::uint64_t seed) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::domain_error("apply_wifi_csi_error: requires 0 <= epsilon <= 1");
    }
    auto eng = make_engine(seed, "wifi_csi");
    return mix_with_fresh(f_est, epsilon, eng);
}

QuantizedChannel quantize_channel(const Eigen::VectorXcd& h, double b) {
    if (b < 0.0 || b > 1.0) throw std::domain_error("quantize_channel: requires 0 <= b <= 1");
    if (h.size() < 2) throw std::domain_error("quantize_channel: requires dimension >= 2");
    double nrm = h.norm();
    if (nrm <= 0.0) throw std::domain_error("quantize_channel: zero vector");

    Eigen::VectorXcd dir = h / nrm;
    std::uint64_t seed =
        fnv1a_bytes(h.data(), sizeof(std::complex<double>) * static_cast<std::size_t>(h.size()));
    auto eng = make_engine(seed, "quantize");

    Eigen::VectorXcd u;
    double unorm = 0.0;
    do {
        Eigen::VectorXcd g = draw_cn_vector(eng, h.size());
        u = g - dir * dir.dot(g);
        unorm = u.norm();
    } while (unorm < 1e-12);
    u /= unorm;

    QuantizedChannel q;
    q.direction_est = std::sqrt(1.0 - b) * dir + std::sqrt(b) * u;
    q.error_dir = std::sqrt(b) * dir - std::sqrt(1.0 - b) * u;
    q.norm = nrm;
    q.quant_error = b;
    return q;
}

QuantizedChannel rvq_quantize_with_codebook(const Eigen::VectorXcd& h,
                                            const std::vector<Eigen::VectorXcd>& codebook) {
    if (codebook.empty()) throw std::invalid_argument("rvq_quantize: empty codebook");
    if (h.size() < 2) throw std::domain_error("rvq_quantize: requires dimension >= 2");
    double nrm = h.norm();
    if (nrm <= 0.0) throw std::domain_error("rvq_quantize: zero vector");
    Eigen::VectorXcd dir = h / nrm;

    std::size_t best = 0;
    double best_gain = -1.0;
    std::complex<double> best_q(0.0, 0.0);
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        if (codebook[i].size() != h.size()) {
            throw std::invalid_argument("rvq_quantize: codeword dimension mismatch");
        }
        std::complex<double> qi = codebook[i].dot(dir);
        double gain = std::norm(qi);
        if (gain > best_gain) {
            best_gain = gain;
            best = i;
            best_q = qi;
        }
    }

    QuantizedChannel q;
    q.norm = nrm;
    q.quant_error = std::max(0.0, 1.0 - best_gain);
    double mag = std::abs(best_q);
    q.direction_est = mag > 0.0 ? Eigen::VectorXcd(codebook[best] * (best_q / mag))
                                : codebook[best];
    if (q.quant_error > 1e-12) {
        Eigen::VectorXcd c =
            (dir - std::sqrt(1.0 - q.quant_error) * q.direction_est) / std::sqrt(q.quant_error);
        q.error_dir = c / c.norm();
    } else {
        q.error_dir = orthogonal_unit(q.direction_est);
    }
    return q;
}

QuantizedChannel rvq_quantize(const Eigen::VectorXcd& h, int feedback_bits,
                              std::uint64_t seed) {
    if (feedback_bits < 1 || feedback_bits > 16) {
        throw std::domain_error("rvq_quantize: requires 1 <= feedback_bits <= 16");
    }
    auto eng = make_engine(seed, "rvq");
    std::size_t n_words = std::size_t{1} << feedback_bits;
    std::vector<Eigen::VectorXcd> codebook;
    codebook.reserve(n_words);
    for (std::size_t i = 0; i < n_words; ++i) {
        Eigen::VectorXcd w = draw_cn_vector(eng, h.size());
        codebook.push_back(w / w.norm());
    }
    return rvq_quantize_with_codebook(h, codebook);
}

Eigen::MatrixXcd complementary_matrix(int k, const PrecoderTargets& targets,
                                      const std::vector<Eigen::VectorXcd>& sue_est,
                                      const std::vector<Eigen::VectorXcd>& wifi_est,
                                      const Eigen::VectorXcd& ap_channel) {
    bool served = false;
    for (int i : targets.served_sues) served = served || i == k;
    if (!served) throw std::invalid_argument("complementary_matrix: k not served");
    for (int i : targets.served_sues) {
        if (i < 0 || static_cast<std::size_t>(i) >= sue_est.size()) {
            throw std::invalid_argument("complementary_matrix: served index out of range");
        }
    }
    for (int m : targets.nulled_wifi) {
        if (m < 0 || static_cast<std::size_t>(m) >= wifi_est.size()) {
            throw std::invalid_argument("complementary_matrix: wifi index out of range");
        }
    }

    Eigen::Index nt = sue_est[static_cast<std::size_t>(k)].size();
    Eigen::Index cols = static_cast<Eigen::Index>(targets.nulled_wifi.size()) +
                        (ap_channel.size() > 0 ? 1 : 0) +
                        static_cast<Eigen::Index>(targets.served_sues.size()) - 1;
    Eigen::MatrixXcd comp(nt, cols);
    Eigen::Index c = 0;
    for (int m : targets.nulled_wifi) {
        const auto& f = wifi_est[static_cast<std::size_t>(m)];
        if (f.size() != nt) throw std::invalid_argument("complementary_matrix: dim mismatch");
        comp.col(c++) = f;
    }
    if (ap_channel.size() > 0) {
        if (ap_channel.size() != nt) {
            throw std::invalid_argument("complementary_matrix: dim mismatch");
        }
        comp.col(c++) = ap_channel;
    }
    for (int i : targets.served_sues) {
        if (i == k) continue;
        const auto& hh = sue_est[static_cast<std::size_t>(i)];
        if (hh.size() != nt) throw std::invalid_argument("complementary_matrix: dim mismatch");
        comp.col(c++) = hh;
    }
    return comp;
}

Eigen::VectorXcd zf_precoder(const Eigen::VectorXcd& h_hat, const Eigen::MatrixXcd& comp) {
    Eigen::Index nt = h_hat.size();
    if (comp.cols() == 0) return h_hat.normalized();
    if (comp.rows() != nt) throw std::invalid_argument("zf_precoder: dim mismatch");
    if (comp.cols() >= nt) {
        throw std::invalid_argument("zf_precoder: too many constraints for the antenna count");
    }

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(comp);
    Eigen::MatrixXcd thin_q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(nt, comp.cols());
    Eigen::VectorXcd v = h_hat - thin_q * (thin_q.adjoint() * h_hat);
    double nrm = v.norm();
    if (nrm < 1e-12) throw std::runtime_error("zf_precoder: degenerate projection");
    return v / nrm;
}

Precoders build_precoders(const PrecoderTargets& targets,
                          const std::vector<Eigen::VectorXcd>& sue_est,
                          const std::vector<Eigen::VectorXcd>& wifi_est,
                          const Eigen::VectorXcd& ap_channel) {
    if (targets.served_sues.empty()) {
        throw std::invalid_argument("build_precoders: no served users");
    }
    Precoders p;
    p.served_sues = targets.served_sues;
    p.nulled_wifi = targets.nulled_wifi;
    p.vectors.reserve(targets.served_sues.size());
    for (int k : targets.served_sues) {
        Eigen::MatrixXcd comp = complementary_matrix(k, targets, sue_est, wifi_est, ap_channel);
        p.vectors.push_back(zf_precoder(sue_est[static_cast<std::size_t>(k)], comp));
    }
    return p;
}

std::vector<double> sue_sinr(const ChannelSet& channels,
                             const std::vector<QuantizedChannel>& quantized,
                             const Precoders& precoders, const SmallCellConfig& config) {
    const std::size_t n_served = precoders.vectors.size();
    if (n_served == 0) throw std::invalid_argument("sue_sinr: no precoders");
    std::vector<double> out(n_served);
    double noise_term = static_cast<double>(n_served) / config.tx_power * config.noise_power;
    for (std::size_t a = 0; a < n_served; ++a) {
        auto k = static_cast<std::size_t>(precoders.served_sues[a]);
        const auto& h = channels.sue_channels.at(k);
        const auto& q = quantized.at(k);
        double signal = std::norm(h.dot(precoders.vectors[a]));
        double interference = 0.0;
        for (std::size_t i = 0; i < n_served; ++i) {
            if (i == a) continue;
            interference += std::norm(q.error_dir.dot(precoders.vectors[i]));
        }
        interference *= q.quant_error * q.norm * q.norm;
        out[a] = signal / (noise_term + interference);
    }
    return out;
}

std::vector<double> sue_sinr_direct(const ChannelSet& channels, const Precoders& precoders,
                                    const SmallCellConfig& config) {
    const std::size_t n_served = precoders.vectors.size();
    if (n_served == 0) throw std::invalid_argument("sue_sinr_direct: no precoders");
    std::vector<double> out(n_served);
    double noise_term = static_cast<double>(n_served) / config.tx_power * config.noise_power;
    for (std::size_t a = 0; a < n_served; ++a) {
        auto k = static_cast<std::size_t>(precoders.served_sues[a]);
        const auto& h = channels.sue_channels.at(k);
        double signal = std::norm(h.dot(precoders.vectors[a]));
        double interference = 0.0;
        for (std::size_t i = 0; i < n_served; ++i) {
            if (i == a) continue;
            interference += std::norm(h.dot(precoders.vectors[i]));
        }
        out[a] = signal / (noise_term + interference);
    }
    return out;
}

}  // namespace lteu
