#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace lteu {

// Coefficients of the residual-interference maps available through
// SmallCellConfig::sigma(). The fitted map comes from a one-dimensional
// Kolmogorov-Smirnov fit of the SINR law against Monte Carlo samples; the
// calibrated map is the power law that keeps the throughput model's served-user
// sweeps consistent with the beamforming simulation at both 4 and 8 feedback
// bits.
inline constexpr double kSigmaFitCoeff = 1.02;
inline constexpr double kSigmaCalCoeff = 2.18;
inline constexpr int kSigmaCalExponent = 4;

// Thermal noise power in watts over the given bandwidth at -174 dBm/Hz.
double thermal_noise_power(double bandwidth_hz);

enum class SigmaMode {
    quant_error,  // sigma = b
    fitted,       // sigma = kSigmaFitCoeff * b
    calibrated,   // sigma = kSigmaCalCoeff * b^kSigmaCalExponent
};

struct SmallCellConfig {
    int n_antennas = 8;
    double tx_power = 0.023;
    double bandwidth_hz = 20e6;
    double noise_power = thermal_noise_power(bandwidth_hz);
    int feedback_bits = 8;
    double quant_error = derived_quant_error(feedback_bits, n_antennas);
    double wifi_csi_corr = 0.95;
    SigmaMode sigma_mode = SigmaMode::calibrated;

    // Quantization error bound 2^(-B/(N_T-1)) for a B-bit random codebook.
    static double derived_quant_error(int bits, int nt);

    // Residual-interference coefficient fed to the throughput model.
    double sigma() const;

    bool valid() const;
};

struct GeometryConfig {
    enum class Placement {
        cell_disk,   // stations uniform in a disk of cell_radius_m around the cell
        ap_cluster,  // stations uniform in a disk of ap_spread_m around the AP
    };

    double cell_radius_m = 200.0;
    double path_loss_exp = 3.5;
    double ref_dist_m = 1.0;
    Placement placement = Placement::cell_disk;
    double ap_distance_m = 90.0;
    double ap_spread_m = 15.0;

    bool valid() const;

    // Log-distance path loss (d/d0)^(-alpha), floored at the reference distance.
    double path_loss(double dist_m) const;
};

struct ChannelSet {
    std::vector<Eigen::VectorXcd> sue_channels;       // true user channels h_k
    std::vector<Eigen::VectorXcd> wifi_channels;      // true Wi-Fi channels f_m
    std::vector<Eigen::VectorXcd> wifi_channels_est;  // estimates f_{m,0} known at the cell
    Eigen::VectorXcd ap_channel;                      // access point channel D
    std::vector<double> path_loss;                    // per Wi-Fi station A_m
};

struct QuantizedChannel {
    Eigen::VectorXcd direction_est;  // unit estimate of the channel direction
    Eigen::VectorXcd error_dir;      // unit error direction, orthogonal to the estimate
    double norm = 0.0;               // norm of the original channel vector
    double quant_error = 0.0;        // error fraction b
};

// Index sets naming which users a precoder set serves and which Wi-Fi
// stations it nulls.
struct PrecoderTargets {
    std::vector<int> served_sues;
    std::vector<int> nulled_wifi;
};

struct Precoders {
    std::vector<Eigen::VectorXcd> vectors;  // one unit precoder per served user
    std::vector<int> served_sues;
    std::vector<int> nulled_wifi;
};

// Draws one scenario's channels. Fading entries are i.i.d. CN(0,1); Wi-Fi true
// channels mix the estimate with a fresh draw at correlation wifi_csi_corr;
// path losses follow the placement model. Deterministic given the seed.
ChannelSet generate_channels(const SmallCellConfig& config, int n_sues, int n_wifi,
                             const GeometryConfig& geometry, std::uint64_t seed);

// f = sqrt(eps)*f_est + sqrt(1-eps)*phi with phi i.i.d. CN(0,1).
Eigen::VectorXcd apply_wifi_csi_error(const Eigen::VectorXcd& f_est, double epsilon,
                                      std::uint64_t seed);

// Splits a channel into a unit direction estimate and an orthogonal unit error
// direction such that h/||h|| = sqrt(1-b)*direction_est + sqrt(b)*error_dir
// holds exactly. Deterministic: the error draw is seeded by hashing the input.
QuantizedChannel quantize_channel(const Eigen::VectorXcd& h, double b);

// Random-vector-quantization feedback: picks the best of 2^bits isotropic unit
// codewords and reports the realized error b = 1 - |<h_dir, w>|^2.
QuantizedChannel rvq_quantize(const Eigen::VectorXcd& h, int feedback_bits,
                              std::uint64_t seed);

// Same selection rule against a caller-supplied codebook.
QuantizedChannel rvq_quantize_with_codebook(const Eigen::VectorXcd& h,
                                            const std::vector<Eigen::VectorXcd>& codebook);

// Matrix whose columns a precoder for served user k must null: the estimated
// channels of the nulled Wi-Fi stations, the AP channel, and the direction
// estimates of the other served users, in that order.
Eigen::MatrixXcd complementary_matrix(int k, const PrecoderTargets& targets,
                                      const std::vector<Eigen::VectorXcd>& sue_est,
                                      const std::vector<Eigen::VectorXcd>& wifi_est,
                                      const Eigen::VectorXcd& ap_channel);

// Unit-norm projection of h_hat onto the orthogonal complement of comp's
// column space. Throws when the projection is numerically zero.
Eigen::VectorXcd zf_precoder(const Eigen::VectorXcd& h_hat, const Eigen::MatrixXcd& comp);

// Builds the zero-forcing precoder of every served user.
Precoders build_precoders(const PrecoderTargets& targets,
                          const std::vector<Eigen::VectorXcd>& sue_est,
                          const std::vector<Eigen::VectorXcd>& wifi_est,
                          const Eigen::VectorXcd& ap_channel);

// Per-served-user SINR under the quantization decomposition: the estimate
// component of the channel is nulled at the other precoders, so interference
// enters only through the error direction scaled by b and the channel norm.
std::vector<double> sue_sinr(const ChannelSet& channels,
                             const std::vector<QuantizedChannel>& quantized,
                             const Precoders& precoders, const SmallCellConfig& config);

// Cross-check form measuring interference directly against the true channels.
std::vector<double> sue_sinr_direct(const ChannelSet& channels, const Precoders& precoders,
                                    const SmallCellConfig& config);

}  // namespace lteu
