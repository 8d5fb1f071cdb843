#include "lteu/validation.hpp"

#include "lteu/channel_model.hpp"
#include "lteu/dof_optimizer.hpp"
#include "lteu/interference_stats.hpp"
#include "lteu/lte_analytics.hpp"
#include "lteu/montecarlo.hpp"
#include "lteu/quadrature.hpp"
#include "lteu/rng.hpp"
#include "lteu/runners.hpp"
#include "lteu/special_functions.hpp"
#include "lteu/wifi_dcf.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lteu {
namespace checks {
namespace {

CheckResult gated(std::string name, double statistic, double threshold) {
    CheckResult r;
    r.name = std::move(name);
    r.statistic = statistic;
    r.threshold = threshold;
    r.pass = statistic <= threshold;
    return r;
}

CheckResult info(std::string name, double statistic) {
    CheckResult r;
    r.name = std::move(name);
    r.statistic = statistic;
    return r;
}

double rel_dev(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

Eigen::VectorXcd draw_cn(int n, std::mt19937_64& eng) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) {
        double re = gauss(eng);
        double im = gauss(eng);
        v(i) = std::complex<double>(re, im);
    }
    return v;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

std::vector<CheckResult> dcf_fixed_point(const ScenarioConfig& config) {
    const WifiMacConfig& mac = config.mac;
    double worst = 0.0;
    for (double m : {1.0, 2.0, 5.0, 10.0, 20.0}) {
        auto [tau, p] = solve_tau(m, mac);
        double r_back = std::abs(tau - backoff_attempt_probability(p, mac));
        double r_coll = std::abs(p - (1.0 - std::pow(1.0 - tau, m - 1.0)));
        worst = std::max({worst, r_back, r_coll});
    }
    // A lone station never collides, so its attempt probability has the
    // closed form 2/(W+1).
    auto [tau1, p1] = solve_tau(1.0, mac);
    worst = std::max(worst, std::abs(tau1 - 2.0 / (mac.min_window + 1)));
    worst = std::max(worst, std::abs(p1));
    return {gated("dcf_fixed_point_residual_max", worst, 1e-12)};
}

std::vector<CheckResult> dcf_simulation(const ScenarioConfig& config) {
    // Canonical MAC timing rather than the scenario override, so this gate
    // always tracks the same reference operating point; wifi_curve covers
    // the configured timing.
    WifiMacConfig mac;
    std::vector<CheckResult> rows;
    double worst_thr = 0.0;
    double worst_col = 0.0;
    for (int m : {2, 5, 10}) {
        DcfSolution sol = wifi_throughput(m, mac);
        SlotSimResult sim = slot_level_simulate(m, mac, config.n_slots,
                                                config.seed + static_cast<std::uint64_t>(m));
        double d_thr = rel_dev(sim.throughput_bps, sol.throughput_bps);
        double d_col = rel_dev(sim.collision_fraction, sol.p_collision);
        char name[64];
        std::snprintf(name, sizeof(name), "dcf_sim_throughput_rel_dev_m%d", m);
        rows.push_back(info(name, d_thr));
        std::snprintf(name, sizeof(name), "dcf_sim_collision_rel_dev_m%d", m);
        rows.push_back(info(name, d_col));
        worst_thr = std::max(worst_thr, d_thr);
        worst_col = std::max(worst_col, d_col);
    }
    rows.push_back(gated("dcf_sim_throughput_rel_dev_max", worst_thr, 0.05));
    rows.push_back(gated("dcf_sim_collision_rel_dev_max", worst_col, 0.05));
    return rows;
}

std::vector<CheckResult> wifi_curve(const ScenarioConfig& config) {
    std::vector<double> analytic;
    double worst_sim = 0.0;
    for (int m = 1; m <= 15; ++m) {
        DcfSolution sol = wifi_throughput(m, config.mac);
        SlotSimResult sim = slot_level_simulate(m, config.mac, config.n_slots,
                                                config.seed + 100 + static_cast<std::uint64_t>(m));
        analytic.push_back(sol.throughput_bps);
        worst_sim = std::max(worst_sim, rel_dev(sim.throughput_bps, sol.throughput_bps));
    }

    int peak_m = 1;
    for (std::size_t i = 1; i < analytic.size(); ++i) {
        if (analytic[i] > analytic[static_cast<std::size_t>(peak_m - 1)]) {
            peak_m = static_cast<int>(i) + 1;
        }
    }

    // Unimodal means the curve never turns back up once it has fallen.
    int violations = 0;
    bool falling = false;
    for (std::size_t i = 1; i < analytic.size(); ++i) {
        if (analytic[i] < analytic[i - 1] * (1.0 - 1e-12)) {
            falling = true;
        } else if (falling && analytic[i] > analytic[i - 1] * (1.0 + 1e-12)) {
            ++violations;
        }
    }

    return {
        gated("wifi_curve_peak_offset", std::abs(peak_m - 5), 1.0),
        gated("wifi_curve_unimodal_violations", violations, 0.0),
        gated("wifi_curve_sim_rel_dev_max", worst_sim, 0.05),
    };
}

std::vector<CheckResult> special_functions(const ScenarioConfig& config) {
    auto eng = make_engine(config.seed, "special_grid");
    std::uniform_real_distribution<double> ux(0.01, 10.0);
    std::uniform_real_distribution<double> uy(0.1, 10.0);
    std::uniform_int_distribution<int> uz(1, 7);

    double worst_e1 = 0.0;
    double worst_i2 = 0.0;
    double worst_psi = 0.0;
    for (int i = 0; i < 50; ++i) {
        double x = ux(eng);
        double y = uy(eng);
        int z = uz(eng);
        // Truncating each integral at 60/x units of decay leaves a tail far
        // below the oracle tolerance.
        {
            double closed = exp_integral_e1(x);
            auto f = [](double t) { return std::exp(-t) / t; };
            double oracle = integrate(f, x, x + 60.0, std::abs(closed) * 1e-10);
            worst_e1 = std::max(worst_e1, rel_dev(closed, oracle));
        }
        {
            double closed = i2(x, y, z);
            auto f = [&](double t) { return std::exp(-x * t) * std::pow(t + y, -z); };
            double oracle = integrate(f, 0.0, 60.0 / x, std::abs(closed) * 1e-10);
            worst_i2 = std::max(worst_i2, rel_dev(closed, oracle));
        }
        {
            double closed = psi(x, y, z);
            auto f = [&](double t) {
                return std::exp(-x * t) / ((t + 1.0) * std::pow(t + y, z));
            };
            double oracle = integrate(f, 0.0, 60.0 / x, std::abs(closed) * 1e-10);
            worst_psi = std::max(worst_psi, rel_dev(closed, oracle));
        }
    }
    return {
        gated("special_e1_rel_err_max", worst_e1, 1e-7),
        gated("special_i2_rel_err_max", worst_i2, 1e-7),
        gated("special_psi_rel_err_max", worst_psi, 1e-7),
    };
}

std::vector<CheckResult> rate_consistency(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    double worst = 0.0;
    for (int k : {1, 2, 4, 6}) {
        for (double sigma : {0.0, 0.01, 0.1, 0.45}) {
            SinrModel model{k, sigma, cell.tx_power, cell.noise_power};
            double closed = small_cell_throughput(model, cell.bandwidth_hz);
            double quad = small_cell_throughput_quadrature(model, cell.bandwidth_hz);
            worst = std::max(worst, rel_dev(closed, quad));
        }
    }
    return {gated("rate_closed_vs_quadrature_rel_max", worst, 1e-6)};
}

std::vector<CheckResult> sinr_distribution(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    int nt = cell.n_antennas;
    int k = std::min(4, nt - 2);
    int nulls = nt - 1 - k;

    SmallCellConfig perfect = cell;
    perfect.quant_error = 0.0;
    SampleBatch exact = simulate_sinr_samples(perfect, k, nulls, config.n_samples, config.seed);
    SinrModel law0{k, 0.0, cell.tx_power, cell.noise_power};
    double ks0 = ks_distance(exact, [&](double x) { return sinr_cdf(x, law0); });

    double b = cell.quant_error;
    SampleBatch noisy = simulate_sinr_samples(cell, k, nulls, config.n_samples, config.seed + 101);
    auto ks_at = [&](double sigma) {
        SinrModel law{k, sigma, cell.tx_power, cell.noise_power};
        return ks_distance(noisy, [&, law](double x) { return sinr_cdf(x, law); });
    };
    double ks_quant = ks_at(b);
    double ks_fitted = ks_at(kSigmaFitCoeff * b);
    double ks_cal = ks_at(kSigmaCalCoeff * std::pow(b, kSigmaCalExponent));

    return {
        gated("sinr_ks_perfect_csi", ks0, 0.02),
        info("sinr_ks_sigma_quant_error", ks_quant),
        info("sinr_ks_sigma_fitted", ks_fitted),
        info("sinr_ks_sigma_calibrated", ks_cal),
        gated("sinr_ks_best_documented_map", std::min(ks_quant, ks_fitted), 0.05),
    };
}

std::vector<CheckResult> interference_distribution(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    const int k = 4;  // four served streams at the interfered receiver

    SampleBatch zf = simulate_interference_samples(cell, k, cell.wifi_csi_corr,
                                                   config.n_samples, config.seed + 202);
    double mean = 0.0;
    for (double v : zf.values) mean += v;
    mean /= static_cast<double>(zf.values.size());

    double ks_erlang = ks_distance(zf, [&](double x) { return gamma_cdf(x, k, 1.0); });
    double ks_g2k = ks_distance(zf, [&](double x) { return gamma_cdf(x, 2.0 * k, k); });

    SampleBatch fixture = orthonormal_interference_samples(k, cell.n_antennas,
                                                           config.n_samples, config.seed + 203);
    double shape = config.dist_mode == DistMode::erlang ? k : 2.0 * k;
    double scale = config.dist_mode == DistMode::erlang ? 1.0 : k;
    double ks_fixture =
        ks_distance(fixture, [&](double x) { return gamma_cdf(x, shape, scale); });

    return {
        info("interference_zf_sum_mean", mean),
        info("interference_zf_ks_erlang", ks_erlang),
        info("interference_zf_ks_gamma_2k", ks_g2k),
        gated("interference_fixture_ks_default_mode", ks_fixture, 0.02),
    };
}

std::vector<CheckResult> precoder_orthogonality(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    int nt = cell.n_antennas;
    auto eng = make_engine(config.seed, "zf_grid");
    std::uniform_int_distribution<int> pick_n(2, nt - 2);

    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        int n_dof = pick_n(eng);
        int k = std::uniform_int_distribution<int>(1, n_dof)(eng);
        int d = nt - 1 - n_dof;
        ChannelSet set = generate_channels(cell, k, d, config.geometry, eng());

        std::vector<Eigen::VectorXcd> sue_est;
        sue_est.reserve(set.sue_channels.size());
        for (const auto& h : set.sue_channels) {
            sue_est.push_back(quantize_channel(h, cell.quant_error).direction_est);
        }
        PrecoderTargets targets{iota_vec(k), iota_vec(d)};
        Precoders pre = build_precoders(targets, sue_est, set.wifi_channels_est,
                                        set.ap_channel);

        for (int a = 0; a < k; ++a) {
            const Eigen::VectorXcd& v = pre.vectors[static_cast<std::size_t>(a)];
            for (int i = 0; i < k; ++i) {
                if (i == a) continue;
                worst = std::max(worst,
                                 std::abs(sue_est[static_cast<std::size_t>(i)].dot(v)));
            }
            for (int m = 0; m < d; ++m) {
                Eigen::VectorXcd dir =
                    set.wifi_channels_est[static_cast<std::size_t>(m)].normalized();
                worst = std::max(worst, std::abs(dir.dot(v)));
            }
            worst = std::max(worst, std::abs(set.ap_channel.normalized().dot(v)));
        }
    }
    return {gated("zf_nulled_inner_product_max", worst, 1e-8)};
}

std::vector<CheckResult> rate_sweep(const ScenarioConfig& config) {
    std::vector<Fig2Row> rows = run_fig2(config, "");

    double worst_mc = 0.0;
    int argmax_k = 0;
    double argmax_val = -1.0;
    int b8_violations = 0;
    double b8_prev = -1.0;
    bool b8_seen = false;
    for (const Fig2Row& row : rows) {
        worst_mc = std::max(worst_mc, rel_dev(row.r_s_mc, row.r_s_closed));
        if (row.feedback_bits == 4) {
            if (row.r_s_closed > argmax_val) {
                argmax_val = row.r_s_closed;
                argmax_k = row.k_sues;
            }
        } else if (row.feedback_bits == 8) {
            if (b8_seen && row.r_s_closed < b8_prev * (1.0 - 1e-12)) ++b8_violations;
            b8_prev = row.r_s_closed;
            b8_seen = true;
        }
    }

    return {
        gated("rate_sweep_mc_rel_dev_max", worst_mc, 0.03),
        gated("rate_sweep_b4_argmax_offset", std::abs(argmax_k - 2), 0.0),
        gated("rate_sweep_b8_monotone_violations", b8_violations, 0.0),
    };
}

std::vector<CheckResult> allocation_sweep(const ScenarioConfig& config) {
    std::vector<Fig4Row> sweep = run_fig4(config, "");
    int rs_violations = 0;
    int rw_violations = 0;
    int above_violations = 0;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (sweep[i].r_small <= sweep[i].r_wifi) ++above_violations;
        if (i == 0) continue;
        if (sweep[i].r_small < sweep[i - 1].r_small * (1.0 - 1e-12)) ++rs_violations;
        if (sweep[i].r_wifi > sweep[i - 1].r_wifi * (1.0 + 1e-12)) ++rw_violations;
    }

    ScenarioInputs inputs = scenario_inputs(config);
    std::vector<DofAllocation> allocs;
    for (const Weights& w : table3_weights()) {
        allocs.push_back(allocate_dof(inputs, w, config.reqs));
    }

    int dof_violations = 0;
    for (std::size_t i = 1; i < allocs.size(); ++i) {
        if (allocs[i].sue_dof > allocs[i - 1].sue_dof) ++dof_violations;
    }
    double endpoint_offset = std::abs(allocs.front().sue_dof - 6) +
                             std::abs(allocs.front().wifi_dof - 1) +
                             std::abs(allocs.back().sue_dof - 2) +
                             std::abs(allocs.back().wifi_dof - 5);

    int max_evals = 0;
    double best_margin = 0.0;
    for (const DofAllocation& alloc : allocs) {
        max_evals = std::max(max_evals, alloc.iterations);
        for (const VisitedPoint& v : alloc.visited) {
            best_margin = std::max(best_margin, v.objective - alloc.objective);
        }
    }
    double eval_budget =
        std::ceil(std::log2(static_cast<double>(config.small_cell.n_antennas))) + 1.0;

    return {
        gated("dof_sweep_rs_monotone_violations", rs_violations, 0.0),
        gated("dof_sweep_rw_monotone_violations", rw_violations, 0.0),
        gated("dof_sweep_rs_above_rw_violations", above_violations, 0.0),
        gated("weight_sweep_sue_dof_monotone_violations", dof_violations, 0.0),
        gated("weight_sweep_endpoint_offset", endpoint_offset, 0.0),
        gated("optimizer_eval_count_max", max_evals, eval_budget),
        gated("optimizer_returned_best_margin", best_margin, 0.0),
    };
}

std::vector<CheckResult> station_selection(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    auto eng = make_engine(config.seed, "selection_grid");
    std::uniform_int_distribution<int> pick_m(3, 8);
    std::uniform_real_distribution<double> pick_dist(20.0, 150.0);
    int k_hi = std::max(2, std::min(6, cell.n_antennas - 2));

    double worst_gap = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        int m = pick_m(eng);
        int k = std::uniform_int_distribution<int>(2, k_hi)(eng);
        int d = std::uniform_int_distribution<int>(1, m)(eng);
        std::vector<double> losses(static_cast<std::size_t>(m));
        for (double& loss : losses) loss = config.geometry.path_loss(pick_dist(eng));

        std::vector<double> gains(losses.size());
        for (std::size_t i = 0; i < losses.size(); ++i) {
            auto nulled = interference_model(true, k, losses[i], cell.wifi_csi_corr,
                                             cell.tx_power, config.dist_mode);
            auto open = interference_model(false, k, losses[i], cell.wifi_csi_corr,
                                           cell.tx_power, config.dist_mode);
            gains[i] = access_probability(nulled, config.threshold_w) -
                       access_probability(open, config.threshold_w);
        }
        auto active_of = [&](const std::vector<int>& sel) {
            return expected_active_users(sel, losses, k, cell.wifi_csi_corr, cell.tx_power,
                                         config.dist_mode, config.threshold_w)
                .expected_active;
        };
        double greedy = active_of(select_wifi_users(d, gains));

        double best = -1.0;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(mask) != d) continue;
            std::vector<int> sel;
            for (int i = 0; i < m; ++i) {
                if (mask & (1u << i)) sel.push_back(i);
            }
            best = std::max(best, active_of(sel));
        }
        worst_gap = std::max(worst_gap, best - greedy);
    }
    return {gated("greedy_selection_gap_max", worst_gap, 1e-12)};
}

std::vector<CheckResult> model_identities(const ScenarioConfig& config) {
    const SmallCellConfig& cell = config.small_cell;
    int nt = cell.n_antennas;
    std::vector<CheckResult> rows;

    {
        auto eng = make_engine(config.seed, "quantize_grid");
        double worst = 0.0;
        for (int rep = 0; rep < 40; ++rep) {
            Eigen::VectorXcd h = draw_cn(nt, eng);
            Eigen::VectorXcd unit = h.normalized();
            for (double b : {0.0, 0.25, 0.5, 0.9, 1.0}) {
                QuantizedChannel q = quantize_channel(h, b);
                Eigen::VectorXcd rec =
                    std::sqrt(1.0 - b) * q.direction_est + std::sqrt(b) * q.error_dir;
                worst = std::max({worst, (rec - unit).norm(),
                                  std::abs(q.direction_est.dot(q.error_dir)),
                                  std::abs(q.direction_est.norm() - 1.0),
                                  std::abs(q.error_dir.norm() - 1.0),
                                  std::abs(q.norm - h.norm()) / h.norm(),
                                  std::abs(q.quant_error - b)});
            }
        }
        rows.push_back(gated("quantize_identity_err_max", worst, 1e-10));
    }

    int k = std::min(4, nt - 2);
    int d = nt - 1 - k;
    {
        auto eng = make_engine(config.seed, "sinr_form_grid");
        double worst = 0.0;
        for (int rep = 0; rep < 100; ++rep) {
            ChannelSet set = generate_channels(cell, k, d, config.geometry, eng());
            std::vector<QuantizedChannel> quantized;
            std::vector<Eigen::VectorXcd> sue_est;
            for (const auto& h : set.sue_channels) {
                quantized.push_back(quantize_channel(h, cell.quant_error));
                sue_est.push_back(quantized.back().direction_est);
            }
            PrecoderTargets targets{iota_vec(k), iota_vec(d)};
            Precoders pre =
                build_precoders(targets, sue_est, set.wifi_channels_est, set.ap_channel);
            std::vector<double> via_error = sue_sinr(set, quantized, pre, cell);
            std::vector<double> via_true = sue_sinr_direct(set, pre, cell);
            for (std::size_t i = 0; i < via_error.size(); ++i) {
                worst = std::max(worst, rel_dev(via_error[i], via_true[i]));
            }
        }
        rows.push_back(gated("sinr_form_agreement_rel_max", worst, 1e-6));
    }

    {
        // With exact feedback and exact Wi-Fi estimates every nulled term
        // must vanish to numerical precision.
        SmallCellConfig exact = cell;
        exact.quant_error = 0.0;
        exact.wifi_csi_corr = 1.0;
        auto eng = make_engine(config.seed, "residual_grid");
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            ChannelSet set = generate_channels(exact, k, d, config.geometry, eng());
            std::vector<Eigen::VectorXcd> sue_est;
            for (const auto& h : set.sue_channels) {
                sue_est.push_back(quantize_channel(h, 0.0).direction_est);
            }
            PrecoderTargets targets{iota_vec(k), iota_vec(d)};
            Precoders pre =
                build_precoders(targets, sue_est, set.wifi_channels_est, set.ap_channel);
            for (int a = 0; a < k; ++a) {
                const Eigen::VectorXcd& v = pre.vectors[static_cast<std::size_t>(a)];
                for (int i = 0; i < k; ++i) {
                    if (i == a) continue;
                    double p = std::norm(set.sue_channels[static_cast<std::size_t>(i)].dot(v));
                    worst = std::max(worst, p / k);
                }
                for (int m = 0; m < d; ++m) {
                    double p = std::norm(set.wifi_channels[static_cast<std::size_t>(m)].dot(v));
                    worst = std::max(worst, p / k);
                }
            }
        }
        rows.push_back(gated("residual_interference_share_max", worst, 1e-12));
    }

    {
        auto eng = make_engine(config.seed, "rvq_grid");
        const int bits = 8;
        const int trials = 2000;
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) {
            Eigen::VectorXcd h = draw_cn(nt, eng);
            mean += rvq_quantize(h, bits, eng()).quant_error;
        }
        mean /= trials;
        double bound = SmallCellConfig::derived_quant_error(bits, nt);
        rows.push_back(gated("rvq_error_bound_mean_ratio", mean / bound, 1.0));
    }

    {
        int violations = 0;
        double prev = 0.0;
        bool seen = false;
        for (int bits : {2, 4, 8}) {
            auto eng = make_engine(config.seed + static_cast<std::uint64_t>(bits), "rvq_mono");
            const int trials = 400;
            double mean = 0.0;
            for (int t = 0; t < trials; ++t) {
                Eigen::VectorXcd h = draw_cn(nt, eng);
                mean += rvq_quantize(h, bits, eng()).quant_error;
            }
            mean /= trials;
            if (seen && mean >= prev) ++violations;
            prev = mean;
            seen = true;
        }
        rows.push_back(gated("rvq_error_monotone_violations", violations, 0.0));
    }

    {
        auto eng = make_engine(config.seed, "moment_grid");
        std::complex<double> sum(0.0, 0.0);
        double sum_sq = 0.0;
        std::int64_t n = 0;
        const std::int64_t target = 100000;
        while (n < target) {
            ChannelSet set = generate_channels(cell, k, d, config.geometry, eng());
            auto absorb = [&](const Eigen::VectorXcd& v) {
                for (int i = 0; i < v.size(); ++i) {
                    sum += v(i);
                    sum_sq += std::norm(v(i));
                    ++n;
                }
            };
            for (const auto& h : set.sue_channels) absorb(h);
            for (const auto& f : set.wifi_channels_est) absorb(f);
            absorb(set.ap_channel);
        }
        std::complex<double> mean = sum / static_cast<double>(n);
        double var = sum_sq / static_cast<double>(n) - std::norm(mean);
        double worst = std::max(std::abs(mean), std::abs(var - 1.0));
        rows.push_back(gated("channel_moment_err_max", worst, 0.02));
    }

    return rows;
}

}  // namespace checks

std::vector<CheckResult> validation_checks(const ScenarioConfig& config) {
    if (!config.valid()) throw std::invalid_argument("validation: invalid config");

    struct Entry {
        const char* name;
        std::vector<CheckResult> (*fn)(const ScenarioConfig&);
    };
    const Entry groups[] = {
        {"dcf_fixed_point", &checks::dcf_fixed_point},
        {"dcf_simulation", &checks::dcf_simulation},
        {"wifi_curve", &checks::wifi_curve},
        {"special_functions", &checks::special_functions},
        {"rate_consistency", &checks::rate_consistency},
        {"sinr_distribution", &checks::sinr_distribution},
        {"interference_distribution", &checks::interference_distribution},
        {"precoder_orthogonality", &checks::precoder_orthogonality},
        {"rate_sweep", &checks::rate_sweep},
        {"allocation_sweep", &checks::allocation_sweep},
        {"station_selection", &checks::station_selection},
        {"model_identities", &checks::model_identities},
    };

    std::vector<CheckResult> out;
    for (const Entry& group : groups) {
        try {
            std::vector<CheckResult> rows = group.fn(config);
            out.insert(out.end(), rows.begin(), rows.end());
        } catch (const std::exception& e) {
            std::fprintf(stderr, "check group %s failed: %s\n", group.name, e.what());
            CheckResult r;
            r.name = std::string(group.name) + "_error";
            r.statistic = 1e300;
            r.threshold = 0.0;
            r.pass = false;
            out.push_back(r);
        }
    }
    return out;
}

std::string validation_report_json(const std::vector<CheckResult>& checks) {
    nlohmann::json report = nlohmann::json::object();
    for (const CheckResult& row : checks) {
        nlohmann::json entry;
        entry["statistic"] = row.statistic;
        if (row.threshold) {
            entry["threshold"] = *row.threshold;
        } else {
            entry["threshold"] = nullptr;
        }
        entry["pass"] = row.pass;
        report[row.name] = entry;
    }
    return report.dump(2) + "\n";
}

int run_validate(const ScenarioConfig& config, const std::string& out_path, bool verbose) {
    std::vector<CheckResult> rows = validation_checks(config);
    if (verbose) {
        for (const CheckResult& row : rows) {
            if (row.threshold) {
                std::fprintf(stderr, "%-44s %14.8g  gate %-12.6g %s\n", row.name.c_str(),
                             row.statistic, *row.threshold, row.pass ? "pass" : "FAIL");
            } else {
                std::fprintf(stderr, "%-44s %14.8g  informational\n", row.name.c_str(),
                             row.statistic);
            }
        }
    }

    std::string report = validation_report_json(rows);
    if (out_path.empty() || out_path == "-") {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
        out << report;
        if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
    }

    bool ok = std::all_of(rows.begin(), rows.end(),
                          [](const CheckResult& r) { return r.pass; });
    return ok ? 0 : 1;
}

}  // namespace lteu
