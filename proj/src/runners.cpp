#include "lteu/runners.hpp"

#include "lteu/lte_analytics.hpp"
#include "lteu/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lteu {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& out_path, const ScenarioConfig& config,
               const std::string& header, const std::vector<std::string>& lines) {
    if (out_path.empty()) return;
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    out << "# config_hash=" << hash << "\n";
    out << "# seed=" << config.seed << "\n";
    out << header << "\n";
    for (const auto& line : lines) out << line << "\n";
    if (!out) throw std::runtime_error("failed writing '" + out_path + "'");
}

// Draws from the SINR law F(x) = 1 - e^(-ax)/(1+sigma*x)^(K-1) by composing
// an exponential numerator with an Erlang-weighted denominator shift.
double mean_rate_mc(const SinrModel& model, double bandwidth_hz, std::int64_t n,
                    std::mt19937_64& eng) {
    double a = model.k_sues * model.noise_power / model.tx_power;
    std::exponential_distribution<double> num(1.0);
    std::gamma_distribution<double> den(std::max(1.0, static_cast<double>(model.k_sues - 1)),
                                        1.0);
    double acc = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        double g = model.k_sues > 1 && model.sigma > 0.0 ? den(eng) : 0.0;
        double sinr = num(eng) / (a + model.sigma * g);
        acc += std::log2(1.0 + sinr);
    }
    return model.k_sues * bandwidth_hz * acc / static_cast<double>(n);
}

}  // namespace

ScenarioInputs scenario_inputs(const ScenarioConfig& config) {
    ChannelSet set = generate_channels(config.small_cell, 1, config.m_wifi, config.geometry,
                                       config.seed);
    ScenarioInputs inputs;
    inputs.small_cell = config.small_cell;
    inputs.mac = config.mac;
    inputs.wifi_path_loss = std::move(set.path_loss);
    inputs.threshold_w = config.threshold_w;
    inputs.dist_mode = config.dist_mode;
    return inputs;
}

std::vector<Weights> table3_weights() {
    std::vector<Weights> out;
    for (int i = 0; i < 9; ++i) {
        double e_s = (10 + 5 * i) / 100.0;
        out.push_back({e_s, 1.0 - e_s});
    }
    return out;
}

std::vector<Fig2Row> run_fig2(const ScenarioConfig& config, const std::string& out_path) {
    if (!config.valid()) throw std::invalid_argument("run_fig2: invalid config");
    int k_max = std::min(7, config.small_cell.n_antennas - 1);
    std::vector<Fig2Row> rows;
    for (int bits : {4, 8}) {
        SmallCellConfig cell = config.small_cell;
        cell.feedback_bits = bits;
        cell.quant_error = SmallCellConfig::derived_quant_error(bits, cell.n_antennas);
        for (int k = 2; k <= k_max; ++k) {
            SinrModel model{k, cell.sigma(), cell.tx_power, cell.noise_power};
            Fig2Row row;
            row.k_sues = k;
            row.feedback_bits = bits;
            row.r_s_closed = small_cell_throughput(model, cell.bandwidth_hz);
            auto eng = make_engine(config.seed + static_cast<std::uint64_t>(bits * 64 + k),
                                   "fig2_mc");
            row.r_s_mc = mean_rate_mc(model, cell.bandwidth_hz, config.n_samples, eng);
            rows.push_back(row);
        }
    }

    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.k_sues << ',' << r.feedback_bits << ',' << fmt(r.r_s_closed) << ','
             << fmt(r.r_s_mc) << ',' << fmt(r.r_s_closed / 1e6);
        lines.push_back(line.str());
    }
    write_csv(out_path, config, "k_sues,feedback_bits,r_s_bps,r_s_mc_bps,r_s_mbps", lines);

    int argmax_b4 = 0;
    double best_b4 = -1.0;
    bool b8_nondecreasing = true;
    double prev_b8 = -1.0;
    for (const auto& r : rows) {
        if (r.feedback_bits == 4 && r.r_s_closed > best_b4) {
            best_b4 = r.r_s_closed;
            argmax_b4 = r.k_sues;
        }
        if (r.feedback_bits == 8) {
            if (prev_b8 >= 0.0 && r.r_s_closed < prev_b8) b8_nondecreasing = false;
            prev_b8 = r.r_s_closed;
        }
    }
    if (argmax_b4 != 2) {
        throw std::runtime_error("run_fig2: 4-bit sweep does not peak at two users");
    }
    if (!b8_nondecreasing) {
        throw std::runtime_error("run_fig2: 8-bit sweep is not nondecreasing");
    }
    return rows;
}

std::vector<Fig3Row> run_fig3(const ScenarioConfig& config, const std::string& out_path) {
    if (!config.valid()) throw std::invalid_argument("run_fig3: invalid config");
    std::vector<Fig3Row> rows;
    for (int m = 1; m <= 15; ++m) {
        Fig3Row row;
        row.m_users = m;
        row.r_w_analytic = wifi_throughput(m, config.mac).throughput_bps;
        row.r_w_sim = slot_level_simulate(m, config.mac, config.n_slots,
                                          config.seed + static_cast<std::uint64_t>(m))
                          .throughput_bps;
        rows.push_back(row);
    }

    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.m_users << ',' << fmt(r.r_w_analytic) << ',' << fmt(r.r_w_sim) << ','
             << fmt(r.r_w_analytic / 1e6);
        lines.push_back(line.str());
    }
    write_csv(out_path, config, "m_users,r_w_bps,r_w_sim_bps,r_w_mbps", lines);

    int peak = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].r_w_analytic > rows[static_cast<std::size_t>(peak)].r_w_analytic) {
            peak = static_cast<int>(i);
        }
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
        bool rising = static_cast<int>(i) <= peak;
        double prev = rows[i - 1].r_w_analytic;
        double cur = rows[i].r_w_analytic;
        if ((rising && cur < prev) || (!rising && cur > prev)) {
            throw std::runtime_error("run_fig3: analytic throughput is not unimodal");
        }
    }
    return rows;
}

std::vector<Fig4Row> run_fig4(const ScenarioConfig& config, const std::string& out_path) {
    if (!config.valid()) throw std::invalid_argument("run_fig4: invalid config");
    int nt = config.small_cell.n_antennas;
    ScenarioInputs inputs = scenario_inputs(config);

    std::vector<Fig4Row> rows;
    int n_lo = std::max(2, nt - 1 - config.m_wifi);
    for (int n = n_lo; n <= nt - 2; ++n) {
        int d = nt - 1 - n;
        DofAllocation alloc = evaluate_allocation(d, inputs, config.weights, config.reqs);
        rows.push_back({n, alloc.r_small, alloc.r_wifi});
    }

    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.sue_dof << ',' << fmt(r.r_small) << ',' << fmt(r.r_wifi) << ','
             << fmt(r.r_small / 1e6) << ',' << fmt(r.r_wifi / 1e6);
        lines.push_back(line.str());
    }
    write_csv(out_path, config, "sue_dof,r_s_bps,r_w_bps,r_s_mbps,r_w_mbps", lines);

    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].r_small < rows[i - 1].r_small) {
            throw std::runtime_error("run_fig4: small-cell column decreases with DoF");
        }
        if (rows[i].r_wifi > rows[i - 1].r_wifi) {
            throw std::runtime_error("run_fig4: Wi-Fi column increases with DoF");
        }
    }
    return rows;
}

std::vector<Table3Row> run_table3(const ScenarioConfig& config, const std::string& out_path) {
    if (!config.valid()) throw std::invalid_argument("run_table3: invalid config");
    ScenarioInputs inputs = scenario_inputs(config);

    std::vector<Table3Row> rows;
    for (const Weights& w : table3_weights()) {
        DofAllocation alloc = allocate_dof(inputs, w, config.reqs);
        rows.push_back({w.e_s, w.e_w, alloc.r_small, alloc.r_wifi, alloc.sue_dof,
                        alloc.wifi_dof});
    }

    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows) {
        std::ostringstream line;
        line << fmt(r.e_s) << ',' << fmt(r.e_w) << ',' << fmt(r.r_small) << ','
             << fmt(r.r_wifi) << ',' << r.sue_dof << ',' << r.wifi_dof << ','
             << fmt(r.r_small / 1e6) << ',' << fmt(r.r_wifi / 1e6);
        lines.push_back(line.str());
    }
    write_csv(out_path, config,
              "e_s,e_w,r_s_bps,r_w_bps,sue_dof,wifi_dof,r_s_mbps,r_w_mbps", lines);
    return rows;
}

}  // namespace lteu
