#include "lteu/scenario.hpp"

#include "lteu/rng.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lteu {
namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
        out = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad number for " + key + ": '" + v + "'");
    }
    if (pos != v.size()) {
        throw std::invalid_argument("config: trailing junk for " + key + ": '" + v + "'");
    }
    return out;
}

long long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long out;
    try {
        out = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
    }
    if (pos != v.size()) {
        throw std::invalid_argument("config: trailing junk for " + key + ": '" + v + "'");
    }
    return out;
}

std::string sigma_mode_name(SigmaMode m) {
    switch (m) {
        case SigmaMode::quant_error: return "quant_error";
        case SigmaMode::fitted: return "fitted";
        case SigmaMode::calibrated: return "calibrated";
    }
    throw std::logic_error("sigma_mode_name: unknown mode");
}

SigmaMode sigma_mode_from(const std::string& key, const std::string& v) {
    if (v == "quant_error") return SigmaMode::quant_error;
    if (v == "fitted") return SigmaMode::fitted;
    if (v == "calibrated") return SigmaMode::calibrated;
    throw std::invalid_argument("config: bad value for " + key + ": '" + v + "'");
}

std::string placement_name(GeometryConfig::Placement p) {
    return p == GeometryConfig::Placement::cell_disk ? "cell_disk" : "ap_cluster";
}

GeometryConfig::Placement placement_from(const std::string& key, const std::string& v) {
    if (v == "cell_disk") return GeometryConfig::Placement::cell_disk;
    if (v == "ap_cluster") return GeometryConfig::Placement::ap_cluster;
    throw std::invalid_argument("config: bad value for " + key + ": '" + v + "'");
}

std::string dist_mode_name(DistMode m) {
    return m == DistMode::erlang ? "erlang" : "gamma_2k";
}

DistMode dist_mode_from(const std::string& key, const std::string& v) {
    if (v == "erlang") return DistMode::erlang;
    if (v == "gamma_2k") return DistMode::gamma_2k;
    throw std::invalid_argument("config: bad value for " + key + ": '" + v + "'");
}

void apply_key(ScenarioConfig& c, const std::string& key, const std::string& v) {
    auto d = [&] { return parse_double(key, v); };
    auto i = [&] { return parse_int(key, v); };
    if (key == "small_cell.n_antennas") c.small_cell.n_antennas = static_cast<int>(i());
    else if (key == "small_cell.tx_power_w") c.small_cell.tx_power = d();
    else if (key == "small_cell.bandwidth_hz") c.small_cell.bandwidth_hz = d();
    else if (key == "small_cell.noise_power_w") c.small_cell.noise_power = d();
    else if (key == "small_cell.feedback_bits") c.small_cell.feedback_bits = static_cast<int>(i());
    else if (key == "small_cell.quant_error") c.small_cell.quant_error = d();
    else if (key == "small_cell.wifi_csi_corr") c.small_cell.wifi_csi_corr = d();
    else if (key == "small_cell.sigma_mode") c.small_cell.sigma_mode = sigma_mode_from(key, v);
    else if (key == "mac.min_window") c.mac.min_window = static_cast<int>(i());
    else if (key == "mac.max_stage") c.mac.max_stage = static_cast<int>(i());
    else if (key == "mac.slot_time_s") c.mac.slot_time = d();
    else if (key == "mac.sifs_s") c.mac.sifs = d();
    else if (key == "mac.difs_s") c.mac.difs = d();
    else if (key == "mac.payload_bits") c.mac.payload_bits = d();
    else if (key == "mac.mac_header_bits") c.mac.mac_header_bits = d();
    else if (key == "mac.phy_header_bits") c.mac.phy_header_bits = d();
    else if (key == "mac.bit_rate_bps") c.mac.bit_rate = d();
    else if (key == "mac.ack_time_s") c.mac.ack_time = d();
    else if (key == "mac.collision_extra_time_s") c.mac.collision_extra_time = d();
    else if (key == "geometry.cell_radius_m") c.geometry.cell_radius_m = d();
    else if (key == "geometry.path_loss_exp") c.geometry.path_loss_exp = d();
    else if (key == "geometry.ref_dist_m") c.geometry.ref_dist_m = d();
    else if (key == "geometry.placement") c.geometry.placement = placement_from(key, v);
    else if (key == "geometry.ap_distance_m") c.geometry.ap_distance_m = d();
    else if (key == "geometry.ap_spread_m") c.geometry.ap_spread_m = d();
    else if (key == "reqs.min_sue_rate_bps") c.reqs.min_sue_rate = d();
    else if (key == "reqs.min_wifi_rate_bps") c.reqs.min_wifi_rate = d();
    else if (key == "weights.e_s") c.weights.e_s = d();
    else if (key == "weights.e_w") c.weights.e_w = d();
    else if (key == "run.threshold_w") c.threshold_w = d();
    else if (key == "run.m_wifi") c.m_wifi = static_cast<int>(i());
    else if (key == "run.dist_mode") c.dist_mode = dist_mode_from(key, v);
    else if (key == "run.seed") c.seed = static_cast<std::uint64_t>(i());
    else if (key == "run.n_samples") c.n_samples = i();
    else if (key == "run.n_slots") c.n_slots = i();
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("config: invalid value: ") + what);
}

}  // namespace

WifiMacConfig scenario_mac_defaults() {
    WifiMacConfig mac;
    mac.ack_time = 44e-6;
    mac.collision_extra_time = 61e-6;
    return mac;
}

GeometryConfig scenario_geometry_defaults() {
    GeometryConfig g;
    g.placement = GeometryConfig::Placement::ap_cluster;
    return g;
}

bool ScenarioConfig::valid() const {
    return small_cell.valid() && mac.valid() && geometry.valid() && reqs.valid() &&
           weights.valid() && threshold_w >= 0.0 && m_wifi >= 1 && n_samples >= 1 &&
           n_slots >= 1;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig c;
    std::map<std::string, bool> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " has no '='");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                        " has an empty key or value");
        }
        if (seen.count(key)) {
            throw std::invalid_argument("config: duplicate key '" + key + "'");
        }
        seen[key] = true;
        apply_key(c, key, value);
    }

    // Derived defaults follow their inputs unless pinned explicitly.
    if (!seen.count("small_cell.noise_power_w") && seen.count("small_cell.bandwidth_hz")) {
        c.small_cell.noise_power = thermal_noise_power(c.small_cell.bandwidth_hz);
    }
    if (!seen.count("small_cell.quant_error") &&
        (seen.count("small_cell.feedback_bits") || seen.count("small_cell.n_antennas"))) {
        c.small_cell.quant_error = SmallCellConfig::derived_quant_error(
            c.small_cell.feedback_bits, c.small_cell.n_antennas);
    }

    require(c.small_cell.valid(), "small_cell block");
    require(c.mac.valid(), "mac block");
    require(c.geometry.valid(), "geometry block");
    require(c.reqs.valid(), "reqs block");
    require(c.weights.valid(), "weights block (e_s + e_w must be 1)");
    require(c.threshold_w >= 0.0, "run.threshold_w");
    require(c.m_wifi >= 1, "run.m_wifi");
    require(c.n_samples >= 1, "run.n_samples");
    require(c.n_slots >= 1, "run.n_slots");
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "small_cell.n_antennas = " << c.small_cell.n_antennas << "\n";
    out << "small_cell.tx_power_w = " << fmt_double(c.small_cell.tx_power) << "\n";
    out << "small_cell.bandwidth_hz = " << fmt_double(c.small_cell.bandwidth_hz) << "\n";
    out << "small_cell.noise_power_w = " << fmt_double(c.small_cell.noise_power) << "\n";
    out << "small_cell.feedback_bits = " << c.small_cell.feedback_bits << "\n";
    out << "small_cell.quant_error = " << fmt_double(c.small_cell.quant_error) << "\n";
    out << "small_cell.wifi_csi_corr = " << fmt_double(c.small_cell.wifi_csi_corr) << "\n";
    out << "small_cell.sigma_mode = " << sigma_mode_name(c.small_cell.sigma_mode) << "\n";
    out << "mac.min_window = " << c.mac.min_window << "\n";
    out << "mac.max_stage = " << c.mac.max_stage << "\n";
    out << "mac.slot_time_s = " << fmt_double(c.mac.slot_time) << "\n";
    out << "mac.sifs_s = " << fmt_double(c.mac.sifs) << "\n";
    out << "mac.difs_s = " << fmt_double(c.mac.difs) << "\n";
    out << "mac.payload_bits = " << fmt_double(c.mac.payload_bits) << "\n";
    out << "mac.mac_header_bits = " << fmt_double(c.mac.mac_header_bits) << "\n";
    out << "mac.phy_header_bits = " << fmt_double(c.mac.phy_header_bits) << "\n";
    out << "mac.bit_rate_bps = " << fmt_double(c.mac.bit_rate) << "\n";
    out << "mac.ack_time_s = " << fmt_double(c.mac.ack_time) << "\n";
    out << "mac.collision_extra_time_s = " << fmt_double(c.mac.collision_extra_time) << "\n";
    out << "geometry.cell_radius_m = " << fmt_double(c.geometry.cell_radius_m) << "\n";
    out << "geometry.path_loss_exp = " << fmt_double(c.geometry.path_loss_exp) << "\n";
    out << "geometry.ref_dist_m = " << fmt_double(c.geometry.ref_dist_m) << "\n";
    out << "geometry.placement = " << placement_name(c.geometry.placement) << "\n";
    out << "geometry.ap_distance_m = " << fmt_double(c.geometry.ap_distance_m) << "\n";
    out << "geometry.ap_spread_m = " << fmt_double(c.geometry.ap_spread_m) << "\n";
    out << "reqs.min_sue_rate_bps = " << fmt_double(c.reqs.min_sue_rate) << "\n";
    out << "reqs.min_wifi_rate_bps = " << fmt_double(c.reqs.min_wifi_rate) << "\n";
    out << "weights.e_s = " << fmt_double(c.weights.e_s) << "\n";
    out << "weights.e_w = " << fmt_double(c.weights.e_w) << "\n";
    out << "run.threshold_w = " << fmt_double(c.threshold_w) << "\n";
    out << "run.m_wifi = " << c.m_wifi << "\n";
    out << "run.dist_mode = " << dist_mode_name(c.dist_mode) << "\n";
    out << "run.seed = " << c.seed << "\n";
    out << "run.n_samples = " << c.n_samples << "\n";
    out << "run.n_slots = " << c.n_slots << "\n";
    return out.str();
}

std::string default_config_text() {
    ScenarioConfig c;
    std::ostringstream out;
    out << "# Coexistence scenario configuration.\n"
        << "# Flat key = value lines; '#' starts a comment; all keys optional\n"
        << "# (defaults shown). Units are spelled out in each key name.\n"
        << "#\n"
        << "# small_cell.sigma_mode selects the residual-interference map used\n"
        << "# by the throughput model: quant_error (sigma = b), fitted\n"
        << "# (sigma = 1.02 b), or calibrated (sigma = 2.18 b^4).\n"
        << "# run.dist_mode selects the interference law at Wi-Fi receivers:\n"
        << "# erlang (Gamma(K,1), the default) or gamma_2k (Gamma(2K,K)).\n"
        << "\n"
        << serialize_config(c);
    return out.str();
}

std::uint64_t config_hash(const ScenarioConfig& config) {
    return fnv1a(serialize_config(config));
}

}  // namespace lteu
