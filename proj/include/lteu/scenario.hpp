#pragma once

#include "lteu/channel_model.hpp"
#include "lteu/dof_optimizer.hpp"
#include "lteu/wifi_dcf.hpp"

#include <cstdint>
#include <string>

namespace lteu {

// MAC timing used by the coexistence scenario: the control response runs at
// the legacy 6 Mb/s base rate (44 us) and a collision is charged an ACK
// timeout (61 us) on top of the frame dwell.
WifiMacConfig scenario_mac_defaults();

// Wi-Fi stations clustered in a 15 m disk around an AP 90 m from the cell.
GeometryConfig scenario_geometry_defaults();

struct ScenarioConfig {
    SmallCellConfig small_cell;
    WifiMacConfig mac = scenario_mac_defaults();
    GeometryConfig geometry = scenario_geometry_defaults();
    RateRequirements reqs;
    Weights weights;
    double threshold_w = 1e-9;  // interference level that blocks Wi-Fi access
    int m_wifi = 5;
    DistMode dist_mode = DistMode::erlang;
    std::uint64_t seed = 12345;
    std::int64_t n_samples = 100000;
    std::int64_t n_slots = 1000000;

    bool valid() const;
};

// Parses the flat key=value config dialect ('#' comments, dotted keys).
// Unknown or duplicate keys and invalid values are rejected with the
// offending key named in the error.
ScenarioConfig parse_config(const std::string& text);

// parse_config over a file's contents.
ScenarioConfig load_config(const std::string& path);

// Canonical serialization: fixed key order, round-trip-exact numbers.
// parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const ScenarioConfig& config);

// Commented starter config printed by `config init`.
std::string default_config_text();

// Hash of the canonical serialization, stamped into every output file.
std::uint64_t config_hash(const ScenarioConfig& config);

}  // namespace lteu
