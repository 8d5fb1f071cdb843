#pragma once

#include <cstdint>
#include <utility>

namespace lteu {

struct WifiMacConfig {
    int min_window = 16;     // W, slots
    int max_stage = 6;       // L
    double slot_time = 20e-6;
    double sifs = 16e-6;
    double difs = 34e-6;
    double payload_bits = 12000.0;
    double mac_header_bits = 192.0;
    double phy_header_bits = 224.0;
    double bit_rate = 300e6;
    // Control-response duration; default is a 112-bit ACK frame behind one
    // more PHY header at the data rate.
    double ack_time = (224.0 + 112.0) / 300e6;
    // Extra dwell charged to a collision beyond header+payload+DIFS
    // (ACK-timeout style accounting); zero keeps the plain basic-access form.
    double collision_extra_time = 0.0;

    bool valid() const {
        return min_window >= 2 && max_stage >= 1 && slot_time > 0.0 &&
               sifs > 0.0 && difs > 0.0 && payload_bits > 0.0 &&
               mac_header_bits >= 0.0 && phy_header_bits >= 0.0 &&
               bit_rate > 0.0 && ack_time >= 0.0 && collision_extra_time >= 0.0;
    }
};

struct DcfSolution {
    double tau = 0.0;
    double p_collision = 0.0;
    double p_busy = 0.0;
    double p_success = 0.0;
    double throughput_bps = 0.0;
};

// Transmission-probability fixed point; returns (tau, p_collision).
// m_users may be real-valued (expected contender counts), m_users >= 1.
std::pair<double, double> solve_tau(double m_users, const WifiMacConfig& mac);

// Attempt probability implied by a given collision probability through the
// stage-averaged backoff window recursion; one half of the fixed point.
double backoff_attempt_probability(double p_collision, const WifiMacConfig& mac);

// P_S: probability a busy slot carries exactly one transmission.
double success_probability(double tau, double m_users);

// P_tr: probability at least one station transmits in a slot.
double busy_probability(double tau, double m_users);

// (q_success, q_collision): channel occupancy of a successful and a collided
// transmission.
std::pair<double, double> occupancy_durations(const WifiMacConfig& mac);

DcfSolution wifi_throughput(double m_users, const WifiMacConfig& mac);

struct SlotSimResult {
    double throughput_bps = 0.0;
    double collision_fraction = 0.0;  // per-attempt share that collided
    double attempt_rate = 0.0;        // attempts / (slots * stations)
    double busy_fraction = 0.0;       // slots with >= 1 transmission
    std::int64_t successes = 0;
    std::int64_t collisions = 0;
    std::int64_t attempts = 0;
    std::int64_t slots = 0;
};

// Independent slot-level CSMA/CA simulator used as the model's oracle.
// Backoff counters suspend during busy slots and resume one tick when the
// busy period ends, so each virtual slot (idle or busy) costs every
// non-transmitting station exactly one count.
SlotSimResult slot_level_simulate(int m_users, const WifiMacConfig& mac,
                                  std::int64_t n_slots, std::uint64_t seed);

}  // namespace lteu
