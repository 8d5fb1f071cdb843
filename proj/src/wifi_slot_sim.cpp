#include "lteu/wifi_dcf.hpp"
#include "lteu/rng.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace lteu {

SlotSimResult slot_level_simulate(int m_users, const WifiMacConfig& mac,
                                  std::int64_t n_slots, std::uint64_t seed) {
    if (m_users < 1) throw std::domain_error("slot_level_simulate: requires m_users >= 1");
    if (!mac.valid()) throw std::invalid_argument("slot_level_simulate: invalid mac config");
    if (n_slots < 1) throw std::domain_error("slot_level_simulate: requires n_slots >= 1");

    auto eng = make_engine(seed, "slot_sim");
    auto [qs, qc] = occupancy_durations(mac);
    const int w = mac.min_window;
    const int l = mac.max_stage;

    std::vector<int> stage(m_users, 0);
    std::vector<int> counter(m_users);
    std::vector<char> redrew(m_users, 0);
    {
        std::uniform_int_distribution<int> d0(0, w - 1);
        for (auto& k : counter) k = d0(eng);
    }

    double elapsed = 0.0;
    SlotSimResult r;
    for (std::int64_t s = 0; s < n_slots; ++s) {
        int n_tx = 0;
        int last_tx = -1;
        for (int i = 0; i < m_users; ++i) {
            if (counter[i] == 0) {
                ++n_tx;
                last_tx = i;
            }
        }
        if (n_tx == 0) {
            elapsed += mac.slot_time;
        } else if (n_tx == 1) {
            elapsed += qs;
            ++r.successes;
            ++r.attempts;
            stage[last_tx] = 0;
            counter[last_tx] = std::uniform_int_distribution<int>(0, w - 1)(eng);
            redrew[last_tx] = 1;
        } else {
            elapsed += qc;
            ++r.collisions;
            r.attempts += n_tx;
            for (int i = 0; i < m_users; ++i) {
                if (counter[i] != 0) continue;
                stage[i] = std::min(stage[i] + 1, l);
                int win = (1 << stage[i]) * w;
                counter[i] = std::uniform_int_distribution<int>(0, win - 1)(eng);
                redrew[i] = 1;
            }
        }
        // Stations that did not just draw a fresh counter use up one count per
        // virtual slot, busy or idle.
        for (int i = 0; i < m_users; ++i) {
            if (!redrew[i] && counter[i] > 0) --counter[i];
            redrew[i] = 0;
        }
    }

    std::int64_t busy = r.successes + r.collisions;
    std::int64_t coll_attempts = r.attempts - r.successes;
    r.slots = n_slots;
    r.throughput_bps = static_cast<double>(r.successes) * mac.payload_bits / elapsed;
    r.collision_fraction =
        r.attempts > 0 ? static_cast<double>(coll_attempts) / static_cast<double>(r.attempts) : 0.0;
    r.attempt_rate = static_cast<double>(r.attempts) /
                     (static_cast<double>(n_slots) * static_cast<double>(m_users));
    r.busy_fraction = static_cast<double>(busy) / static_cast<double>(n_slots);
    return r;
}

}  // namespace lteu
