#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lteu/wifi_dcf.hpp"

#include <cmath>
#include <stdexcept>

using namespace lteu;

namespace {

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

TEST_CASE("single station never collides and attempts at the window rate") {
    WifiMacConfig mac;
    auto [tau, p] = solve_tau(1.0, mac);
    CHECK(tau == doctest::Approx(2.0 / 17.0).epsilon(1e-15));
    CHECK(p == 0.0);
}

TEST_CASE("fixed point matches independently solved references") {
    WifiMacConfig mac;

    auto [tau2, p2] = solve_tau(2.0, mac);
    CHECK(rel_err(tau2, 0.10462063228196894) < 1e-12);
    CHECK(rel_err(p2, 0.10462063228196894) < 1e-12);

    auto [tau5, p5] = solve_tau(5.0, mac);
    CHECK(rel_err(tau5, 0.076148902234687901) < 1e-12);
    CHECK(rel_err(p5, 0.27153629761168803) < 1e-12);

    auto [tau10, p10] = solve_tau(10.0, mac);
    CHECK(rel_err(tau10, 0.052479894441153950) < 1e-12);
    CHECK(rel_err(p10, 0.38440383330108578) < 1e-12);
}

TEST_CASE("solution satisfies both coupled equations, including fractional station counts") {
    WifiMacConfig mac;
    for (double m : {1.0, 2.0, 3.7, 5.0, 10.0, 14.25, 20.0, 50.0}) {
        auto [tau, p] = solve_tau(m, mac);
        double tau_back = backoff_attempt_probability(p, mac);
        double p_back = 1.0 - std::pow(1.0 - tau, m - 1.0);
        CHECK(std::abs(tau - tau_back) < 1e-12);
        CHECK(std::abs(p - p_back) < 1e-12);
        CHECK(tau > 0.0);
        CHECK(tau < 1.0);
        CHECK(p >= 0.0);
        CHECK(p < 1.0);
    }
}

TEST_CASE("attempt probability map hits known endpoints and decreases") {
    WifiMacConfig mac;
    // No collisions: mean backoff (W+1)/2 slots per attempt.
    CHECK(backoff_attempt_probability(0.0, mac) ==
          doctest::Approx(2.0 / (mac.min_window + 1.0)).epsilon(1e-15));
    double prev = backoff_attempt_probability(0.0, mac);
    for (double p : {0.1, 0.3, 0.6, 0.9}) {
        double tau = backoff_attempt_probability(p, mac);
        CHECK(tau < prev);
        prev = tau;
    }
}

TEST_CASE("slot probabilities follow the binomial forms") {
    double tau = 0.08;
    for (double m : {1.0, 2.0, 5.0, 12.0}) {
        double busy = busy_probability(tau, m);
        CHECK(busy == doctest::Approx(1.0 - std::pow(1.0 - tau, m)).epsilon(1e-14));
        double succ = success_probability(tau, m);
        double expected = m * tau * std::pow(1.0 - tau, m - 1.0) / busy;
        CHECK(succ == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("slot occupancy durations match the configured timing") {
    WifiMacConfig mac;
    auto [q_success, q_collision] = occupancy_durations(mac);
    CHECK(q_success == doctest::Approx(9.2506666666666667e-5).epsilon(1e-13));
    CHECK(q_collision == doctest::Approx(7.5386666666666667e-5).epsilon(1e-13));
}

TEST_CASE("saturation throughput matches independently computed references") {
    WifiMacConfig mac;
    CHECK(rel_err(wifi_throughput(2.0, mac).throughput_bps, 65755447.349481390) < 1e-12);
    CHECK(rel_err(wifi_throughput(5.0, mac).throughput_bps, 77654743.921424192) < 1e-12);
    CHECK(rel_err(wifi_throughput(10.0, mac).throughput_bps, 79750807.861027821) < 1e-12);

    DcfSolution s = wifi_throughput(5.0, mac);
    CHECK(s.p_busy == doctest::Approx(1.0 - std::pow(1.0 - s.tau, 5.0)).epsilon(1e-13));
    CHECK(s.p_success ==
          doctest::Approx(5.0 * s.tau * std::pow(1.0 - s.tau, 4.0) / s.p_busy).epsilon(1e-13));
}

TEST_CASE("invalid inputs are rejected") {
    WifiMacConfig mac;
    CHECK_THROWS_AS(solve_tau(0.5, mac), std::domain_error);
    CHECK_THROWS_AS(solve_tau(-2.0, mac), std::domain_error);
    CHECK_THROWS_AS(backoff_attempt_probability(-0.1, mac), std::domain_error);
    CHECK_THROWS_AS(backoff_attempt_probability(1.5, mac), std::domain_error);

    WifiMacConfig bad = mac;
    bad.min_window = 0;
    CHECK_THROWS_AS(solve_tau(2.0, bad), std::invalid_argument);
    CHECK_THROWS_AS(backoff_attempt_probability(0.2, bad), std::invalid_argument);
    CHECK_THROWS_AS(wifi_throughput(2.0, bad), std::invalid_argument);

    CHECK_THROWS_AS(slot_level_simulate(2, mac, 0, 1), std::domain_error);
    CHECK_THROWS_AS(slot_level_simulate(0, mac, 1000, 1), std::domain_error);
}

TEST_CASE("slot-level simulation tracks the analytic operating point") {
    WifiMacConfig mac;
    const std::int64_t slots = 1000000;
    const std::uint64_t seed = 777;

    for (int m : {2, 5, 10}) {
        DcfSolution s = wifi_throughput(static_cast<double>(m), mac);
        SlotSimResult sim = slot_level_simulate(m, mac, slots, seed + m);

        CHECK(rel_err(sim.throughput_bps, s.throughput_bps) < 0.05);
        // The analytic model treats per-station backoff processes as
        // independent, which understates collisions at m = 2 where the two
        // counters are strongly coupled; the observed gap sits near 6% there
        // and well within 5% for larger m.
        double collision_tol = (m == 2) ? 0.08 : 0.05;
        CHECK(rel_err(sim.collision_fraction, s.p_collision) < collision_tol);

        CHECK(sim.slots == slots);
        CHECK(sim.attempts >= sim.successes + 2 * sim.collisions);
        CHECK(sim.busy_fraction > 0.0);
        CHECK(sim.busy_fraction < 1.0);
        CHECK(sim.attempt_rate > 0.0);
        CHECK(sim.attempt_rate < 1.0);
    }
}

TEST_CASE("simulation is deterministic for a fixed seed") {
    WifiMacConfig mac;
    SlotSimResult a = slot_level_simulate(5, mac, 200000, 42);
    SlotSimResult b = slot_level_simulate(5, mac, 200000, 42);
    CHECK(a.throughput_bps == b.throughput_bps);
    CHECK(a.collisions == b.collisions);
    CHECK(a.successes == b.successes);
    CHECK(a.attempts == b.attempts);

    SlotSimResult c = slot_level_simulate(5, mac, 200000, 43);
    CHECK(a.successes != c.successes);
}
