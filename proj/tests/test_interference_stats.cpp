#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lteu/interference_stats.hpp"
#include "lteu/rng.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace lteu;

TEST_CASE("gamma law matches high-precision references") {
    CHECK(gamma_cdf(4.0, 4.0, 1.0) == doctest::Approx(0.56652987963329107).epsilon(1e-11));
    CHECK(gamma_cdf(2.1, 7.0, 1.0) == doctest::Approx(0.0058621178080040960).epsilon(1e-11));
    CHECK(gamma_cdf(1.5, 3.0, 2.0) == doctest::Approx(0.040505439744813876).epsilon(1e-11));
    CHECK(gamma_cdf(32.0, 8.0, 4.0) == doctest::Approx(0.54703919051300551).epsilon(1e-11));
}

TEST_CASE("gamma law behaves like a distribution function") {
    CHECK(gamma_cdf(0.0, 3.0, 2.0) == 0.0);
    double prev = 0.0;
    for (double x : {0.5, 2.0, 6.0, 20.0, 80.0}) {
        double f = gamma_cdf(x, 3.0, 2.0);
        CHECK(f > prev);
        CHECK(f < 1.0);
        prev = f;
    }
    CHECK(gamma_cdf(400.0, 3.0, 2.0) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(gamma_cdf(1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_cdf(1.0, 1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(gamma_cdf(-1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("gamma law agrees with the standard library sampler") {
    auto eng = make_engine(321, "gamma_sampler_test");
    std::gamma_distribution<double> gd(3.0, 2.0);
    const int n = 200000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = gd(eng);
    std::sort(samples.begin(), samples.end());

    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        double f = gamma_cdf(samples[static_cast<std::size_t>(i)], 3.0, 2.0);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        ks = std::max({ks, std::abs(f - lo), std::abs(f - hi)});
    }
    CHECK(ks < 0.01);
}

TEST_CASE("interference coefficient tracks power, sharing, loss, and nulling") {
    double loss = 2.5e-7;
    InterferenceModel open = interference_model(false, 4, loss, 0.95, 0.023);
    CHECK(open.coefficient == doctest::Approx(0.023 / 4.0 * loss).epsilon(1e-15));
    CHECK(open.shape == 4.0);
    CHECK(open.scale == 1.0);

    InterferenceModel nulled = interference_model(true, 4, loss, 0.95, 0.023);
    CHECK(nulled.coefficient ==
          doctest::Approx(0.023 / 4.0 * loss * 0.05).epsilon(1e-12));

    InterferenceModel wide = interference_model(false, 4, loss, 0.95, 0.023, DistMode::gamma_2k);
    CHECK(wide.shape == 8.0);
    CHECK(wide.scale == 4.0);
    CHECK(wide.coefficient == open.coefficient);

    // Perfect estimates null a selected station completely.
    InterferenceModel perfect = interference_model(true, 4, loss, 1.0, 0.023);
    CHECK(perfect.coefficient == 0.0);

    CHECK_THROWS_AS(interference_model(false, 0, loss, 0.5, 0.023), std::domain_error);
    CHECK_THROWS_AS(interference_model(false, 4, 0.0, 0.5, 0.023), std::domain_error);
    CHECK_THROWS_AS(interference_model(false, 4, loss, 1.5, 0.023), std::domain_error);
    CHECK_THROWS_AS(interference_model(false, 4, loss, 0.5, 0.0), std::domain_error);
}

TEST_CASE("access probability reduces to the exponential tail for one user") {
    double loss = 1e-7;
    InterferenceModel m = interference_model(false, 1, loss, 0.0, 0.023);
    double thr = 5e-10;
    CHECK(access_probability(m, thr) ==
          doctest::Approx(-std::expm1(-thr / m.coefficient)).epsilon(1e-12));

    InterferenceModel zero;
    zero.coefficient = 0.0;
    CHECK(access_probability(zero, thr) == 1.0);
    CHECK(access_probability(m, 0.0) == 0.0);
    CHECK_THROWS_AS(access_probability(m, -1.0), std::domain_error);
}

TEST_CASE("expected contender count sums the per-station access probabilities") {
    std::vector<double> losses = {2.5e-7, 1.2e-7, 8.0e-8, 1.8e-7};
    double thr = 1e-9;
    AccessProfile none = expected_active_users({}, losses, 4, 0.95, 0.023,
                                               DistMode::erlang, thr);
    CHECK(none.per_user_access.size() == losses.size());
    double sum = 0.0;
    for (double p : none.per_user_access) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        sum += p;
    }
    CHECK(none.expected_active == doctest::Approx(sum).epsilon(1e-15));

    // Nulling a station can only raise its access probability.
    AccessProfile some = expected_active_users({0, 2}, losses, 4, 0.95, 0.023,
                                               DistMode::erlang, thr);
    CHECK(some.per_user_access[0] > none.per_user_access[0]);
    CHECK(some.per_user_access[2] > none.per_user_access[2]);
    CHECK(some.per_user_access[1] == none.per_user_access[1]);
    CHECK(some.per_user_access[3] == none.per_user_access[3]);
    CHECK(some.expected_active > none.expected_active);

    // Per-station law matches a direct evaluation.
    InterferenceModel m0 = interference_model(true, 4, losses[0], 0.95, 0.023);
    CHECK(some.per_user_access[0] ==
          doctest::Approx(access_probability(m0, thr)).epsilon(1e-15));

    CHECK_THROWS_AS(expected_active_users({4}, losses, 4, 0.95, 0.023, DistMode::erlang, thr),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_active_users({-1}, losses, 4, 0.95, 0.023, DistMode::erlang, thr),
                    std::invalid_argument);
}

TEST_CASE("default access threshold sits 10 dB over the noise floor") {
    CHECK(default_threshold(8e-14) == doctest::Approx(8e-13).epsilon(1e-15));
    CHECK_THROWS_AS(default_threshold(0.0), std::domain_error);
}
