#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lteu/interference_stats.hpp"
#include "lteu/lte_analytics.hpp"
#include "lteu/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace lteu;

TEST_CASE("sup-norm distance basics") {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };

    SampleBatch one;
    one.values = {0.5};
    CHECK(ks_distance(one, uniform) == doctest::Approx(0.5).epsilon(1e-15));

    SampleBatch shuffled;
    shuffled.values = {0.9, 0.1, 0.5, 0.3, 0.7};
    SampleBatch ordered;
    ordered.values = {0.1, 0.3, 0.5, 0.7, 0.9};
    CHECK(ks_distance(shuffled, uniform) == ks_distance(ordered, uniform));

    // Samples piled on one point cannot track a continuous law.
    SampleBatch flat;
    flat.values.assign(100, 0.25);
    CHECK(ks_distance(flat, uniform) >= 0.5);

    SampleBatch empty;
    CHECK_THROWS_AS(ks_distance(empty, uniform), std::invalid_argument);
}

TEST_CASE("exact grid gives the known plug-in distance") {
    // n equispaced midpoints against U(0,1) sit at distance 1/(2n).
    SampleBatch mid;
    const int n = 10;
    for (int i = 0; i < n; ++i) mid.values.push_back((i + 0.5) / n);
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_distance(mid, uniform) == doctest::Approx(0.05).epsilon(1e-12));
}

TEST_CASE("orthonormal projections produce the unit-scale gamma sum") {
    SampleBatch batch = orthonormal_interference_samples(3, 8, 20000, 5150);
    CHECK(batch.values.size() == 20000u);
    CHECK(batch.n == 20000);

    double ks = ks_distance(batch, [](double x) { return gamma_cdf(x, 3.0, 1.0); });
    CHECK(ks < 0.02);

    double mean = std::accumulate(batch.values.begin(), batch.values.end(), 0.0) / 20000.0;
    CHECK(mean == doctest::Approx(3.0).epsilon(0.05));

    CHECK_THROWS_AS(orthonormal_interference_samples(0, 8, 10, 1), std::domain_error);
    CHECK_THROWS_AS(orthonormal_interference_samples(9, 8, 10, 1), std::domain_error);
    CHECK_THROWS_AS(orthonormal_interference_samples(3, 8, 0, 1), std::domain_error);
}

TEST_CASE("perfect-feedback SINR samples follow the analytic law") {
    SmallCellConfig config;
    config.quant_error = 0.0;
    const int k = 4;
    const int nulls = config.n_antennas - 1 - k;

    SampleBatch batch = simulate_sinr_samples(config, k, nulls, 20000, 99);
    SinrModel model{k, 0.0, config.tx_power, config.noise_power};
    double ks = ks_distance(batch, [&](double x) { return sinr_cdf(x, model); });
    CHECK(ks < 0.02);

    CHECK_THROWS_AS(simulate_sinr_samples(config, 0, 1, 10, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_sinr_samples(config, 8, 0, 10, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_sinr_samples(config, 4, 3, 0, 1), std::domain_error);
}

TEST_CASE("residual interference sums stay near the stream count") {
    SmallCellConfig config;
    const int k = 4;
    SampleBatch batch = simulate_interference_samples(config, k, config.wifi_csi_corr,
                                                      4000, 2211);
    double mean = std::accumulate(batch.values.begin(), batch.values.end(), 0.0) / 4000.0;
    CHECK(mean > 3.8);
    CHECK(mean < 4.2);
    for (double v : batch.values) CHECK(v >= 0.0);

    CHECK_THROWS_AS(simulate_interference_samples(config, 8, 0.5, 10, 1), std::domain_error);
    CHECK_THROWS_AS(simulate_interference_samples(config, 4, -0.1, 10, 1), std::domain_error);
}

TEST_CASE("sample batches are deterministic in the seed") {
    SampleBatch a = orthonormal_interference_samples(3, 8, 500, 77);
    SampleBatch b = orthonormal_interference_samples(3, 8, 500, 77);
    CHECK(a.values == b.values);
    SampleBatch c = orthonormal_interference_samples(3, 8, 500, 78);
    CHECK(a.values != c.values);

    SmallCellConfig config;
    SampleBatch d = simulate_sinr_samples(config, 3, 2, 50, 13);
    SampleBatch e = simulate_sinr_samples(config, 3, 2, 50, 13);
    CHECK(d.values == e.values);
    CHECK(d.seed == 13u);
    CHECK(d.n == 50);
}
