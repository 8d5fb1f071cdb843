#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lteu/quadrature.hpp"
#include "lteu/special_functions.hpp"

#include <cmath>
#include <stdexcept>

using namespace lteu;

namespace {

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

TEST_CASE("exponential integral matches high-precision references") {
    CHECK(rel_err(exp_integral_e1(0.01), 4.0379295765381138) < 1e-13);
    CHECK(rel_err(exp_integral_e1(0.5), 0.55977359477616081) < 1e-13);
    CHECK(rel_err(exp_integral_e1(1.0), 0.21938393439552027) < 1e-13);
    CHECK(rel_err(exp_integral_e1(5.0), 0.0011482955912753258) < 1e-13);
    CHECK(rel_err(exp_integral_e1(10.0), 4.1569689296853243e-6) < 1e-13);
}

TEST_CASE("scaled exponential integral stays finite where the plain form underflows") {
    CHECK(rel_err(exp_e1_scaled(2.0), std::exp(2.0) * exp_integral_e1(2.0)) < 1e-13);

    // Large-argument expansion e^x E1(x) = 1/x - 1/x^2 + 2/x^3 - 6/x^4 + ...
    double x = 800.0;
    double asym = 1.0 / x - 1.0 / (x * x) + 2.0 / (x * x * x) - 6.0 / (x * x * x * x);
    CHECK(rel_err(exp_e1_scaled(x), asym) < 1e-9);

    // Tiny arguments approach -gamma - ln(x).
    double tiny = 1e-12;
    CHECK(rel_err(exp_e1_scaled(tiny), -0.57721566490153286 - std::log(tiny)) < 1e-10);
}

TEST_CASE("decay-kernel integral matches high-precision references") {
    CHECK(rel_err(i2(0.5, 2.0, 3), 0.074543420290399259) < 1e-11);
    CHECK(rel_err(i2(1.0, 1.0, 1), 0.59634736232319407) < 1e-11);
    CHECK(rel_err(i2(2.0, 0.3, 5), 25.984054388947771) < 1e-11);
    CHECK(rel_err(i2(0.05, 7.0, 2), 0.086504875364026966) < 1e-11);
}

TEST_CASE("rate-kernel integral matches high-precision references") {
    CHECK(rel_err(psi(0.5, 2.0, 3), 0.050193531031734172) < 1e-10);
    CHECK(rel_err(psi(1.0, 0.5, 2), 0.84792565439039348) < 1e-10);
    CHECK(rel_err(psi(2.0, 5.0, 7), 3.0758720317249979e-6) < 1e-10);
    CHECK(rel_err(psi(1.0, 1.3, 2), 0.19634786412013691) < 1e-10);

    // The y -> 1 pole of the partial-fraction split is covered by a series
    // branch; its truncation error is a little larger.
    CHECK(rel_err(psi(0.5, 1.0001, 4), 0.21587373275259829) < 5e-9);
}

TEST_CASE("closed forms agree with direct quadrature across branch boundaries") {
    for (double x : {0.02, 0.6, 3.0, 9.0}) {
        double closed = exp_integral_e1(x);
        double oracle =
            integrate([](double t) { return std::exp(-t) / t; }, x, x + 60.0, closed * 1e-11);
        CHECK(rel_err(closed, oracle) < 1e-9);
    }

    // y values straddling the series band edges at |y - 1| = 0.5.
    for (double y : {0.45, 0.51, 0.99, 1.01, 1.49, 1.55, 6.0}) {
        for (int z : {1, 2, 5, 7}) {
            for (double x : {0.05, 0.9, 4.0}) {
                double closed = psi(x, y, z);
                auto f = [&](double t) {
                    return std::exp(-x * t) / ((t + 1.0) * std::pow(t + y, z));
                };
                double oracle = integrate(f, 0.0, 60.0 / x, closed * 1e-11);
                CHECK(rel_err(closed, oracle) < 1e-8);
            }
        }
    }

    // The upward recursion and continued-fraction branches of the decay
    // kernel meet around x*y = 12.
    for (double xy : {9.0, 11.9, 12.1, 30.0}) {
        double y = 4.0;
        double x = xy / y;
        for (int z : {1, 3, 7}) {
            double closed = i2(x, y, z);
            auto f = [&](double t) { return std::exp(-x * t) * std::pow(t + y, -z); };
            double oracle = integrate(f, 0.0, 60.0 / x, closed * 1e-11);
            CHECK(rel_err(closed, oracle) < 1e-9);
        }
    }
}

TEST_CASE("kernel identities") {
    // z = 1, y = 1 reduces to the scaled exponential integral.
    for (double x : {0.1, 1.0, 7.0}) {
        CHECK(rel_err(i2(x, 1.0, 1), exp_e1_scaled(x)) < 1e-12);
    }
    // Integration by parts: x*I2(x,y,z) = y^(-z) - z*I2(x,y,z+1).
    for (double x : {0.3, 2.5}) {
        for (double y : {0.7, 3.0}) {
            for (int z : {1, 2, 4}) {
                double lhs = x * i2(x, y, z);
                double rhs = std::pow(y, -z) - z * i2(x, y, z + 1);
                CHECK(rel_err(lhs, rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("incomplete gamma helper matches references and sums to one") {
    CHECK(rel_err(detail::regularized_gamma_p(4.0, 4.0), 0.56652987963329107) < 1e-12);
    CHECK(rel_err(detail::regularized_gamma_p(7.0, 2.1), 0.0058621178080040960) < 1e-12);

    // Gamma(a, w) = e^(-w) w^a F(a, w) with F from the continued fraction;
    // P + Q = 1 ties the two helpers together. Gamma(3) = 2.
    double a = 3.0;
    double w = 8.0;
    double q = std::exp(-w) * std::pow(w, a) * detail::upper_gamma_cf_factor(a, w) / 2.0;
    CHECK(rel_err(detail::regularized_gamma_p(a, w) + q, 1.0) < 1e-12);
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
    CHECK_THROWS_AS(exp_e1_scaled(0.0), std::domain_error);
    CHECK_THROWS_AS(i2(0.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(i2(1.0, -2.0, 1), std::domain_error);
    CHECK_THROWS_AS(i2(1.0, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(psi(0.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(psi(1.0, 0.0, 1), std::domain_error);
    CHECK_THROWS_AS(psi(1.0, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(detail::regularized_gamma_p(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(detail::regularized_gamma_p(1.0, -0.5), std::domain_error);
}
