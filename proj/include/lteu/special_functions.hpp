#pragma once

namespace lteu {

// First-order exponential integral E1(x) = int_x^inf e^(-t)/t dt, x > 0.
double exp_integral_e1(double x);

// e^x * E1(x), stable for large x where E1 underflows.
double exp_e1_scaled(double x);

// I2(x, y, z) = int_0^inf e^(-xt) (t+y)^(-z) dt for integer z >= 1, xy > 0.
double i2(double x, double y, int z);

// psi(x, y, z) = int_0^inf e^(-xt) / ((t+1)(t+y)^z) dt for integer z >= 1,
// x > 0, y > 0.
double psi(double x, double y, int z);

namespace detail {

// Regularized lower incomplete gamma P(a, x) to 1e-12 relative accuracy.
double regularized_gamma_p(double a, double x);

// Continued-fraction factor F with Gamma(a, w) = e^(-w) w^a F, valid for
// w >= a + 1 in magnitude terms; used for the large-argument I2 branch.
double upper_gamma_cf_factor(double a, double w);

}  // namespace detail

}  // namespace lteu
