#include "lteu/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace lteu {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;

double e1_series(double x) {
    double s = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k < 48; ++k) {
        term *= -x / k;
        double add = -term / k;
        s += add;
        if (std::abs(add) < 1e-18 * std::abs(s)) break;
    }
    return s;
}

// Modified Lentz evaluation of E1(x) = e^(-x)/(x+1 - 1/(x+3 - 4/(x+5 - ...))),
// returned without the e^(-x) factor.
double e1_cf_scaled(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 400; ++i) {
        double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

// I2(x, 1, n); the upward recursion is stable for x below the
// continued-fraction switchover used by i2().
double i2_at_one(double x, int n) {
    if (x < 12.0) {
        double v = exp_e1_scaled(x);
        for (int j = 2; j <= n; ++j) v = (1.0 - x * v) / (j - 1);
        return v;
    }
    return detail::upper_gamma_cf_factor(1.0 - n, x);
}

}  // namespace

double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: requires x > 0");
    if (x <= 1.0) return e1_series(x);
    return std::exp(-x) * e1_cf_scaled(x);
}

double exp_e1_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_e1_scaled: requires x > 0");
    if (x <= 1.0) return std::exp(x) * e1_series(x);
    return e1_cf_scaled(x);
}

double detail::upper_gamma_cf_factor(double a, double w) {
    constexpr double tiny = 1e-300;
    double b = w + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

double i2(double x, double y, int z) {
    if (z < 1) throw std::domain_error("i2: requires z >= 1");
    if (!(y > 0.0) || !(x * y > 0.0)) throw std::domain_error("i2: requires x*y > 0, y > 0");
    double w = x * y;
    if (z == 1) return exp_e1_scaled(w);
    if (w < 12.0) {
        // Textbook expansion of this integral alternates in sign and loses
        // seven digits by xy ~ 100; the recursion below is its Horner form
        // and stays accurate only while xy stays moderate.
        double v = exp_e1_scaled(w);
        for (int j = 2; j <= z; ++j) {
            v = (std::pow(y, 1.0 - j) - x * v) / (j - 1);
        }
        return v;
    }
    return std::pow(y, 1.0 - z) * detail::upper_gamma_cf_factor(1.0 - z, w);
}

double psi(double x, double y, int z) {
    if (z < 1) throw std::domain_error("psi: requires z >= 1");
    if (!(x > 0.0) || !(y > 0.0)) throw std::domain_error("psi: requires x > 0, y > 0");
    double u = y - 1.0;
    if (std::abs(u) <= 0.5) {
        // Binomial expansion of (t+y)^(-z) about y = 1. Partial fractions
        // amplify roundoff by |y-1|^(-z) and are unusable this close to 1;
        // this branch is exact at y = 1 and converges for |y-1| < 1.
        double sum = 0.0;
        double coef = 1.0;
        double upow = 1.0;
        int n = z + 1;
        double i2n = i2_at_one(x, n);
        for (int m = 0; m < 400; ++m) {
            double add = coef * upow * i2n;
            sum += add;
            if (m > 4 && std::abs(add) < 1e-17 * std::abs(sum)) break;
            upow *= -u;
            coef *= static_cast<double>(z + m) / (m + 1);
            if (x < 12.0 || n >= static_cast<int>(x)) {
                i2n = (1.0 - x * i2n) / n;
            } else {
                i2n = detail::upper_gamma_cf_factor(-n, x);
            }
            ++n;
        }
        return sum;
    }
    // Partial-fraction expansion over the (t+1) and (t+y)^i poles.
    double sum = std::pow(u, static_cast<double>(-z)) * exp_e1_scaled(x);
    double sign = 1.0;
    for (int j = 1; j <= z; ++j) {
        sum += sign * std::pow(-u, static_cast<double>(-j)) * i2(x, y, z - j + 1);
        sign = -sign;
    }
    return sum;
}

double detail::regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: requires a > 0");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: requires x >= 0");
    if (x == 0.0) return 0.0;
    double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 1000; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    double cf = upper_gamma_cf_factor(a, x);
    double q = cf * std::exp(-x + a * std::log(x) - lg);
    return 1.0 - q;
}

}  // namespace lteu
