#pragma once

#include <cmath>

namespace lteu {

// Adaptive Gauss-Kronrod 7/15 quadrature with interval bisection.
// The error estimate on each panel is |K15 - G7|; panels split until the
// estimate clears the tolerance share or the depth cap is hit.
namespace gk {

// Kronrod abscissae on [-1, 1] (symmetric, nonnegative half shown).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights for the embedded 7-point rule (odd Kronrod indices).
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class F>
void panel(const F& f, double a, double b, double& val, double& err, double& resabs) {
    double c = 0.5 * (a + b);
    double h = 0.5 * (b - a);
    double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resa = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x);
        double f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        resa += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    val = resk * h;
    err = std::abs((resk - resg) * h);
    resabs = resa * std::abs(h);
}

// The |K15 - G7| estimate bottoms out at roundoff, a small multiple of
// machine epsilon times the panel's absolute integral. Below that floor
// splitting cannot reduce the estimate, so such panels are accepted no
// matter how small their tolerance share has become.
inline constexpr double kRoundoffFloor = 1e-13;

template <class F>
double adapt(const F& f, double a, double b, double tol, int depth) {
    double val, err, resabs;
    panel(f, a, b, val, err, resabs);
    if (err <= tol || err <= kRoundoffFloor * resabs || depth >= 48 ||
        !(b - a > 1e-300)) {
        return val;
    }
    double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1) +
           adapt(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace gk

template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-12) {
    return gk::adapt(f, a, b, abs_tol, 0);
}

}  // namespace lteu
