#pragma once

#include <cmath>
#include <utility>

namespace swcert {

namespace detail {

template <typename F>
double simpson_rec(F& f, double a, double fa, double b, double fb, double m, double fm,
                   double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with the standard Richardson error estimate.
// The integrand must be finite on [a, b].
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12, int max_depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

// Smallest x in [lo, hi] with f(x) = target for nondecreasing f, assuming
// f(lo) <= target <= f(hi). Stops at the requested relative width or at
// adjacent doubles; returns the endpoint with the smaller residual so that
// exact roots are preserved bit-for-bit.
template <typename F>
double solve_increasing(F&& f, double lo, double hi, double target, double rel_tol = 0.0) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo >= target) return lo;
    if (fhi <= target) return hi;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm < target) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        if (rel_tol > 0.0 && hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    return (std::abs(fhi - target) < std::abs(target - flo)) ? hi : lo;
}

// Golden-section maximizer on [a, b] for a unimodal function; returns argmax.
template <typename F>
double golden_max(F&& f, double a, double b, int iters = 120) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < iters && b - a > 0.0; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

template <typename F>
double golden_min(F&& f, double a, double b, int iters = 120) {
    return golden_max([&f](double x) { return -f(x); }, a, b, iters);
}

}  // namespace swcert
