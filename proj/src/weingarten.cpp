#include "swcert/weingarten.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>
#include <vector>

#include "swcert/numerics.hpp"

namespace swcert {

namespace {

constexpr int kGridPoints = 2048;

// Grid on [lo, hi] that clusters geometrically toward hi; used to resolve
// behavior near a finite right endpoint (vertical asymptotes).
std::vector<double> geometric_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double shrink = std::pow(10.0, -12.0 * i / (n - 1));
        grid.push_back(hi - (hi - lo) * shrink);
    }
    return grid;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
    return grid;
}

// Effective right end for evaluation: strictly inside a finite domain.
double clamp_into_domain(double t, double alpha, double b, bool& clamped) {
    if (std::isfinite(b) && t >= b) {
        clamped = true;
        return b - (b - alpha) * 1e-12;
    }
    return t;
}

std::string format_ratio(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", d);
    return buf;
}

}  // namespace

const char* to_string(WeingartenType type) {
    switch (type) {
        case WeingartenType::Minimal: return "minimal-type";
        case WeingartenType::Cmc: return "cmc-type";
        case WeingartenType::Cgc: return "cgc-type";
    }
    return "?";
}

WeingartenClass WeingartenClass::build(std::function<double(double)> g, double alpha, double b,
                                       std::string label) {
    if (!(alpha >= 0.0)) throw InvalidInput("umbilicity constant alpha must be nonnegative");
    if (!(b > alpha)) throw InvalidInput("domain end b must exceed alpha");

    const double g_alpha = g(alpha);
    if (std::abs(g_alpha - alpha) > 1e-10 * std::max(1.0, std::abs(alpha)))
        throw NotUmbilic("g(alpha) != alpha: the class has no umbilic fixed point");

    std::vector<double> grid;
    if (std::isfinite(b)) {
        grid = geometric_grid(alpha, b - (b - alpha) * 1e-12, kGridPoints);
    } else {
        grid = linear_grid(alpha, alpha + 100.0 * std::max(1.0, alpha), kGridPoints);
    }

    std::vector<double> values;
    values.reserve(grid.size());
    for (const double t : grid) values.push_back(g(t));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(values[i + 1] < values[i]))
            throw NotElliptic("g is not strictly decreasing near t = " +
                              std::to_string(grid[i]));
    }

    WeingartenClass w;
    w.g_ = std::move(g);
    w.alpha_ = alpha;
    w.b_ = b;
    w.label_ = std::move(label);
    w.validated_up_to_ = grid.back();

    if (alpha == 0.0) {
        w.type_ = WeingartenType::Minimal;
        return w;
    }

    std::size_t first_nonpos = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (values[i] <= 0.0) {
            first_nonpos = i;
            break;
        }
    }
    if (first_nonpos == grid.size()) {
        w.type_ = WeingartenType::Cgc;
        return w;
    }

    w.type_ = WeingartenType::Cmc;
    const double lo = first_nonpos == 0 ? alpha : grid[first_nonpos - 1];
    const auto neg_g = [&w](double t) { return -w.g_(t); };
    w.beta_ = solve_increasing(neg_g, lo, grid[first_nonpos], 0.0);
    return w;
}

WeingartenClass WeingartenClass::homothety(double d) const {
    if (!(d > 0.0)) throw InvalidInput("homothety ratio must be positive");
    WeingartenClass out;
    out.g_ = [base = g_, d](double t) { return base(d * t) / d; };
    out.alpha_ = alpha_ / d;
    out.b_ = b_ / d;
    out.type_ = type_;
    if (beta_) out.beta_ = *beta_ / d;
    out.validated_up_to_ = validated_up_to_ / d;
    out.label_ = label_.empty() ? "homothety(" + format_ratio(d) + ")"
                                : label_ + " / homothety " + format_ratio(d);
    return out;
}

WeingartenClass linear_cmc(double H) {
    if (!(H > 0.0)) throw InvalidInput("mean curvature H must be positive");
    return WeingartenClass::build([H](double t) { return 2.0 * H - t; }, H,
                                  WeingartenClass::kInfinity, "2H - t, H=" + format_ratio(H));
}

WeingartenClass linear_relation(double alpha, double c) {
    if (!(alpha > 0.0)) throw InvalidInput("alpha must be positive");
    if (!(c < 0.0)) throw InvalidInput("slope c must be negative");
    return WeingartenClass::build([alpha, c](double t) { return (1.0 - c) * alpha + c * t; },
                                  alpha, WeingartenClass::kInfinity,
                                  "(1-c)a + c t, a=" + format_ratio(alpha) +
                                      ", c=" + format_ratio(c));
}

WeingartenClass minimal_linear(double m0) {
    if (!(m0 < 0.0)) throw InvalidInput("slope m0 must be negative");
    return WeingartenClass::build([m0](double t) { return m0 * t; }, 0.0,
                                  WeingartenClass::kInfinity, "m0 t, m0=" + format_ratio(m0));
}

WeingartenClass from_expression(const gexpr::Expr& e, double alpha, double b) {
    return WeingartenClass::build([e](double t) { return e.eval(t); }, alpha, b, e.str());
}

namespace {

LineBoundCheck line_check(const WeingartenClass& w, double slope, double intercept,
                          double t_hi, bool clamped, bool strict) {
    // union of a linear and a right-clustered grid; the latter resolves
    // asymptotic behavior when the domain end is finite
    std::vector<double> grid = linear_grid(w.alpha(), t_hi, 10001);
    if (w.b_finite()) {
        const std::vector<double> extra = geometric_grid(w.alpha(), t_hi, 10001);
        grid.insert(grid.end(), extra.begin(), extra.end());
    }
    LineBoundCheck out;
    out.verified_up_to = t_hi;
    out.clamped = clamped;
    out.min_margin = std::numeric_limits<double>::infinity();
    for (const double t : grid) {
        const double margin = w(t) - (slope * t + intercept);
        if (margin < out.min_margin) {
            out.min_margin = margin;
            out.argmin = t;
        }
    }
    out.holds = strict ? out.min_margin > 0.0 : out.min_margin >= 0.0;
    return out;
}

}  // namespace

LineBoundCheck check_line_through_umbilic(const WeingartenClass& w, double m0, double horizon) {
    if (!(m0 < 0.0)) throw InvalidInput("slope m0 must be negative");
    if (!(horizon > w.alpha())) throw InvalidInput("horizon must exceed alpha");
    bool clamped = false;
    const double t_hi = clamp_into_domain(horizon, w.alpha(), w.b(), clamped);
    // line through (alpha, alpha) with slope m0: (1 - m0) alpha + m0 t
    return line_check(w, m0, (1.0 - m0) * w.alpha(), t_hi, clamped, /*strict=*/false);
}

LineBoundCheck check_line_through_origin(const WeingartenClass& w, double m0, double t_max) {
    if (!(m0 < 0.0)) throw InvalidInput("slope m0 must be negative");
    if (!(w.alpha() > 0.0)) throw InvalidInput("requires a class with alpha > 0");
    if (!(w.alpha() <= t_max))
        throw InvalidInput("comparison interval is empty: t_max < alpha");
    bool clamped = false;
    const double t_hi = clamp_into_domain(t_max, w.alpha(), w.b(), clamped);
    return line_check(w, m0, 0.0, t_hi, clamped, /*strict=*/true);
}

bool diagram_dominates(const WeingartenClass& w1, const WeingartenClass& w2, double horizon) {
    if (!(w1.alpha() <= w2.alpha())) return false;
    if (!(w1.b() <= w2.b())) return false;
    bool clamped = false;
    double t_hi = w2.alpha() + horizon;
    t_hi = clamp_into_domain(t_hi, w2.alpha(), w1.b(), clamped);
    t_hi = clamp_into_domain(t_hi, w2.alpha(), w2.b(), clamped);
    for (const double t : linear_grid(w2.alpha(), t_hi, kGridPoints)) {
        if (!(w1(t) <= w2(t))) return false;
    }
    return true;
}

}  // namespace swcert
