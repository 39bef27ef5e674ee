#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "swcert/error.hpp"
#include "swcert/gexpr.hpp"

namespace swcert {

enum class WeingartenType { Minimal, Cmc, Cgc };

const char* to_string(WeingartenType type);

// The relation kappa2 = g(kappa1) on [alpha, b), for a strictly decreasing g
// with fixed point g(alpha) = alpha. Validation happens on a grid of at
// least 2048 points (geometrically refined toward a finite b to resolve
// vertical asymptotes) and is an explicit semi-decision: `validated_up_to`
// records how far the monotonicity check actually looked.
//
// Classification: alpha == 0 -> Minimal; alpha > 0 with a root g(beta) = 0 in
// (alpha, b) -> Cmc (beta located by bisection); alpha > 0 with g positive on
// the grid -> Cgc.
//
// Immutable after construction; evaluation is reentrant.
class WeingartenClass {
public:
    static constexpr double kInfinity = std::numeric_limits<double>::infinity();

    static WeingartenClass build(std::function<double(double)> g, double alpha,
                                 double b = kInfinity, std::string label = {});

    double operator()(double t) const { return g_(t); }
    double alpha() const { return alpha_; }
    double b() const { return b_; }
    bool b_finite() const { return std::isfinite(b_); }
    WeingartenType type() const { return type_; }
    std::optional<double> beta() const { return beta_; }
    const std::string& label() const { return label_; }
    double validated_up_to() const { return validated_up_to_; }

    // The equivalent class with g~(t) = g(d t) / d on [alpha/d, b/d); type is
    // preserved and alpha, beta scale by 1/d exactly.
    WeingartenClass homothety(double d) const;

private:
    WeingartenClass() = default;

    std::function<double(double)> g_;
    double alpha_ = 0.0;
    double b_ = kInfinity;
    WeingartenType type_ = WeingartenType::Minimal;
    std::optional<double> beta_;
    std::string label_;
    double validated_up_to_ = 0.0;
};

// Built-in families.
WeingartenClass linear_cmc(double H);                     // g(t) = 2H - t on [H, inf)
WeingartenClass linear_relation(double alpha, double c);  // g(t) = (1-c) alpha + c t, c < 0
WeingartenClass minimal_linear(double m0);                // g(t) = m0 t on [0, inf), m0 < 0
WeingartenClass from_expression(const gexpr::Expr& e, double alpha,
                                double b = WeingartenClass::kInfinity);

struct LineBoundCheck {
    bool holds = false;
    double min_margin = 0.0;    // min over the grid of g(t) - line(t)
    double argmin = 0.0;        // grid point attaining the minimum
    double verified_up_to = 0.0;
    bool clamped = false;       // horizon exceeded the domain and was clamped
};

// Verifies g(t) >= (1 - m0) alpha + m0 t -- the line of slope m0 through the
// umbilic point (alpha, alpha) -- on a grid over [alpha, min(horizon, b)).
// Bounded verification only; the record carries the horizon actually used.
LineBoundCheck check_line_through_umbilic(const WeingartenClass& w, double m0, double horizon);

// Verifies g(t) > m0 t on [alpha, t_max] (grid check). Requires
// 0 < alpha <= t_max; a t_max beyond the domain end is clamped and flagged.
LineBoundCheck check_line_through_origin(const WeingartenClass& w, double m0, double t_max);

// Comparability hypothesis of the tangency principle: true iff
// alpha1 <= alpha2, b1 <= b2 and g1 <= g2 on a grid over [alpha2, b2)
// (clamped to `horizon` when b2 is infinite).
bool diagram_dominates(const WeingartenClass& w1, const WeingartenClass& w2,
                       double horizon = 1e4);

}  // namespace swcert
