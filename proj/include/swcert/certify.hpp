#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swcert/error.hpp"
#include "swcert/weingarten.hpp"

namespace swcert {

struct ConditionRow {
    std::string name;
    bool holds = false;
    // positive margin means the inequality holds with that much slack;
    // negative means it fails by that much
    double margin = 0.0;
    bool informational = false;  // reported but not part of the overall verdict
    std::string detail;
};

struct CertificationReport {
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<std::pair<std::string, double>> intermediates;
    std::vector<ConditionRow> conditions;
    std::vector<std::string> notes;
    bool pass = false;                      // all non-informational conditions hold
    std::optional<double> d0;               // homothety threshold (theorem-1 mode)

    const ConditionRow& condition(const std::string& name) const;
    double intermediate(const std::string& name) const;
};

// JSON rendering with all numeric fields rounded to 12 significant digits
// (deterministic across runs).
std::string to_json_string(const CertificationReport& report, int indent = 2);

// sqrt(2 d h* / alpha - h*^2); requires d > alpha h* / 2.
double r_d_value(double d, double alpha, double h_star);

// j(s) = sqrt((s - 2 omega)^3 / (s - omega)), strictly increasing and
// unbounded on [2 omega, inf). Requires s >= 2 omega.
double j_value(double s, double omega);

// Smallest s >= 2 omega with j(s) = target, by bracketing and bisection to
// relative 1e-10.
double s0_solve(double omega, double target);

// C(eps, Lambda, lambda) = min of Lambda*lambda/(Lambda+lambda) and
// 8 eps sqrt(lambda^5 Lambda^3) /
//   ((9 sqrt(Lambda^3) + 2 sqrt(lambda^3)(cosh(eps) - 1))^2 + 4 eps^2 lambda^3).
// Requires eps in (0, 2/3).
double c_constant(double eps, double max_curvature, double min_curvature);

// Homothety threshold d0 for a boundary curve with curvature extremes
// Lambda >= lambda and enclosing radius omega, against a cmc-type class W and
// a comparison slope m0 < 0. The line-bound certificate (from
// check_line_through_umbilic) is required; pass d to also evaluate the four
// source conditions at that ratio.
CertificationReport theorem1_threshold(double max_curvature, double min_curvature, double omega,
                                       const WeingartenClass& w, double m0,
                                       const std::optional<LineBoundCheck>& line_bound,
                                       std::optional<double> d = std::nullopt);

// The pinching test: sqrt(Lambda^3/lambda) < beta < (2/(3 eps)) of the same,
// and alpha <= C(eps, Lambda, lambda). Supplying omega additionally reports
// the bisected s0 next to the analytic choice 9/(2 lambda) + r (cosh eps - 1).
CertificationReport theorem2_check(double max_curvature, double min_curvature, double eps,
                                   double alpha, double beta,
                                   std::optional<double> omega = std::nullopt);

// The general condition ledger (A)-(E) with informational (F), (G) and both
// readings of (C), evaluated at homothety ratio 1.
CertificationReport general_conditions_check(double max_curvature, double min_curvature,
                                             double omega, double m0, double h_star,
                                             const WeingartenClass& w);

}  // namespace swcert
