#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swcert/error.hpp"

namespace swcert {

// Normalized total height bound h(m0) = integral over w in [1, inf) of
// dw / sqrt(w^(-2 m0) - 1); finite exactly when m0 < -1. Throws
// DivergentIntegral for -1 <= m0 < 0 and InvalidInput for m0 >= 0.
double total_height(double m0);

// The surrogate h*(m0): -1/(1 + m0) for m0 < -1, else 1. Requires m0 < 0.
double height_surrogate(double m0);

// Rotational profile of the catenoid-like surface for the linear relation
// kappa2 = m0 * kappa1, m0 < 0, with neck radius r0 in the plane z = 0.
// The height of the section circle of radius s >= r0 is
//
//   h(s) = r0 * integral over w in [1, s/r0] of dw / sqrt(w^(-2 m0) - 1).
//
// The integrable endpoint singularity at w = 1 is removed by the substitution
// w = 1 + u^2 before quadrature; for m0 < -1 the far tail is transformed to a
// proper integral by v = w^(1 + m0). Immutable after construction and safe
// for concurrent reads.
class CatenoidProfile {
public:
    CatenoidProfile(double m0, double r0);

    double slope() const { return m0_; }
    double neck_radius() const { return r0_; }

    // Height of the section of radius s; throws DomainError for s < r0.
    double height(double s) const;

    // r0 * total_height(m0) when m0 < -1, otherwise unbounded.
    std::optional<double> max_height() const;

    // Inverse of height(): the unique s >= r0 at the given height, by
    // bracketing and bisection to relative 1e-10. Throws UnreachableHeight
    // when the height exceeds the bound.
    double radius_at_height(double target_h) const;

private:
    double m0_ = 0.0;
    double r0_ = 0.0;
    double prefix_to_two_ = 0.0;  // integral over [1, 2]
    double tail_from_two_ = 0.0;  // integral over [2, inf), m0 < -1
    double total_ = 0.0;          // total_height(m0), m0 < -1
};

// Free-function forms of the profile operations.
double height_profile(double m0, double r0, double s);
double radius_at_height(double m0, double r0, double target_h);

// Curvature diagram of the profile surface: the half-open segment from the
// origin (excluded) to the neck pair, written in the order (m0/r0, 1/r0).
// Under the kappa1 >= kappa2 axis convention the same point reads
// (1/r0, m0/r0); the CLI report carries a note instead of reordering.
struct NeckDiagram {
    std::array<double, 2> origin{0.0, 0.0};
    bool origin_included = false;
    std::array<double, 2> neck_point;
};

NeckDiagram neck_diagram(double m0, double r0);

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based indices
};

// Surface of revolution of the profile truncated at height_cap, sampled on
// nu height levels and nv angular steps (both >= 8). With mirror set, the
// symmetric copy below z = 0 is included, sharing the neck ring.
Mesh revolve_mesh(double m0, double r0, double height_cap, int nu, int nv, bool mirror = false);

void write_obj(const Mesh& mesh, std::ostream& os);

}  // namespace swcert
