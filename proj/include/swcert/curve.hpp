#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swcert/error.hpp"
#include "swcert/geometry.hpp"

namespace swcert {

// A closed strictly convex planar curve, reduced to the data the certification
// consumes: a dense sample set with curvature, the curvature extremes and the
// smallest enclosing circle.
//
// Immutable after construction; all operations are pure.
class ConvexCurve {
public:
    enum class Kind { Ellipse, Sampled };

    struct Sample {
        Vec2 point;
        double curvature;
    };

    // Ellipse with semi-axes A, B sampled at n parameter values. Curvature is
    // the analytic kappa(t) = A*B / (A^2 sin^2 t + B^2 cos^2 t)^(3/2); the
    // extremes are refined by golden-section search around the grid extremes.
    static ConvexCurve ellipse(double A, double B, int n = 1024, std::uint64_t seed = 0);

    // Closed curve from ordered boundary samples (either orientation).
    // Curvature is estimated per vertex from the circle through consecutive
    // sample triples, which is exact when the samples lie on a circle.
    static ConvexCurve sampled(std::span<const Vec2> points, std::uint64_t seed = 0);

    Kind kind() const { return kind_; }
    const std::vector<Sample>& samples() const { return samples_; }
    double max_curvature() const { return max_curvature_; }   // Lambda
    double min_curvature() const { return min_curvature_; }   // lambda
    double enclosing_radius() const { return enclosing_.radius; }  // omega
    Vec2 enclosing_center() const { return enclosing_.center; }

    // Lambda == lambda within 1e-9 relative; accepted but flagged since all
    // downstream conclusions are elementary for a circle.
    bool is_circle() const { return circle_; }

private:
    ConvexCurve() = default;
    void finalize(std::uint64_t seed);

    Kind kind_ = Kind::Sampled;
    std::vector<Sample> samples_;
    double max_curvature_ = 0.0;
    double min_curvature_ = 0.0;
    Circle enclosing_;
    bool circle_ = false;
};

// Radius of the smallest circle enclosing the curve.
inline double enclosing_radius(const ConvexCurve& curve) { return curve.enclosing_radius(); }

}  // namespace swcert
