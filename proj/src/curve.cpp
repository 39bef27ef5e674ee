#include "swcert/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swcert/numerics.hpp"

namespace swcert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ellipse_curvature(double A, double B, double t) {
    const double s = std::sin(t);
    const double c = std::cos(t);
    const double q = A * A * s * s + B * B * c * c;
    return A * B / (q * std::sqrt(q));
}

}  // namespace

ConvexCurve ConvexCurve::ellipse(double A, double B, int n, std::uint64_t seed) {
    if (!(A > 0.0) || !(B > 0.0)) throw InvalidInput("ellipse semi-axes must be positive");
    if (n < 64) throw InvalidInput("ellipse sampling needs at least 64 points");

    ConvexCurve curve;
    curve.kind_ = Kind::Ellipse;
    curve.samples_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        curve.samples_.push_back({{A * std::cos(t), B * std::sin(t)}, ellipse_curvature(A, B, t)});
    }

    // grid extremes, then golden-section refinement on the analytic curvature
    int imax = 0, imin = 0;
    for (int i = 1; i < n; ++i) {
        if (curve.samples_[static_cast<std::size_t>(i)].curvature >
            curve.samples_[static_cast<std::size_t>(imax)].curvature)
            imax = i;
        if (curve.samples_[static_cast<std::size_t>(i)].curvature <
            curve.samples_[static_cast<std::size_t>(imin)].curvature)
            imin = i;
    }
    const double h = kTwoPi / n;
    const auto kappa = [&](double t) { return ellipse_curvature(A, B, t); };
    const double tmax = golden_max(kappa, kTwoPi * imax / n - h, kTwoPi * imax / n + h);
    const double tmin = golden_min(kappa, kTwoPi * imin / n - h, kTwoPi * imin / n + h);
    curve.max_curvature_ = std::max(kappa(tmax), curve.samples_[static_cast<std::size_t>(imax)].curvature);
    curve.min_curvature_ = std::min(kappa(tmin), curve.samples_[static_cast<std::size_t>(imin)].curvature);

    curve.finalize(seed);
    return curve;
}

ConvexCurve ConvexCurve::sampled(std::span<const Vec2> points, std::uint64_t seed) {
    const std::size_t n = points.size();
    if (n < 8) throw InvalidInput("sampled curve needs at least 8 points");

    std::vector<Vec2> p(points.begin(), points.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (dist_sq(p[i], p[(i + 1) % n]) == 0.0)
            throw InvalidInput("repeated point at index " + std::to_string(i));
    }

    // normalize to counterclockwise traversal
    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) area2 += cross(p[i], p[(i + 1) % n]);
    if (area2 < 0.0) std::reverse(p.begin(), p.end());

    ConvexCurve curve;
    curve.kind_ = Kind::Sampled;
    curve.samples_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 prev = p[(i + n - 1) % n];
        const Vec2 next = p[(i + 1) % n];
        const double k = circumcircle_curvature(prev, p[i], next);
        if (!(k > 0.0))
            throw NotStrictlyConvex("estimated curvature is not positive at sample " +
                                    std::to_string(i));
        curve.samples_.push_back({p[i], k});
    }

    // A closed polygon with all-positive turns is simple iff the edge
    // directions wind exactly once.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = p[(i + 1) % n] - p[i];
        const Vec2 e1 = p[(i + 2) % n] - p[(i + 1) % n];
        const double turn = std::atan2(cross(e0, e1), dot(e0, e1));
        if (!(turn > 0.0))
            throw NotStrictlyConvex("non-convex turn at sample " + std::to_string((i + 1) % n));
        turning += turn;
    }
    if (std::abs(turning - kTwoPi) > 1e-6)
        throw InvalidCurve("samples wind " + std::to_string(turning / kTwoPi) +
                           " times; self-intersecting input");

    auto [mn, mx] = std::minmax_element(
        curve.samples_.begin(), curve.samples_.end(),
        [](const Sample& a, const Sample& b) { return a.curvature < b.curvature; });
    curve.min_curvature_ = mn->curvature;
    curve.max_curvature_ = mx->curvature;

    curve.finalize(seed);
    return curve;
}

void ConvexCurve::finalize(std::uint64_t seed) {
    std::vector<Vec2> pts;
    pts.reserve(samples_.size());
    for (const Sample& s : samples_) pts.push_back(s.point);
    enclosing_ = min_enclosing_circle(pts, seed);

    circle_ = (max_curvature_ - min_curvature_) <= 1e-9 * max_curvature_;

    // smallest-enclosing-circle radius must sit between the osculating radii
    const double tol = 1e-6 / min_curvature_;
    if (enclosing_.radius < 1.0 / max_curvature_ - tol ||
        enclosing_.radius > 1.0 / min_curvature_ + tol)
        throw InvalidCurve("enclosing radius is inconsistent with the curvature extremes");
}

}  // namespace swcert
