#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "swcert/curve.hpp"

using swcert::ConvexCurve;
using swcert::Vec2;

namespace {

std::vector<Vec2> circle_points(int n, double r = 1.0, Vec2 center = {0.0, 0.0}) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n;
        pts.push_back({center.x + r * std::cos(t), center.y + r * std::sin(t)});
    }
    return pts;
}

std::vector<Vec2> square_boundary(int per_side) {
    std::vector<Vec2> pts;
    for (int i = 0; i < per_side; ++i) pts.push_back({static_cast<double>(i) / per_side, 0.0});
    for (int i = 0; i < per_side; ++i) pts.push_back({1.0, static_cast<double>(i) / per_side});
    for (int i = 0; i < per_side; ++i) pts.push_back({1.0 - static_cast<double>(i) / per_side, 1.0});
    for (int i = 0; i < per_side; ++i) pts.push_back({0.0, 1.0 - static_cast<double>(i) / per_side});
    return pts;
}

}  // namespace

TEST_CASE("unit circle ellipse") {
    const ConvexCurve c = ConvexCurve::ellipse(1.0, 1.0, 256);
    CHECK(c.max_curvature() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.min_curvature() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.enclosing_radius() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.is_circle());
}

TEST_CASE("ellipse (1,2) curvature extremes and enclosing circle") {
    const ConvexCurve c = ConvexCurve::ellipse(1.0, 2.0, 1024);
    CHECK(c.max_curvature() == 2.0);   // B / A^2, attained on the grid at t = pi/2
    CHECK(c.min_curvature() == 0.25);  // A / B^2, attained at t = 0
    CHECK(c.enclosing_radius() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(c.is_circle());
}

TEST_CASE("ellipse input validation") {
    CHECK_THROWS_AS(ConvexCurve::ellipse(-1.0, 2.0), swcert::InvalidInput);
    CHECK_THROWS_AS(ConvexCurve::ellipse(1.0, 0.0), swcert::InvalidInput);
    CHECK_THROWS_AS(ConvexCurve::ellipse(1.0, 2.0, 32), swcert::InvalidInput);
}

TEST_CASE("sampled circle matches the analytic curvature") {
    const ConvexCurve c = ConvexCurve::sampled(circle_points(256));
    CHECK(c.max_curvature() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.min_curvature() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.enclosing_radius() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sampled ellipse matches make_ellipse within 1e-3") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 512; ++i) {
        const double t = 2.0 * std::numbers::pi * i / 512;
        pts.push_back({std::cos(t), 2.0 * std::sin(t)});
    }
    const ConvexCurve c = ConvexCurve::sampled(pts);
    CHECK(c.max_curvature() == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(c.min_curvature() == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(c.enclosing_radius() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("square boundary samples are rejected as not strictly convex") {
    CHECK_THROWS_AS(ConvexCurve::sampled(square_boundary(4)), swcert::NotStrictlyConvex);
}

TEST_CASE("too few points") {
    const std::vector<Vec2> corners{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(ConvexCurve::sampled(corners), swcert::InvalidInput);
}

TEST_CASE("doubly wound input is rejected as self-intersecting") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 64; ++i) {
        const double t = 4.0 * std::numbers::pi * i / 64;  // two revolutions
        pts.push_back({std::cos(t) + 1e-3 * i, std::sin(t)});
    }
    CHECK_THROWS_AS(ConvexCurve::sampled(pts), swcert::InvalidCurve);
}

TEST_CASE("clockwise input is normalized") {
    std::vector<Vec2> pts = circle_points(64);
    std::reverse(pts.begin(), pts.end());
    const ConvexCurve c = ConvexCurve::sampled(pts);
    CHECK(c.min_curvature() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("osculating-radius sandwich 1/Lambda <= omega <= 1/lambda") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> axis(0.3, 3.0);
    for (int i = 0; i < 25; ++i) {
        const ConvexCurve c = ConvexCurve::ellipse(axis(rng), axis(rng), 512);
        const double tol = 1e-6 / c.min_curvature();
        CHECK(1.0 / c.max_curvature() <= c.enclosing_radius() + tol);
        CHECK(c.enclosing_radius() <= 1.0 / c.min_curvature() + tol);
    }
}

TEST_CASE("scaling covariance") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> axis(0.5, 2.5);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int i = 0; i < 10; ++i) {
        const double A = axis(rng), B = axis(rng), s = scale(rng);
        const ConvexCurve base = ConvexCurve::ellipse(A, B, 256);
        const ConvexCurve scaled = ConvexCurve::ellipse(s * A, s * B, 256);
        CHECK(scaled.enclosing_radius() ==
              doctest::Approx(s * base.enclosing_radius()).epsilon(1e-9));
        CHECK(scaled.max_curvature() == doctest::Approx(base.max_curvature() / s).epsilon(1e-9));
        CHECK(scaled.min_curvature() == doctest::Approx(base.min_curvature() / s).epsilon(1e-9));
    }
}
