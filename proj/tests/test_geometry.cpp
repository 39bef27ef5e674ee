#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "swcert/geometry.hpp"

using swcert::Circle;
using swcert::min_enclosing_circle;
using swcert::Vec2;

TEST_CASE("circle samples") {
    std::vector<Vec2> pts;
    for (int i = 0; i < 128; ++i) {
        const double t = 2.0 * std::numbers::pi * i / 128;
        pts.push_back({std::cos(t), std::sin(t)});
    }
    const Circle c = min_enclosing_circle(pts);
    CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.center.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.center.y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("obtuse triangle: diameter of the longest side") {
    const std::vector<Vec2> pts{{0.0, 0.0}, {4.0, 0.0}, {1.0, 0.5}};
    const Circle c = min_enclosing_circle(pts);
    CHECK(c.radius == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.center.x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("agrees with the exhaustive oracle on small random sets") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::uniform_int_distribution<int> count(2, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec2> pts;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
        const Circle fast = min_enclosing_circle(pts, static_cast<std::uint64_t>(trial));
        const Circle slow = oracles::exhaustive_enclosing_circle(pts);
        REQUIRE(fast.radius == doctest::Approx(slow.radius).epsilon(1e-9));
        for (const Vec2& p : pts) REQUIRE(fast.contains(p, 1e-10));
    }
}

TEST_CASE("seed changes the shuffle, not the answer") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(0.0, 5.0);
    std::vector<Vec2> pts;
    for (int i = 0; i < 64; ++i) pts.push_back({coord(rng), coord(rng)});
    const Circle a = min_enclosing_circle(pts, 0);
    const Circle b = min_enclosing_circle(pts, 12345);
    CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-12));
}
