#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "swcert/limacon.hpp"

using namespace swcert;

TEST_CASE("loop classification") {
    CHECK(classify(1.0, 2.0) == LimaconKind::Embedded);
    CHECK(classify(1.0, 1.0) == LimaconKind::Cusp);
    CHECK(classify(5.0, 2.0) == LimaconKind::TwoLoops);
    CHECK_THROWS_AS(classify(0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(classify(1.0, -1.0), InvalidInput);
    CHECK(near_cusp(1.0, 1.0 + 1e-14));
    CHECK_FALSE(near_cusp(1.0, 1.0 + 1e-9));
}

TEST_CASE("radial parametrization") {
    const Limacon l{5.0, 2.0};
    CHECK(radial(l, 0.0) == doctest::Approx(14.0));
    CHECK(radial(l, std::numbers::pi) == doctest::Approx(-6.0));
    CHECK(radial(Limacon{1.0, 2.0}, std::numbers::pi / 2.0) == doctest::Approx(4.0));
}

TEST_CASE("squared distance from the near point") {
    const Limacon l{5.0, 2.0};
    CHECK(dist_sq_from_near_point(l, std::numbers::pi) == doctest::Approx(9.0));
    CHECK(dist_sq_from_near_point(l, 0.0) == doctest::Approx(121.0));
    // the formula is the actual squared distance to the parametrized point
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 50; ++i) {
        const double theta = angle(rng);
        CHECK(dist_sq_from_near_point(l, theta) ==
              doctest::Approx(dist_sq(point_at(l, theta), near_point(l))).epsilon(1e-12));
    }
}

TEST_CASE("brute-force minimum of the distance function") {
    std::vector<double> cos_table(100001);
    for (std::size_t i = 0; i < cos_table.size(); ++i)
        cos_table[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(cos_table.size() - 1));
    const double min_phi = oracles::brute_phi_min(5.0, 2.0, cos_table);
    CHECK(min_phi == doctest::Approx(27.0 / 5.0).epsilon(1e-10));
}

TEST_CASE("inner loop disks") {
    const InnerLoopDisk d = inner_loop_disk(5.0, 2.0);
    CHECK(d.center.x == doctest::Approx(3.0));
    CHECK(d.center.y == 0.0);
    CHECK(d.inscribed_radius == doctest::Approx(std::sqrt(27.0 / 5.0)).epsilon(1e-12));
    CHECK(d.inscribed_radius == doctest::Approx(2.323790).epsilon(1e-6));
    CHECK(d.containing_radius == doctest::Approx(3.0));

    const InnerLoopDisk d2 = inner_loop_disk(2.0, 1.0);
    CHECK(d2.inscribed_radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(d2.containing_radius == doctest::Approx(1.0));

    CHECK_THROWS_AS(inner_loop_disk(1.0, 1.0), NoInnerLoop);
    CHECK_THROWS_AS(inner_loop_disk(1.0, 2.0), NoInnerLoop);
}

TEST_CASE("disk radii against the brute-force oracle") {
    std::vector<double> cos_table(1 << 17);
    for (std::size_t i = 0; i < cos_table.size(); ++i)
        cos_table[i] = std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(cos_table.size() - 1));
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> a_draw(0.5, 5.0);
    std::uniform_real_distribution<double> ratio(0.1, 0.9);
    for (int trial = 0; trial < 40; ++trial) {
        const double a = a_draw(rng);
        const double c = a * ratio(rng);
        const InnerLoopDisk d = inner_loop_disk(a, c);
        const double min_phi = oracles::brute_phi_min(a, c, cos_table);
        const double max_phi = oracles::brute_phi_max_restricted(a, c, 1 << 14);
        REQUIRE(min_phi ==
                doctest::Approx(d.inscribed_radius * d.inscribed_radius).epsilon(1e-8));
        REQUIRE(max_phi ==
                doctest::Approx(d.containing_radius * d.containing_radius).epsilon(1e-8));
        REQUIRE(d.inscribed_radius < d.containing_radius);
    }
}

TEST_CASE("inscribed radius is monotone in a and c") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> a_draw(0.5, 5.0);
    std::uniform_real_distribution<double> ratio(0.1, 0.9);
    std::uniform_real_distribution<double> bump(1e-6, 1e-2);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = a_draw(rng);
        const double c = a * ratio(rng);
        const double r = inner_loop_disk(a, c).inscribed_radius;
        CHECK(inner_loop_disk(a + bump(rng), c).inscribed_radius > r);
        CHECK(inner_loop_disk(a, c - std::min(bump(rng), 0.5 * c)).inscribed_radius > r);
    }
}

TEST_CASE("graph lemma radius bounds") {
    const GraphDiskRadius circle_case = graph_lemma_radius(1.0, 1.0);
    CHECK(circle_case.lower == 1.0);
    CHECK(circle_case.upper == 1.0);

    const GraphDiskRadius r = graph_lemma_radius(2.0, 0.25);
    CHECK(r.lower == doctest::Approx(0.176777).epsilon(1e-6));
    CHECK(r.upper == doctest::Approx(0.5));
    // identical formula path as the limacon with a = 1/lambda, c = 1/lambda - 1/Lambda
    CHECK(r.lower == inner_loop_disk(4.0, 3.5).inscribed_radius);

    CHECK_THROWS_AS(graph_lemma_radius(0.25, 2.0), InvalidInput);
    CHECK_THROWS_AS(graph_lemma_radius(1.0, 0.0), InvalidInput);
}

TEST_CASE("svg output contains the loop circles only in the two-loop regime") {
    const std::string two_loops = limacon_svg(Limacon{5.0, 2.0});
    CHECK(two_loops.find("<circle fill=\"none\"") != std::string::npos);
    const std::string embedded = limacon_svg(Limacon{1.0, 2.0});
    CHECK(embedded.find("<circle fill=\"none\"") == std::string::npos);
    CHECK(embedded.find("<polyline") != std::string::npos);
}
