#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "swcert/catenoid.hpp"

using namespace swcert;

TEST_CASE("slope -1 reproduces the catenary") {
    for (const double r0 : {1.0, 0.7, 3.2}) {
        const CatenoidProfile profile(-1.0, r0);
        for (int i = 0; i <= 50; ++i) {
            const double x = 1.001 + (20.0 - 1.001) * i / 50.0;
            const double expected = r0 * std::acosh(x);
            REQUIRE(std::abs(profile.height(r0 * x) - expected) <= 1e-8);
        }
    }
}

TEST_CASE("height at the neck is zero") {
    CHECK(height_profile(-2.0, 1.5, 1.5) == 0.0);
    CHECK(height_profile(-0.5, 2.0, 2.0) == 0.0);
}

TEST_CASE("domain and input errors") {
    CHECK_THROWS_AS(height_profile(-1.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(CatenoidProfile(0.5, 1.0), InvalidInput);
    CHECK_THROWS_AS(CatenoidProfile(-1.0, 0.0), InvalidInput);
}

TEST_CASE("total height for slope -2 against the independent oracle") {
    const double oracle = oracles::height_total_slope_minus2();
    CHECK(oracle == doctest::Approx(1.311029).epsilon(1e-6));
    CHECK(total_height(-2.0) == doctest::Approx(oracle).epsilon(0.0).scale(1.0));
    CHECK(std::abs(total_height(-2.0) - oracle) < 1e-6);
    // large sections approach the bound
    CHECK(height_profile(-2.0, 1.0, 1e6) == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("divergence classification") {
    CHECK_THROWS_AS(total_height(-1.0), DivergentIntegral);
    CHECK_THROWS_AS(total_height(-0.5), DivergentIntegral);
    CHECK_THROWS_AS(total_height(0.5), InvalidInput);
}

TEST_CASE("total height dominates -1/(1+m0)") {
    for (const double m0 : {-1.1, -1.5, -2.0, -3.0, -5.0}) {
        CHECK(total_height(m0) >= -1.0 / (1.0 + m0));
    }
    CHECK(total_height(-1.5) >= 2.0);
}

TEST_CASE("height surrogate") {
    CHECK(height_surrogate(-1.5) == 2.0);
    CHECK(height_surrogate(-0.5) == 1.0);
    CHECK(height_surrogate(-1.0) == 1.0);
    CHECK(height_surrogate(-2.0) == 1.0);
    CHECK_THROWS_AS(height_surrogate(0.0), InvalidInput);
    CHECK_THROWS_AS(height_surrogate(1.0), InvalidInput);
}

TEST_CASE("radius_at_height inverts the profile") {
    CHECK(radius_at_height(-1.7, 2.0, 0.0) == 2.0);
    // catenary inversion: height eps*r0 is reached at radius r0*cosh(eps)
    for (const double eps : {0.25, 0.5, 1.0}) {
        const double r0 = 0.6;
        CHECK(radius_at_height(-1.0, r0, eps * r0) ==
              doctest::Approx(r0 * std::cosh(eps)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(radius_at_height(-2.0, 1.0, 1.32), UnreachableHeight);
    CHECK_THROWS_AS(radius_at_height(-1.0, 1.0, -0.1), InvalidInput);
}

TEST_CASE("round trip radius -> height -> radius") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> slope(-3.0, -0.1);
    std::uniform_real_distribution<double> ratio(1.0, 50.0);
    for (int i = 0; i < 40; ++i) {
        const double m0 = slope(rng);
        const double r0 = 0.5 + i * 0.05;
        const CatenoidProfile profile(m0, r0);
        const double s = r0 * ratio(rng);
        const double h = profile.height(s);
        if (h == 0.0) continue;
        REQUIRE(profile.radius_at_height(h) == doctest::Approx(s).epsilon(1e-8));
    }
}

TEST_CASE("homothety covariance of the profile") {
    std::mt19937 rng(32);
    std::uniform_real_distribution<double> slope(-3.0, -0.2);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    std::uniform_real_distribution<double> ratio(1.0, 12.0);
    for (int i = 0; i < 25; ++i) {
        const double m0 = slope(rng);
        const double d = scale(rng);
        const double x = ratio(rng);
        const double h1 = height_profile(m0, 1.0, x);
        const double hd = height_profile(m0, d, d * x);
        REQUIRE(hd == doctest::Approx(d * h1).epsilon(1e-9));
    }
}

TEST_CASE("neck diagram endpoint follows the written ordering") {
    const NeckDiagram d1 = neck_diagram(-1.0, 1.0);
    CHECK_FALSE(d1.origin_included);
    CHECK(d1.neck_point[0] == -1.0);
    CHECK(d1.neck_point[1] == 1.0);
    const NeckDiagram d2 = neck_diagram(-2.0, 0.5);
    CHECK(d2.neck_point[0] == -4.0);
    CHECK(d2.neck_point[1] == 2.0);
    const NeckDiagram d3 = neck_diagram(-1.0, 2.0);
    CHECK(d3.neck_point[0] == -0.5);
    CHECK(d3.neck_point[1] == 0.5);
}

TEST_CASE("revolved mesh") {
    const Mesh mesh = revolve_mesh(-1.0, 1.0, 1.0, 16, 32);
    CHECK(mesh.vertices.size() == 16u * 32u);
    CHECK(mesh.faces.size() == 15u * 32u * 2u);
    // top ring radius equals cosh(1)
    double top_r = 0.0;
    for (const auto& v : mesh.vertices)
        if (v[2] == 1.0) top_r = std::max(top_r, std::hypot(v[0], v[1]));
    CHECK(top_r == doctest::Approx(std::cosh(1.0)).epsilon(1e-9));

    const Mesh capped = revolve_mesh(-2.0, 1.0, 1.0, 16, 32);
    double boundary = 0.0;
    for (const auto& v : capped.vertices)
        if (v[2] == 1.0) boundary = std::max(boundary, std::hypot(v[0], v[1]));
    CHECK(boundary == doctest::Approx(radius_at_height(-2.0, 1.0, 1.0)).epsilon(1e-9));

    CHECK_THROWS_AS(revolve_mesh(-1.0, 1.0, 1.0, 16, 4), InvalidInput);
    CHECK_THROWS_AS(revolve_mesh(-2.0, 1.0, 2.0, 16, 32), UnreachableHeight);

    const Mesh mirrored = revolve_mesh(-1.0, 1.0, 1.0, 8, 8, true);
    CHECK(mirrored.vertices.size() == 15u * 8u);  // shared neck ring
}

TEST_CASE("obj export is 1-based and complete") {
    const Mesh mesh = revolve_mesh(-1.0, 1.0, 0.5, 8, 8);
    std::ostringstream os;
    write_obj(mesh, os);
    const std::string text = os.str();
    CHECK(text.find("v ") == 0);
    CHECK(text.find("f 1 2 10") != std::string::npos);
}
