#include "swcert/catenoid.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "swcert/numerics.hpp"

namespace swcert {

namespace {

constexpr double kQuadTol = 1e-13;

// Integral over [1, x] of dw / sqrt(w^(-2 m0) - 1) with w = 1 + u^2:
// the integrand 2u / sqrt((1 + u^2)^(-2 m0) - 1) is bounded, with limit
// 2 / sqrt(-2 m0) at u = 0.
double singular_piece(double m0, double x) {
    if (x <= 1.0) return 0.0;
    const double p = -2.0 * m0;
    const double limit0 = 2.0 / std::sqrt(p);
    const auto f = [p, limit0](double u) {
        const double w = 1.0 + u * u;
        const double q = std::pow(w, p) - 1.0;
        if (q <= 0.0) return limit0;  // u == 0
        return 2.0 * u / std::sqrt(q);
    };
    return integrate(f, 0.0, std::sqrt(x - 1.0), kQuadTol);
}

// Integral over [x, inf) of dw / sqrt(w^(-2 m0) - 1) for m0 < -1, x >= 2.
// With v = w^(1 + m0) this becomes a proper integral:
//   1/(-1 - m0) * integral over [0, x^(1+m0)] of dv / sqrt(1 - v^q),
// q = 2 m0 / (1 + m0) > 2, and v^q <= x^(2 m0) <= 1/4 on the domain.
double tail_piece(double m0, double x) {
    const double q = 2.0 * m0 / (1.0 + m0);
    const double upper = std::pow(x, 1.0 + m0);
    const auto f = [q](double v) { return 1.0 / std::sqrt(1.0 - std::pow(v, q)); };
    return integrate(f, 0.0, upper, kQuadTol) / (-1.0 - m0);
}

// Integral over [x0, x1] of dw / sqrt(w^(-2 m0) - 1) for 2 <= x0 <= x1,
// integrated in y = log(w) to keep wide spans cheap.
double smooth_piece(double m0, double x0, double x1) {
    const double p = -2.0 * m0;
    const auto f = [p](double y) {
        const double w = std::exp(y);
        return w / std::sqrt(std::pow(w, p) - 1.0);
    };
    return integrate(f, std::log(x0), std::log(x1), kQuadTol);
}

}  // namespace

double total_height(double m0) {
    if (!(m0 < 0.0)) throw InvalidInput("catenoid slope m0 must be negative");
    if (m0 >= -1.0)
        throw DivergentIntegral("total height diverges for -1 <= m0 < 0");
    return singular_piece(m0, 2.0) + tail_piece(m0, 2.0);
}

double height_surrogate(double m0) {
    if (!(m0 < 0.0)) throw InvalidInput("catenoid slope m0 must be negative");
    return m0 < -1.0 ? -1.0 / (1.0 + m0) : 1.0;
}

CatenoidProfile::CatenoidProfile(double m0, double r0) : m0_(m0), r0_(r0) {
    if (!(m0 < 0.0)) throw InvalidInput("catenoid slope m0 must be negative");
    if (!(r0 > 0.0)) throw InvalidInput("neck radius must be positive");
    prefix_to_two_ = singular_piece(m0_, 2.0);
    if (m0_ < -1.0) {
        tail_from_two_ = tail_piece(m0_, 2.0);
        total_ = prefix_to_two_ + tail_from_two_;
    }
}

double CatenoidProfile::height(double s) const {
    if (s < r0_) throw DomainError("section radius below the neck radius");
    const double x = s / r0_;
    if (x <= 2.0) return r0_ * singular_piece(m0_, x);
    if (m0_ < -1.0) return r0_ * (prefix_to_two_ + (tail_from_two_ - tail_piece(m0_, x)));
    return r0_ * (prefix_to_two_ + smooth_piece(m0_, 2.0, x));
}

std::optional<double> CatenoidProfile::max_height() const {
    if (m0_ < -1.0) return r0_ * total_;
    return std::nullopt;
}

double CatenoidProfile::radius_at_height(double target_h) const {
    if (target_h < 0.0) throw InvalidInput("target height must be nonnegative");
    if (target_h == 0.0) return r0_;
    if (m0_ < -1.0 && target_h >= r0_ * total_)
        throw UnreachableHeight("target height " + std::to_string(target_h) +
                                " is not below the height bound " + std::to_string(r0_ * total_));
    double hi = 2.0 * r0_;
    while (height(hi) < target_h) {
        hi *= 2.0;
        if (hi > 1e18 * r0_)
            throw UnreachableHeight("target height not reached within bracketing range");
    }
    return solve_increasing([this](double s) { return height(s); }, r0_, hi, target_h, 1e-10);
}

double height_profile(double m0, double r0, double s) {
    return CatenoidProfile(m0, r0).height(s);
}

double radius_at_height(double m0, double r0, double target_h) {
    return CatenoidProfile(m0, r0).radius_at_height(target_h);
}

NeckDiagram neck_diagram(double m0, double r0) {
    if (!(m0 < 0.0)) throw InvalidInput("catenoid slope m0 must be negative");
    if (!(r0 > 0.0)) throw InvalidInput("neck radius must be positive");
    NeckDiagram d;
    d.neck_point = {m0 / r0, 1.0 / r0};
    return d;
}

Mesh revolve_mesh(double m0, double r0, double height_cap, int nu, int nv, bool mirror) {
    if (nu < 8 || nv < 8) throw InvalidInput("mesh resolution requires nu, nv >= 8");
    if (!(height_cap > 0.0)) throw InvalidInput("height cap must be positive");
    const CatenoidProfile profile(m0, r0);
    if (auto bound = profile.max_height(); bound && height_cap >= *bound)
        throw UnreachableHeight("height cap exceeds the total height bound");

    std::vector<double> levels;
    if (mirror)
        for (int j = nu - 1; j >= 1; --j) levels.push_back(-height_cap * j / (nu - 1));
    for (int j = 0; j < nu; ++j) levels.push_back(height_cap * j / (nu - 1));

    Mesh mesh;
    const int rings = static_cast<int>(levels.size());
    mesh.vertices.reserve(static_cast<std::size_t>(rings) * static_cast<std::size_t>(nv));
    for (const double z : levels) {
        const double s = profile.radius_at_height(std::abs(z));
        for (int i = 0; i < nv; ++i) {
            const double phi = 2.0 * std::numbers::pi * i / nv;
            mesh.vertices.push_back({s * std::cos(phi), s * std::sin(phi), z});
        }
    }
    for (int j = 0; j + 1 < rings; ++j) {
        for (int i = 0; i < nv; ++i) {
            const int i1 = (i + 1) % nv;
            const int a = j * nv + i;
            const int b = j * nv + i1;
            const int c = (j + 1) * nv + i;
            const int d = (j + 1) * nv + i1;
            mesh.faces.push_back({a, b, d});
            mesh.faces.push_back({a, d, c});
        }
    }
    return mesh;
}

void write_obj(const Mesh& mesh, std::ostream& os) {
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.9g %.9g %.9g\n", v[0], v[1], v[2]);
        os << buf;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(buf, sizeof buf, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        os << buf;
    }
}

}  // namespace swcert
