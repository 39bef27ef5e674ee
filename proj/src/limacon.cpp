#include "swcert/limacon.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "swcert/svg.hpp"

namespace swcert {

LimaconKind classify(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0)) throw InvalidInput("limacon parameters must be positive");
    if (a < c) return LimaconKind::Embedded;
    if (a == c) return LimaconKind::Cusp;
    return LimaconKind::TwoLoops;
}

bool near_cusp(double a, double c, double rel_tol) {
    return std::abs(a - c) <= rel_tol * std::max(a, c);
}

double radial(const Limacon& l, double theta) { return 2.0 * l.a * std::cos(theta) + 2.0 * l.c; }

Vec2 point_at(const Limacon& l, double theta) {
    const double rho = radial(l, theta);
    return {rho * std::cos(theta), rho * std::sin(theta)};
}

Vec2 near_point(const Limacon& l) { return {l.a - l.c, 0.0}; }

double dist_sq_from_near_point(const Limacon& l, double theta) {
    const double ct = std::cos(theta);
    const double d = l.a - l.c;
    return 4.0 * l.c * (l.a * ct + l.c) * (1.0 + ct) + d * d;
}

InnerLoopDisk inner_loop_disk(double a, double c) {
    if (!(a > 0.0) || !(c > 0.0)) throw InvalidInput("limacon parameters must be positive");
    if (!(a > c)) throw NoInnerLoop("no inner loop: requires a > c");
    const double d = a - c;
    return {{d, 0.0}, std::sqrt(d * d * d / a), d};
}

GraphDiskRadius graph_lemma_radius(double max_curvature, double min_curvature) {
    if (!(min_curvature > 0.0) || max_curvature < min_curvature)
        throw InvalidInput("curvature extremes must satisfy Lambda >= lambda > 0");
    const double upper = 1.0 / max_curvature;
    if (max_curvature == min_curvature) return {upper, upper};  // circle case
    const double a = 1.0 / min_curvature;
    return {inner_loop_disk(a, a - upper).inscribed_radius, upper};
}

std::string limacon_svg(const Limacon& l, int samples) {
    if (samples < 16) throw InvalidInput("limacon rendering needs at least 16 samples");
    SvgBuilder svg;
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples) + 1);
    for (int i = 0; i <= samples; ++i)
        pts.push_back(point_at(l, 2.0 * std::numbers::pi * i / samples));
    svg.polyline(pts, "#1f6fb2", 0.9);
    if (classify(l.a, l.c) == LimaconKind::TwoLoops) {
        const InnerLoopDisk disk = inner_loop_disk(l.a, l.c);
        svg.circle(disk.center, disk.inscribed_radius, "#2e9e4f", 0.7, true);
        svg.circle(disk.center, disk.containing_radius, "#c24040", 0.7, true);
        svg.point(disk.center, "#000000");
    }
    svg.point({0.0, 0.0}, "#000000");  // base point
    return svg.str();
}

}  // namespace swcert
