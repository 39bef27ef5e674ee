#include "swcert/geometry.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace swcert {

Circle diameter_circle(Vec2 a, Vec2 b) {
    const Vec2 c{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    return {c, 0.5 * dist(a, b)};
}

Circle circumcircle(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a;
    const Vec2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double scale = std::max({norm(ab), norm(ac), dist(b, c)});
    if (std::abs(d) <= 1e-14 * scale * scale) {
        // collinear: the widest pair bounds all three
        Circle best = diameter_circle(a, b);
        for (const Circle& cand : {diameter_circle(a, c), diameter_circle(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const Vec2 center{a.x + (ac.y * ab2 - ab.y * ac2) / d,
                      a.y + (ab.x * ac2 - ac.x * ab2) / d};
    // averaging tames the rounding of the three (equal) distances
    const double r = (dist(center, a) + dist(center, b) + dist(center, c)) / 3.0;
    return {center, r};
}

double circumcircle_curvature(Vec2 a, Vec2 b, Vec2 c) {
    const double area2 = cross(b - a, c - b);  // twice the signed area
    const double la = dist(a, b), lb = dist(b, c), lc = dist(a, c);
    const double denom = la * lb * lc;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return 2.0 * area2 / denom;
}

Circle min_enclosing_circle(std::span<const Vec2> points, std::uint64_t seed) {
    if (points.empty()) return {};
    if (points.size() == 1) return {points[0], 0.0};

    std::vector<Vec2> p(points.begin(), points.end());
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);

    Circle d = diameter_circle(p[0], p[1]);
    for (std::size_t i = 2; i < p.size(); ++i) {
        if (d.contains(p[i])) continue;
        // p[i] lies on the boundary of the new circle
        d = diameter_circle(p[0], p[i]);
        for (std::size_t j = 1; j < i; ++j) {
            if (d.contains(p[j])) continue;
            d = diameter_circle(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (d.contains(p[k])) continue;
                d = circumcircle(p[i], p[j], p[k]);
            }
        }
    }
    return d;
}

}  // namespace swcert
