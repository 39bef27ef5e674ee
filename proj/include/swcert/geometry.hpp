#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace swcert {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline double dist_sq(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

struct Circle {
    Vec2 center;
    double radius = -1.0;  // negative means "empty"

    bool contains(Vec2 p, double slack = 1e-12) const {
        if (radius < 0.0) return false;
        const double r = radius * (1.0 + slack) + slack;
        return dist_sq(p, center) <= r * r;
    }
};

// Circle with segment ab as diameter.
Circle diameter_circle(Vec2 a, Vec2 b);

// Circumscribed circle of a nondegenerate triangle. Falls back to the widest
// diameter circle when the points are (numerically) collinear.
Circle circumcircle(Vec2 a, Vec2 b, Vec2 c);

// Smallest circle enclosing all points, by the randomized incremental
// algorithm (expected O(n) after the seeded shuffle).
Circle min_enclosing_circle(std::span<const Vec2> points, std::uint64_t seed = 0);

// Signed curvature of the circle through three consecutive samples; positive
// for a left turn. Exact for points lying on a common circle.
double circumcircle_curvature(Vec2 a, Vec2 b, Vec2 c);

}  // namespace swcert
