#pragma once

#include <string>

#include "swcert/error.hpp"
#include "swcert/geometry.hpp"

namespace swcert {

// Limacon of Pascal: the reflections of the base point (at the origin) across
// the tangent lines of the circle of radius c centered at (a, 0). In radial
// coordinates rho(theta) = 2a cos(theta) + 2c.
struct Limacon {
    double a;  // distance from base point to circle center
    double c;  // circle radius

    Limacon(double a_, double c_) : a(a_), c(c_) {
        if (!(a > 0.0) || !(c > 0.0)) throw InvalidInput("limacon parameters must be positive");
    }
};

enum class LimaconKind { Embedded, Cusp, TwoLoops };

// Embedded iff a < c, cusp at the base point iff a == c (exact input
// equality), two nested loops iff a > c.
LimaconKind classify(double a, double c);

// |a - c| <= rel_tol * max(a, c): the classification sits numerically on the
// cusp boundary and is best treated with suspicion.
bool near_cusp(double a, double c, double rel_tol = 1e-12);

// Signed radial coordinate 2a cos(theta) + 2c.
double radial(const Limacon& l, double theta);

Vec2 point_at(const Limacon& l, double theta);

// The circle point nearest the base point, (a - c, 0); center of the
// inner-loop disks when a > c.
Vec2 near_point(const Limacon& l);

// Squared distance from near_point to the limacon point at theta:
// 4c (a cos(theta) + c)(1 + cos(theta)) + (a - c)^2.
double dist_sq_from_near_point(const Limacon& l, double theta);

struct InnerLoopDisk {
    Vec2 center;               // (a - c, 0)
    double inscribed_radius;   // sqrt((a - c)^3 / a), inside the smaller loop
    double containing_radius;  // a - c, contains the smaller loop
};

// Requires a > c > 0; throws NoInnerLoop otherwise.
InnerLoopDisk inner_loop_disk(double a, double c);

struct GraphDiskRadius {
    double lower;  // sqrt(lambda / Lambda^3), the guaranteed value
    double upper;  // 1 / Lambda
};

// Bounds on the radius of the horizontal disk over which an admissible
// surface spanning the curve is a vertical graph. Downstream code uses the
// lower bound as the deterministic choice r(Gamma). The lower bound is the
// inscribed inner-loop radius of the limacon with a = 1/lambda,
// c = 1/lambda - 1/Lambda (identical formula path).
GraphDiskRadius graph_lemma_radius(double max_curvature, double min_curvature);

// Polyline rendering with the inner-loop inscribed/containing circles
// overlaid when the limacon has two loops.
std::string limacon_svg(const Limacon& l, int samples = 2048);

}  // namespace swcert
