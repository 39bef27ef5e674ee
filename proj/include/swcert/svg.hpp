#pragma once

#include <string>
#include <vector>

#include "swcert/geometry.hpp"

namespace swcert {

// Minimal deterministic SVG emitter. Geometry is given in math coordinates
// (y up); the emitted document flips y and fits the viewBox to the content
// with a 5% margin.
class SvgBuilder {
public:
    void polyline(const std::vector<Vec2>& pts, const std::string& stroke, double width);
    void circle(Vec2 center, double radius, const std::string& stroke, double width,
                bool dashed = false);
    void point(Vec2 p, const std::string& fill);

    std::string str() const;

private:
    void grow(Vec2 p, double pad = 0.0);

    std::vector<std::string> elements_;
    double min_x_ = 0.0, min_y_ = 0.0, max_x_ = 0.0, max_y_ = 0.0;
    bool empty_ = true;
};

}  // namespace swcert
