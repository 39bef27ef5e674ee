#include "swcert/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace swcert {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void SvgBuilder::grow(Vec2 p, double pad) {
    if (empty_) {
        min_x_ = p.x - pad;
        max_x_ = p.x + pad;
        min_y_ = p.y - pad;
        max_y_ = p.y + pad;
        empty_ = false;
        return;
    }
    min_x_ = std::min(min_x_, p.x - pad);
    max_x_ = std::max(max_x_, p.x + pad);
    min_y_ = std::min(min_y_, p.y - pad);
    max_y_ = std::max(max_y_, p.y + pad);
}

void SvgBuilder::polyline(const std::vector<Vec2>& pts, const std::string& stroke, double width) {
    if (pts.empty()) return;
    std::string d = "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                    fmt(width) + "\" points=\"";
    for (const Vec2& p : pts) {
        grow(p);
        d += fmt(p.x) + "," + fmt(-p.y) + " ";
    }
    d.back() = '"';
    d += "/>";
    elements_.push_back(std::move(d));
}

void SvgBuilder::circle(Vec2 center, double radius, const std::string& stroke, double width,
                        bool dashed) {
    grow(center, radius);
    std::string d = "<circle fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
                    fmt(width) + "\"";
    if (dashed) d += " stroke-dasharray=\"2 1.2\"";
    d += " cx=\"" + fmt(center.x) + "\" cy=\"" + fmt(-center.y) + "\" r=\"" + fmt(radius) + "\"/>";
    elements_.push_back(std::move(d));
}

void SvgBuilder::point(Vec2 p, const std::string& fill) {
    grow(p);
    elements_.push_back("<circle fill=\"" + fill + "\" cx=\"" + fmt(p.x) + "\" cy=\"" +
                        fmt(-p.y) + "\" r=\"0.6%\"/>");
}

std::string SvgBuilder::str() const {
    const double w = empty_ ? 1.0 : max_x_ - min_x_;
    const double h = empty_ ? 1.0 : max_y_ - min_y_;
    const double margin = 0.05 * std::max({w, h, 1e-9});
    const double vx = min_x_ - margin;
    const double vy = -max_y_ - margin;  // y flip
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(vx) + " " +
                      fmt(vy) + " " + fmt(w + 2 * margin) + " " + fmt(h + 2 * margin) + "\">\n";
    for (const std::string& e : elements_) {
        out += "  ";
        out += e;
        out += "\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace swcert
