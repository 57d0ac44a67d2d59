#include "webcalc/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace webcalc {

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double signed_area2(const std::vector<Point>& poly) {
    double s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

bool point_in_polygon(Point p, const std::vector<Point>& poly) {
    bool inside = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x)
            inside = !inside;
    }
    return inside;
}

namespace {

double orient(Point a, Point b, Point c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

int sgn(double v) { return v > kGeomEps ? 1 : (v < -kGeomEps ? -1 : 0); }

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) - kGeomEps <= p.x && p.x <= std::max(a.x, b.x) + kGeomEps &&
           std::min(a.y, b.y) - kGeomEps <= p.y && p.y <= std::max(a.y, b.y) + kGeomEps;
}

}  // namespace

SegHit segment_hit(Point a, Point b, Point c, Point d) {
    int o1 = sgn(orient(a, b, c)), o2 = sgn(orient(a, b, d));
    int o3 = sgn(orient(c, d, a)), o4 = sgn(orient(c, d, b));
    if (o1 == 0 && o2 == 0) {
        // collinear: project onto the dominant axis
        bool use_x = std::abs(b.x - a.x) + std::abs(d.x - c.x) >= std::abs(b.y - a.y) + std::abs(d.y - c.y);
        auto key = [&](Point p) { return use_x ? p.x : p.y; };
        double lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
        double hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
        if (hi - lo > kGeomEps) return SegHit::Overlap;
        if (hi - lo >= -kGeomEps) return SegHit::Touch;
        return SegHit::None;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegHit::Touch;
    if (o1 == 0 && on_segment(a, b, c)) return SegHit::Touch;
    if (o2 == 0 && on_segment(a, b, d)) return SegHit::Touch;
    if (o3 == 0 && on_segment(c, d, a)) return SegHit::Touch;
    if (o4 == 0 && on_segment(c, d, b)) return SegHit::Touch;
    return SegHit::None;
}

}  // namespace webcalc
