#pragma once

#include <vector>

namespace webcalc {

struct Point {
    double x = 0;
    double y = 0;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

inline constexpr double kGeomEps = 1e-9;

double dist(Point a, Point b);
// Twice the signed area of the closed polygon; positive when counterclockwise.
double signed_area2(const std::vector<Point>& poly);
bool point_in_polygon(Point p, const std::vector<Point>& poly);

enum class SegHit { None, Touch, Overlap };
// Touch covers proper crossings and contacts at a single point.
SegHit segment_hit(Point a, Point b, Point c, Point d);

}  // namespace webcalc
