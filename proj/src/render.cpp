#include "webcalc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace webcalc {

namespace {

const char* const kPalette[8] = {"#1f5fbf", "#d62728", "#2ca02c", "#ff7f0e",
                                 "#8e44ad", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

struct Frame {
    double x0, y0, scale, pad;
    double X(double x) const { return (x - x0) * scale + pad; }
    double Y(double y) const { return (y0 - y) * scale + pad; }
};

std::string path_d(const Frame& f, const std::vector<Point>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i)
        d += (i ? " L " : "M ") + num(f.X(pts[i].x)) + " " + num(f.Y(pts[i].y));
    return d;
}

// Point at half the arc length, with the unit direction there.
std::pair<Point, Point> midpoint(const std::vector<Point>& pts) {
    double total = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
    double left = total / 2;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double dx = pts[i].x - pts[i - 1].x, dy = pts[i].y - pts[i - 1].y;
        double len = std::hypot(dx, dy);
        if (len == 0) continue;
        if (left <= len || i + 1 == pts.size()) {
            double t = std::min(left / len, 1.0);
            return {{pts[i - 1].x + t * dx, pts[i - 1].y + t * dy}, {dx / len, dy / len}};
        }
        left -= len;
    }
    return {pts.front(), {1, 0}};
}

// Shifts a polyline sideways by d (left of travel is positive).
std::vector<Point> offset(const std::vector<Point>& pts, double d) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& a = pts[i == 0 ? 0 : i - 1];
        const Point& b = pts[i + 1 < pts.size() ? i + 1 : i];
        double dx = b.x - a.x, dy = b.y - a.y, len = std::hypot(dx, dy);
        if (len == 0) {
            out.push_back(pts[i]);
            continue;
        }
        out.push_back({pts[i].x - d * dy / len, pts[i].y + d * dx / len});
    }
    return out;
}

}  // namespace

const char* strand_color(int c) { return kPalette[static_cast<std::size_t>(((c - 1) % 8 + 8) % 8)]; }

std::string render_svg(const WebGraph& g, const SvgOptions& opt) {
    if (opt.flow && opt.stranding == nullptr) throw std::invalid_argument("flow overlay needs a stranding");
    const Topology t = topology(g);
    std::vector<std::vector<Point>> lines;
    for (std::size_t e = 0; e < g.edges.size(); ++e) lines.push_back(edge_polyline(g, t, static_cast<int>(e)));

    double xmin = 0, xmax = 1, ymin = -1;
    bool first = true;
    auto see = [&](const Point& p) {
        if (first) xmin = xmax = p.x, first = false;
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
    };
    for (const Point& p : t.pos) see(p);
    for (const auto& l : lines)
        for (const Point& p : l) see(p);
    xmin -= 0.5;
    xmax += 0.5;
    const Frame f{xmin, 0.0, opt.scale, 30.0};
    const double width = (xmax - xmin) * opt.scale + 2 * f.pad;
    const double height = -ymin * opt.scale + 2 * f.pad;

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << num(f.X(xmin)) << "\" y1=\"" << num(f.Y(0)) << "\" x2=\"" << num(f.X(xmax)) << "\" y2=\""
      << num(f.Y(0)) << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";

    if (opt.flow) {
        std::set<int> on;
        for (const FlowComponent& c : flows(g, *opt.stranding, opt.flow->first, opt.flow->second))
            for (const auto& [e, fwd] : c.traversals) on.insert(e);
        s << "<g fill=\"none\" stroke=\"#f4d03f\" stroke-opacity=\"0.6\" stroke-width=\"14\" stroke-linecap=\"round\">\n";
        for (int e : on) s << "<path d=\"" << path_d(f, lines[static_cast<std::size_t>(e)]) << "\"/>\n";
        s << "</g>\n";
    }

    s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (const auto& l : lines) s << "<path d=\"" << path_d(f, l) << "\"/>\n";
    s << "</g>\n";

    if (opt.stranding) {
        s << "<g fill=\"none\" stroke-width=\"1.5\">\n";
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto strands = binary_to_strands(opt.stranding->labels[e]);
            int k = 0;
            for (const auto& [c, role] : strands) {
                double d = 0.08 * (k - (static_cast<int>(strands.size()) - 1) / 2.0);
                ++k;
                s << "<path d=\"" << path_d(f, offset(lines[e], d + 0.1)) << "\" stroke=\"" << strand_color(c) << "\"";
                if (role == Role::Against) s << " stroke-dasharray=\"4 3\"";
                s << "/>\n";
            }
        }
        s << "</g>\n";
    }

    s << "<g fill=\"black\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [p, dir] = midpoint(lines[e]);
        const double ax = f.X(p.x), ay = f.Y(p.y), ux = dir.x, uy = -dir.y;
        const double tipx = ax + 6 * ux, tipy = ay + 6 * uy;
        const double bx = ax - 4 * ux, by = ay - 4 * uy;
        s << "<path d=\"M " << num(tipx) << " " << num(tipy) << " L " << num(bx - 4 * uy) << " " << num(by + 4 * ux)
          << " L " << num(bx + 4 * uy) << " " << num(by - 4 * ux) << " Z\"/>\n";
        s << "<text x=\"" << num(ax + 8 * uy + 4) << "\" y=\"" << num(ay - 8 * ux - 4) << "\">" << g.edges[e].weight
          << "</text>\n";
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const Point& p = t.pos[static_cast<std::size_t>(v)];
        s << "<circle cx=\"" << num(f.X(p.x)) << "\" cy=\"" << num(f.Y(p.y)) << "\" r=\"" << (t.is_boundary(v) ? 3 : 4)
          << "\"/>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace webcalc
