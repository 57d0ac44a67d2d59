#include "webcalc/web.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace webcalc {

Topology topology(const WebGraph& g) {
    Topology t;
    t.nb = static_cast<int>(g.boundary.size());
    t.ni = static_cast<int>(g.interior.size());
    std::unordered_map<std::string, int> ids;
    auto reg = [&](const std::string& id, int v) {
        if (id.empty()) throw std::invalid_argument("vertex with empty id");
        if (!ids.emplace(id, v).second) throw std::invalid_argument("duplicate vertex id '" + id + "'");
    };
    for (int i = 0; i < t.nb; ++i) {
        reg(g.boundary[static_cast<std::size_t>(i)].id, i);
        t.pos.push_back({g.boundary[static_cast<std::size_t>(i)].x, 0.0});
    }
    for (int i = 0; i < t.ni; ++i) {
        const auto& v = g.interior[static_cast<std::size_t>(i)];
        reg(v.id, t.nb + i);
        t.pos.push_back({v.x, v.y});
    }
    t.inc.assign(static_cast<std::size_t>(t.nb + t.ni), {});
    t.boundary_edge.assign(static_cast<std::size_t>(t.nb), -1);
    std::set<std::string> edge_ids;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (!edge_ids.insert(ed.id).second) throw std::invalid_argument("duplicate edge id '" + ed.id + "'");
        if (ed.is_loop()) {
            t.tail.push_back(-1);
            t.head.push_back(-1);
            continue;
        }
        auto find = [&](const std::string& id) {
            auto it = ids.find(id);
            if (it == ids.end()) throw std::invalid_argument("edge '" + ed.id + "' references unknown vertex '" + id + "'");
            return it->second;
        };
        int a = find(ed.tail), b = find(ed.head);
        t.tail.push_back(a);
        t.head.push_back(b);
        int ei = static_cast<int>(e);
        t.inc[static_cast<std::size_t>(a)].push_back({ei, false});
        t.inc[static_cast<std::size_t>(b)].push_back({ei, true});
        if (t.is_boundary(a)) t.boundary_edge[static_cast<std::size_t>(a)] = ei;
        if (t.is_boundary(b)) t.boundary_edge[static_cast<std::size_t>(b)] = ei;
    }
    return t;
}

std::vector<Point> edge_polyline(const WebGraph& g, const Topology& t, int e) {
    const Edge& ed = g.edges[static_cast<std::size_t>(e)];
    std::vector<Point> out;
    if (ed.is_loop()) {
        out = ed.via;
        if (!out.empty()) out.push_back(out.front());
        return out;
    }
    out.push_back(t.pos[static_cast<std::size_t>(t.tail[static_cast<std::size_t>(e)])]);
    out.insert(out.end(), ed.via.begin(), ed.via.end());
    out.push_back(t.pos[static_cast<std::size_t>(t.head[static_cast<std::size_t>(e)])]);
    return out;
}

int edge_index(const WebGraph& g, const std::string& id) {
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].id == id) return static_cast<int>(e);
    throw std::invalid_argument("unknown edge id '" + id + "'");
}

int vertex_index(const WebGraph& g, const std::string& id) {
    for (std::size_t i = 0; i < g.boundary.size(); ++i)
        if (g.boundary[i].id == id) return static_cast<int>(i);
    for (std::size_t i = 0; i < g.interior.size(); ++i)
        if (g.interior[i].id == id) return static_cast<int>(g.boundary.size() + i);
    throw std::invalid_argument("unknown vertex id '" + id + "'");
}

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& i : issues) os << i.where << ": " << i.what << '\n';
    return os.str();
}

namespace {

struct Segment {
    int edge;
    int index;
    int count;
    Point a, b;
};

void check_planarity(const WebGraph& g, const Topology& t, ValidationReport& rep) {
    std::vector<Segment> segs;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto p = edge_polyline(g, t, e);
        int cnt = static_cast<int>(p.size()) - 1;
        for (int k = 0; k < cnt; ++k) {
            if (dist(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k + 1)]) < kGeomEps) {
                rep.issues.push_back({"zero-length segment", "edge " + g.edges[static_cast<std::size_t>(e)].id});
                continue;
            }
            segs.push_back({e, k, cnt, p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k + 1)]});
        }
    }
    // endpoint vertex of a segment end, or -2 for an interior joint
    auto end_vertex = [&](const Segment& s, bool at_b) {
        if (g.edges[static_cast<std::size_t>(s.edge)].is_loop()) return -2;
        if (!at_b && s.index == 0) return t.tail[static_cast<std::size_t>(s.edge)];
        if (at_b && s.index == s.count - 1) return t.head[static_cast<std::size_t>(s.edge)];
        return -2;
    };
    std::set<std::pair<int, int>> reported;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const Segment& s = segs[i];
            const Segment& r = segs[j];
            SegHit hit = segment_hit(s.a, s.b, r.a, r.b);
            if (hit == SegHit::None) continue;
            bool fine = false;
            if (hit == SegHit::Touch) {
                for (int u = 0; u < 2 && !fine; ++u) {
                    for (int w = 0; w < 2 && !fine; ++w) {
                        Point pu = u ? s.b : s.a;
                        Point pw = w ? r.b : r.a;
                        if (dist(pu, pw) > kGeomEps) continue;
                        if (s.edge == r.edge) {
                            bool adjacent = (u == 1 && w == 0 && r.index == s.index + 1) ||
                                            (u == 0 && w == 1 && s.index == r.index + 1);
                            bool wrap = g.edges[static_cast<std::size_t>(s.edge)].is_loop() &&
                                        ((s.index == 0 && u == 0 && r.index == r.count - 1 && w == 1) ||
                                         (r.index == 0 && w == 0 && s.index == s.count - 1 && u == 1));
                            if (adjacent || wrap) {
                                fine = true;
                                continue;
                            }
                        }
                        int vu = end_vertex(s, u == 1), vw = end_vertex(r, w == 1);
                        if (vu >= 0 && vu == vw) fine = true;
                    }
                }
            }
            if (!fine) {
                auto key = std::minmax(s.edge, r.edge);
                if (!reported.insert(key).second) continue;
                const auto& a = g.edges[static_cast<std::size_t>(key.first)].id;
                const auto& b = g.edges[static_cast<std::size_t>(key.second)].id;
                rep.issues.push_back({a == b ? "self-intersecting curve" : "curves intersect",
                                      a == b ? "edge " + a : "edges " + a + ", " + b});
            }
        }
    }
}

}  // namespace

ValidationReport validate(const WebGraph& g) {
    ValidationReport rep;
    if (g.n < 2) rep.issues.push_back({"n must be at least 2", "web"});
    for (std::size_t i = 1; i < g.boundary.size(); ++i)
        if (!(g.boundary[i].x > g.boundary[i - 1].x))
            rep.issues.push_back({"boundary not strictly increasing in x", "boundary " + g.boundary[i].id});
    for (const auto& v : g.interior)
        if (!(v.y < 0)) rep.issues.push_back({"interior vertex not below the axis", "vertex " + v.id});
    Topology t;
    try {
        t = topology(g);
    } catch (const std::invalid_argument& e) {
        rep.issues.push_back({e.what(), "web"});
        return rep;
    }
    for (const auto& e : g.edges) {
        if (e.weight < 1 || e.weight > g.n - 1)
            rep.issues.push_back({"weight " + std::to_string(e.weight) + " outside [1, n-1]", "edge " + e.id});
        if (e.tail.empty() != e.head.empty())
            rep.issues.push_back({"edge has only one endpoint", "edge " + e.id});
        if (e.is_loop() && e.via.size() < 3) rep.issues.push_back({"closed loop needs 3 points", "edge " + e.id});
        for (const auto& p : e.via)
            if (!(p.y < 0)) rep.issues.push_back({"curve point not below the axis", "edge " + e.id});
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& inc = t.inc[static_cast<std::size_t>(v)];
        std::string name = t.is_boundary(v) ? "boundary " + g.boundary[static_cast<std::size_t>(v)].id
                                            : "vertex " + g.interior[static_cast<std::size_t>(v - t.nb)].id;
        std::size_t want = t.is_boundary(v) ? 1 : 3;
        if (inc.size() != want) {
            rep.issues.push_back({"degree " + std::to_string(inc.size()) + ", expected " + std::to_string(want), name});
            continue;
        }
        if (t.is_boundary(v)) continue;
        int sum = 0;
        for (const auto& i : inc) sum += (i.into ? 1 : -1) * g.edges[static_cast<std::size_t>(i.edge)].weight;
        if (g.n >= 2 && ((sum % g.n) + g.n) % g.n != 0)
            rep.issues.push_back({"flow not conserved mod n (net " + std::to_string(sum) + ")", name});
    }
    check_planarity(g, t, rep);
    return rep;
}

void require_valid(const WebGraph& g) {
    auto rep = validate(g);
    if (!rep.ok()) throw std::invalid_argument("invalid web:\n" + rep.str());
}

std::vector<int> boundary_weight_vector(const WebGraph& g) {
    Topology t = topology(g);
    std::vector<int> k;
    for (int b = 0; b < t.nb; ++b) {
        int e = t.boundary_edge[static_cast<std::size_t>(b)];
        if (e < 0) throw std::invalid_argument("boundary vertex without edge");
        int w = g.edges[static_cast<std::size_t>(e)].weight;
        k.push_back(t.head[static_cast<std::size_t>(e)] == b ? w : g.n - w);
    }
    return k;
}

WebGraph flip_edges(const WebGraph& g, const std::vector<std::string>& ids) {
    WebGraph out = g;
    for (const auto& id : ids) {
        Edge& e = out.edges[static_cast<std::size_t>(edge_index(out, id))];
        std::swap(e.tail, e.head);
        e.weight = g.n - e.weight;
        if (e.is_loop())
            std::reverse(e.via.begin() + 1, e.via.end());
        else
            std::reverse(e.via.begin(), e.via.end());
    }
    return out;
}

VertexType vertex_type(const WebGraph& g, const std::string& v) {
    Topology t = topology(g);
    int idx = vertex_index(g, v);
    if (t.is_boundary(idx)) throw std::invalid_argument("vertex '" + v + "' is not interior");
    int sum = 0;
    for (const auto& i : t.inc[static_cast<std::size_t>(idx)]) {
        int w = g.edges[static_cast<std::size_t>(i.edge)].weight;
        sum += i.into ? g.n - w : w;
    }
    if (sum == g.n) return VertexType::TypeI;
    if (sum == 2 * g.n) return VertexType::TypeII;
    throw std::invalid_argument("vertex '" + v + "' is neither Type I nor Type II");
}

namespace {

struct Half {
    int origin;
    int dest;
    std::vector<Point> pts;
    double angle;
};

int find_root(std::vector<int>& p, int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
}

}  // namespace

FaceSet faces(const WebGraph& g) {
    Topology t = topology(g);
    const int ne = static_cast<int>(g.edges.size());
    const int naxis = std::max(0, t.nb - 1);
    const int total = ne + naxis;

    int nodes = t.vertex_count();
    std::vector<int> anchor(static_cast<std::size_t>(ne), -1);
    std::vector<Point> node_pos = t.pos;
    for (int e = 0; e < ne; ++e)
        if (g.edges[static_cast<std::size_t>(e)].is_loop()) {
            anchor[static_cast<std::size_t>(e)] = nodes++;
            node_pos.push_back(g.edges[static_cast<std::size_t>(e)].via.front());
        }

    std::vector<Half> hs(static_cast<std::size_t>(2 * total));
    for (int e = 0; e < total; ++e) {
        std::vector<Point> p;
        int a, b;
        if (e < ne) {
            p = edge_polyline(g, t, e);
            a = anchor[static_cast<std::size_t>(e)] >= 0 ? anchor[static_cast<std::size_t>(e)] : t.tail[static_cast<std::size_t>(e)];
            b = anchor[static_cast<std::size_t>(e)] >= 0 ? anchor[static_cast<std::size_t>(e)] : t.head[static_cast<std::size_t>(e)];
        } else {
            a = e - ne;
            b = a + 1;
            p = {t.pos[static_cast<std::size_t>(a)], t.pos[static_cast<std::size_t>(b)]};
        }
        auto& f = hs[static_cast<std::size_t>(2 * e)];
        auto& r = hs[static_cast<std::size_t>(2 * e + 1)];
        f = {a, b, p, 0};
        std::reverse(p.begin(), p.end());
        r = {b, a, p, 0};
        for (Half* h : {&f, &r}) h->angle = std::atan2(h->pts[1].y - h->pts[0].y, h->pts[1].x - h->pts[0].x);
    }

    std::vector<std::vector<int>> rot(static_cast<std::size_t>(nodes));
    for (int h = 0; h < 2 * total; ++h) rot[static_cast<std::size_t>(hs[static_cast<std::size_t>(h)].origin)].push_back(h);
    std::vector<int> slot(static_cast<std::size_t>(2 * total));
    for (auto& r : rot) {
        std::sort(r.begin(), r.end(), [&](int a, int b) { return hs[static_cast<std::size_t>(a)].angle < hs[static_cast<std::size_t>(b)].angle; });
        for (std::size_t i = 0; i < r.size(); ++i) {
            slot[static_cast<std::size_t>(r[i])] = static_cast<int>(i);
            if (r.size() > 1) {
                double gap = hs[static_cast<std::size_t>(r[(i + 1) % r.size()])].angle - hs[static_cast<std::size_t>(r[i])].angle;
                if (i + 1 == r.size()) gap += 2 * M_PI;
                if (std::abs(gap) < 1e-12) throw std::runtime_error("faces: coincident departure angles");
            }
        }
    }
    auto next = [&](int h) {
        int tw = h ^ 1;
        const auto& r = rot[static_cast<std::size_t>(hs[static_cast<std::size_t>(tw)].origin)];
        int i = slot[static_cast<std::size_t>(tw)];
        return r[static_cast<std::size_t>((i + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size()))];
    };

    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < total; ++e)
        parent[static_cast<std::size_t>(find_root(parent, hs[static_cast<std::size_t>(2 * e)].origin))] =
            find_root(parent, hs[static_cast<std::size_t>(2 * e)].dest);

    struct Cycle {
        std::vector<int> halfs;
        std::vector<Point> poly;
        double area;
        int comp;
    };
    std::vector<Cycle> cycles;
    std::vector<int> cycle_of(static_cast<std::size_t>(2 * total), -1);
    for (int h0 = 0; h0 < 2 * total; ++h0) {
        if (cycle_of[static_cast<std::size_t>(h0)] >= 0) continue;
        Cycle c;
        int h = h0;
        do {
            cycle_of[static_cast<std::size_t>(h)] = static_cast<int>(cycles.size());
            c.halfs.push_back(h);
            const auto& pts = hs[static_cast<std::size_t>(h)].pts;
            c.poly.insert(c.poly.end(), pts.begin(), pts.end() - 1);
            h = next(h);
        } while (h != h0);
        c.area = signed_area2(c.poly) / 2;
        if (std::abs(c.area) < kGeomEps) throw std::runtime_error("faces: degenerate face cycle");
        c.comp = find_root(parent, hs[static_cast<std::size_t>(h0)].origin);
        cycles.push_back(std::move(c));
    }

    FaceSet fs;
    fs.outer = 0;
    fs.walks.emplace_back();
    std::vector<int> face_of_cycle(cycles.size(), -1);
    auto to_walk = [&](const Cycle& c) {
        std::vector<HalfEdge> w;
        for (int h : c.halfs) w.push_back({h / 2, (h % 2) == 0});
        return w;
    };
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (cycles[c].area > 0) {
            face_of_cycle[c] = fs.face_count();
            fs.walks.push_back({to_walk(cycles[c])});
        }
    }
    std::set<int> comps;
    for (int v = 0; v < nodes; ++v) comps.insert(find_root(parent, v));
    for (int comp : comps) {
        int outer = -1;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (cycles[c].comp != comp || cycles[c].area > 0) continue;
            if (outer >= 0) throw std::runtime_error("faces: component with two outer cycles");
            outer = static_cast<int>(c);
        }
        if (outer < 0) throw std::runtime_error("faces: component without outer cycle");
        const Point probe = cycles[static_cast<std::size_t>(outer)].poly.front();
        int host = -1;
        double best = 0;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (cycles[c].comp == comp || cycles[c].area < 0) continue;
            if (!point_in_polygon(probe, cycles[c].poly)) continue;
            if (host < 0 || cycles[c].area < best) {
                host = static_cast<int>(c);
                best = cycles[c].area;
            }
        }
        int face = host < 0 ? fs.outer : face_of_cycle[static_cast<std::size_t>(host)];
        face_of_cycle[static_cast<std::size_t>(outer)] = face;
        fs.walks[static_cast<std::size_t>(face)].push_back(to_walk(cycles[static_cast<std::size_t>(outer)]));
    }

    fs.left.resize(static_cast<std::size_t>(ne));
    fs.right.resize(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e) {
        fs.left[static_cast<std::size_t>(e)] = face_of_cycle[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(2 * e)])];
        fs.right[static_cast<std::size_t>(e)] = face_of_cycle[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(2 * e + 1)])];
    }
    fs.vertex_count = nodes;
    fs.edge_count = total;
    fs.component_count = static_cast<int>(comps.size());
    if (fs.vertex_count - fs.edge_count + fs.face_count() != 1 + fs.component_count)
        throw std::logic_error("faces: Euler characteristic check failed");
    return fs;
}

std::vector<int> dual_distance(const WebGraph& g, const FaceSet& f) {
    const int n = g.n;
    std::vector<int> d(static_cast<std::size_t>(f.face_count()), -1);
    d[static_cast<std::size_t>(f.outer)] = 0;
    std::deque<int> queue{f.outer};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            int l = f.left[e], r = f.right[e], w = g.edges[e].weight;
            if (l == a && d[static_cast<std::size_t>(r)] < 0) {
                d[static_cast<std::size_t>(r)] = (d[static_cast<std::size_t>(a)] + w) % n;
                queue.push_back(r);
            } else if (r == a && d[static_cast<std::size_t>(l)] < 0) {
                d[static_cast<std::size_t>(l)] = ((d[static_cast<std::size_t>(a)] - w) % n + n) % n;
                queue.push_back(l);
            }
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int l = d[static_cast<std::size_t>(f.left[e])], r = d[static_cast<std::size_t>(f.right[e])];
        if (l < 0 || r < 0) throw std::logic_error("dual_distance: unreachable face");
        if (((r - l - g.edges[e].weight) % n + n) % n != 0)
            throw std::logic_error("dual_distance: path dependence at edge " + g.edges[e].id);
    }
    return d;
}

std::vector<int> dual_distance(const WebGraph& g) { return dual_distance(g, faces(g)); }

std::vector<int> face_depth(const WebGraph& g, const FaceSet& f) {
    std::vector<int> d(static_cast<std::size_t>(f.face_count()), -1);
    d[static_cast<std::size_t>(f.outer)] = 0;
    std::deque<int> queue{f.outer};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            int other = f.left[e] == a ? f.right[e] : (f.right[e] == a ? f.left[e] : -1);
            if (other >= 0 && d[static_cast<std::size_t>(other)] < 0) {
                d[static_cast<std::size_t>(other)] = d[static_cast<std::size_t>(a)] + 1;
                queue.push_back(other);
            }
        }
    }
    return d;
}

}  // namespace webcalc
