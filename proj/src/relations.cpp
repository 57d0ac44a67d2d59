#include "webcalc/relations.hpp"

#include "webcalc/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

namespace webcalc {

namespace {

// A relation fragment in drawing coordinates (y up). Feet are the loose ends
// of the drawn legs; realize() carries them to the boundary axis.
struct Fragment {
    struct FEdge {
        std::string tail, head;
        int weight;
        std::vector<Point> via;
    };
    std::map<std::string, Point> vertices;
    std::vector<FEdge> edges;
    std::vector<std::string> bottom;  // feet below the fragment, left to right
    std::vector<std::string> top;     // feet above it

    void vertex(const std::string& id, double x, double y) { vertices[id] = {x, y}; }
    void edge(const std::string& t, const std::string& h, int w, std::vector<Point> via = {}) {
        edges.push_back({t, h, w, std::move(via)});
    }
};

// Legs of the bottom feet wrap around the left side, innermost first.
WebGraph realize(int n, const Fragment& f) {
    double xmin = 0, ymin = 0, ytop = 0;
    bool first = true;
    auto see = [&](const Point& p) {
        if (first) {
            xmin = p.x, ymin = p.y, ytop = p.y;
            first = false;
        }
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        ytop = std::max(ytop, p.y);
    };
    for (const auto& [id, p] : f.vertices) see(p);
    for (const auto& e : f.edges)
        for (const Point& p : e.via) see(p);
    auto place = [&](Point p) { return Point{p.x, p.y - ytop - 1.0}; };

    WebGraph g;
    g.n = n;
    struct Leg {
        double bx;
        std::string foot;
        std::vector<Point> path;  // from the foot to the boundary
    };
    std::vector<Leg> legs;
    for (std::size_t i = 0; i < f.bottom.size(); ++i) {
        Point p = place(f.vertices.at(f.bottom[i]));
        double d = place({0, ymin}).y - 0.5 * static_cast<double>(i + 1);
        double x = xmin - 0.5 * static_cast<double>(i + 1);
        legs.push_back({x, f.bottom[i], {{p.x, d}, {x, d}}});
    }
    for (const auto& id : f.top) legs.push_back({f.vertices.at(id).x, id, {}});
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.bx < b.bx; });

    for (const auto& [id, p] : f.vertices) {
        Point w = place(p);
        g.interior.push_back({id, w.x, w.y});
    }
    int next = 1;
    for (const auto& e : f.edges) {
        std::vector<Point> via;
        for (const Point& p : e.via) via.push_back(place(p));
        g.edges.push_back({"e" + std::to_string(next++), e.tail, e.head, e.weight, via});
    }
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const Leg& leg = legs[i];
        std::string b = "b" + std::to_string(i + 1);
        g.boundary.push_back({b, leg.bx});
        const Fragment::FEdge* at = nullptr;
        for (const auto& e : f.edges)
            if (e.tail == leg.foot || e.head == leg.foot) at = &e;
        if (at == nullptr) throw std::logic_error("foot without edge");
        std::string id = "e" + std::to_string(next++);
        if (at->head == leg.foot) {
            g.edges.push_back({id, leg.foot, b, at->weight, leg.path});
        } else {
            std::vector<Point> rev(leg.path.rbegin(), leg.path.rend());
            g.edges.push_back({id, b, leg.foot, at->weight, rev});
        }
    }
    return g;
}

Point interior_pos(const WebGraph& g, const std::string& id) {
    for (const auto& v : g.interior)
        if (v.id == id) return {v.x, v.y};
    throw std::logic_error("unknown vertex " + id);
}

void reverse_edge(WebGraph& g, Edge& e) {
    std::swap(e.tail, e.head);
    e.weight = g.n - e.weight;
    std::reverse(e.via.begin(), e.via.end());
}

// Joins the two edge ends at a degree-two interior vertex.
void smooth(WebGraph& g, const std::string& v) {
    std::vector<std::size_t> ins, outs;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].head == v) ins.push_back(i);
        if (g.edges[i].tail == v) outs.push_back(i);
    }
    if (ins.empty()) {
        reverse_edge(g, g.edges[outs[1]]);
        ins.push_back(outs[1]);
        outs.pop_back();
    } else if (outs.empty()) {
        reverse_edge(g, g.edges[ins[1]]);
        outs.push_back(ins[1]);
        ins.pop_back();
    }
    const Point p = interior_pos(g, v);
    Edge& a = g.edges[ins[0]];
    if (ins[0] == outs[0]) {
        std::vector<Point> curve{p};
        curve.insert(curve.end(), a.via.begin(), a.via.end());
        a.tail.clear();
        a.head.clear();
        a.via = std::move(curve);
    } else {
        const Edge b = g.edges[outs[0]];
        a.via.push_back(p);
        a.via.insert(a.via.end(), b.via.begin(), b.via.end());
        a.head = b.head;
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(outs[0]));
    }
    std::erase_if(g.interior, [&](const InteriorVertex& x) { return x.id == v; });
}

}  // namespace

std::optional<WebGraph> apply_zero_rule(WebGraph g) {
    for (const Edge& e : g.edges)
        if (e.weight < 0 || e.weight > g.n) return std::nullopt;
    std::erase_if(g.edges, [&](const Edge& e) { return e.weight == 0 || e.weight == g.n; });
    for (;;) {
        std::map<std::string, int> degree;
        for (const Edge& e : g.edges) {
            if (e.is_loop()) continue;
            ++degree[e.tail];
            ++degree[e.head];
        }
        std::erase_if(g.interior, [&](const InteriorVertex& v) { return degree[v.id] == 0; });
        std::erase_if(g.boundary, [&](const BoundaryVertex& v) { return degree[v.id] == 0; });
        auto it = std::find_if(g.interior.begin(), g.interior.end(),
                               [&](const InteriorVertex& v) { return degree[v.id] == 2; });
        if (it == g.interior.end()) break;
        smooth(g, it->id);
    }
    return g;
}

std::string RelationInstance::label() const {
    std::string s = name + "(n=" + std::to_string(n);
    for (const auto& [k, v] : params) s += "," + k + "=" + std::to_string(v);
    return s + ")";
}

namespace {

struct Builder {
    RelationInstance inst;

    void add(std::vector<RelationTerm>& side, const LaurentPoly& c, const Fragment& f) {
        if (c.is_zero()) return;
        if (auto g = apply_zero_rule(realize(inst.n, f))) side.push_back({c, std::move(*g)});
    }
};

RelationInstance start(std::string name, int n, std::vector<std::pair<std::string, int>> params) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    RelationInstance r;
    r.name = std::move(name);
    r.n = n;
    r.params = std::move(params);
    return r;
}

LaurentPoly at_neg_q(const LaurentPoly& p) { return subst_neg_q(p); }

// Both squares share the corner layout; h1 is the lower rung, h2 the upper.
Fragment square(int k, int l, int lower, bool lower_rightward, int upper, bool upper_rightward, int left_mid,
                int right_mid, int left_top, int right_top) {
    Fragment f;
    f.vertex("A", 0, 0);
    f.vertex("B", 2, 0);
    f.vertex("C", 0, 2);
    f.vertex("D", 2, 2);
    f.vertex("p", 0, -1);
    f.vertex("q", 2, -1);
    f.vertex("s", 0, 3);
    f.vertex("t", 2, 3);
    f.edge("p", "A", k);
    f.edge("q", "B", l);
    f.edge("A", "C", left_mid);
    f.edge("B", "D", right_mid);
    f.edge("C", "s", left_top);
    f.edge("D", "t", right_top);
    if (lower_rightward)
        f.edge("A", "B", lower);
    else
        f.edge("B", "A", lower);
    if (upper_rightward)
        f.edge("C", "D", upper);
    else
        f.edge("D", "C", upper);
    f.bottom = {"p", "q"};
    f.top = {"s", "t"};
    return f;
}

Fragment rung(int k, int l, int h, int left_top, int right_top) {
    Fragment f;
    f.vertex("A", 0, 0);
    f.vertex("B", 2, 0);
    f.vertex("p", 0, -1);
    f.vertex("q", 2, -1);
    f.vertex("s", 0, 1);
    f.vertex("t", 2, 1);
    f.edge("p", "A", k);
    f.edge("q", "B", l);
    f.edge("A", "B", h);
    f.edge("A", "s", left_top);
    f.edge("B", "t", right_top);
    f.bottom = {"p", "q"};
    f.top = {"s", "t"};
    return f;
}

Fragment two_lines(int k, int l) {
    Fragment f;
    f.vertex("p", 0, -1);
    f.vertex("q", 2, -1);
    f.vertex("s", 0, 3);
    f.vertex("t", 2, 3);
    f.edge("p", "s", k);
    f.edge("q", "t", l);
    f.bottom = {"p", "q"};
    f.top = {"s", "t"};
    return f;
}

Fragment loop_fragment(int k, bool clockwise) {
    Fragment f;
    std::vector<Point> c = {{0, 0}, {1, 1}, {2, 0}, {1, -1}};
    if (!clockwise) std::reverse(c.begin(), c.end());
    f.edges.push_back({"", "", k, c});
    return f;
}

}  // namespace

RelationInstance make_bigon(int n, int k, int l) {
    Builder b{start("bigon", n, {{"k", k}, {"l", l}})};
    Fragment lhs;
    lhs.vertex("p", 0, 0);
    lhs.vertex("P", 1, 2);
    lhs.vertex("Q", 2, 4);
    lhs.vertex("t", 3, 6);
    lhs.edge("p", "P", k + l);
    lhs.edge("P", "Q", k, {{0.5, 3.5}});
    lhs.edge("P", "Q", l, {{2.5, 2.5}});
    lhs.edge("Q", "t", k + l);
    lhs.bottom = {"p"};
    lhs.top = {"t"};
    b.add(b.inst.lhs, 1, lhs);

    Fragment rhs;
    rhs.vertex("p", 0, 0);
    rhs.vertex("t", 3, 6);
    rhs.edge("p", "t", k + l);
    rhs.bottom = {"p"};
    rhs.top = {"t"};
    if (l >= 0) b.add(b.inst.rhs, at_neg_q(qbinom(k + l, l)), rhs);
    return b.inst;
}

RelationInstance make_IH(int n, int k, int l, int m) {
    Builder b{start("IH", n, {{"k", k}, {"l", l}, {"m", m}})};
    auto legs = [](Fragment& f) {
        f.vertex("a", 0, 0);
        f.vertex("b", 1, 0);
        f.vertex("c", 2, 0);
        f.vertex("t", 1, 2.75);
        f.vertex("Q", 1, 2);
        f.bottom = {"a", "b", "c"};
        f.top = {"t"};
    };
    Fragment lhs;
    legs(lhs);
    lhs.vertex("P", 0.5, 1);
    lhs.edge("a", "P", k);
    lhs.edge("b", "P", l);
    lhs.edge("P", "Q", k + l);
    lhs.edge("c", "Q", m);
    lhs.edge("Q", "t", k + l + m);
    b.add(b.inst.lhs, 1, lhs);

    Fragment rhs;
    legs(rhs);
    rhs.vertex("R", 1.5, 1);
    rhs.edge("a", "Q", k);
    rhs.edge("b", "R", l);
    rhs.edge("c", "R", m);
    rhs.edge("R", "Q", l + m);
    rhs.edge("Q", "t", k + l + m);
    b.add(b.inst.rhs, 1, rhs);
    return b.inst;
}

RelationInstance make_square_removal(int n, int k, int l, int r, int s) {
    Builder b{start("square-removal", n, {{"k", k}, {"l", l}, {"r", r}, {"s", s}})};
    b.add(b.inst.lhs, 1, square(k, l, s, true, r, true, k - s, l + s, k - r - s, l + r + s));
    if (r >= 0 && s >= 0) b.add(b.inst.rhs, at_neg_q(qbinom(r + s, r)), rung(k, l, r + s, k - r - s, l + r + s));
    return b.inst;
}

RelationInstance make_square_switch_unit(int n, int k, int l) {
    Builder b{start("square-switch", n, {{"k", k}, {"l", l}})};
    b.add(b.inst.lhs, 1, square(k, l, 1, true, 1, false, k - 1, l + 1, k, l));
    b.add(b.inst.rhs, 1, square(k, l, 1, false, 1, true, k + 1, l - 1, k, l));
    b.add(b.inst.rhs, at_neg_q(qint(k - l)), two_lines(k, l));
    return b.inst;
}

RelationInstance make_square_switch_general(int n, int k, int l, int r, int s) {
    Builder b{start("square-switch-general", n, {{"k", k}, {"l", l}, {"r", r}, {"s", s}})};
    b.add(b.inst.lhs, 1, square(k, l, s, true, r, false, k - s, l + s, k + r - s, l - r + s));
    const int top = k - l + r - s;
    for (int t = 0; t <= std::min(r, s); ++t) {
        LaurentPoly c = qbinom(top, t);
        if (((top - 1) * t) % 2 != 0) c = -c;
        b.add(b.inst.rhs, c, square(k, l, r - t, false, s - t, true, k + r - t, l - r + t, k + r - s, l - r + s));
    }
    return b.inst;
}

RelationInstance make_loop(int n, int k) {
    Builder b{start("loop", n, {{"k", k}})};
    b.add(b.inst.lhs, 1, loop_fragment(k, false));
    b.add(b.inst.rhs, at_neg_q(qbinom(n, k)), Fragment{});
    return b.inst;
}

RelationInstance make_circle(int n, int k) {
    Builder b{start("circle", n, {{"k", k}})};
    b.add(b.inst.lhs, 1, loop_fragment(k, true));
    LaurentPoly c = qbinom(n, k);
    if ((k * (n - k)) % 2 != 0) c = -c;
    b.add(b.inst.rhs, c, Fragment{});
    return b.inst;
}

WebVector residual(const RelationInstance& inst) {
    std::optional<std::vector<int>> sig;
    WebVector out;
    auto accumulate = [&](const std::vector<RelationTerm>& side, bool negate) {
        for (const RelationTerm& t : side) {
            require_valid(t.web);
            std::vector<int> b = boundary_weight_vector(t.web);
            if (!sig)
                sig = b;
            else if (*sig != b)
                throw std::invalid_argument(inst.label() + ": boundary signature mismatch");
            WebVector v = t.coeff * web_vector(t.web);
            if (negate)
                out -= v;
            else
                out += v;
        }
    };
    accumulate(inst.lhs, false);
    accumulate(inst.rhs, true);
    return out;
}

bool verify(const RelationInstance& inst) { return residual(inst).is_zero(); }

bool verify_edge_flip(const WebGraph& g, const std::vector<std::string>& edges) {
    return web_vector(g) == web_vector(flip_edges(g, edges));
}

bool verify_flip_orbit(const RelationInstance& inst) {
    auto check = [](const std::vector<RelationTerm>& side) {
        for (const RelationTerm& t : side) {
            const std::size_t m = t.web.edges.size();
            if (m > 10) throw std::invalid_argument("flip orbit too large");
            const WebVector want = web_vector(t.web);
            for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
                std::vector<std::string> ids;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask >> i & 1u) ids.push_back(t.web.edges[i].id);
                if (web_vector(flip_edges(t.web, ids)) != want) return false;
            }
        }
        return true;
    };
    return check(inst.lhs) && check(inst.rhs);
}

namespace {

template <class F>
RelationInstance map_webs(const RelationInstance& inst, F&& f) {
    RelationInstance out = inst;
    for (auto* side : {&out.lhs, &out.rhs})
        for (RelationTerm& t : *side) t.web = f(t.web);
    return out;
}

}  // namespace

RelationInstance mirrored(const RelationInstance& inst) {
    RelationInstance out = map_webs(inst, [](const WebGraph& g) {
        WebGraph m = g;
        for (auto& b : m.boundary) b.x = -b.x;
        std::reverse(m.boundary.begin(), m.boundary.end());
        for (auto& v : m.interior) v.x = -v.x;
        for (auto& e : m.edges)
            for (auto& p : e.via) p.x = -p.x;
        return m;
    });
    out.name += "-mirror";
    return out;
}

RelationInstance jittered(const RelationInstance& inst, std::uint64_t seed, double amp) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-amp, amp);
    return map_webs(inst, [&](const WebGraph& g) {
        WebGraph j = g;
        for (auto& v : j.interior) {
            v.x += d(rng);
            v.y += d(rng);
        }
        for (auto& e : j.edges)
            for (auto& p : e.via) {
                p.x += d(rng);
                p.y += d(rng);
            }
        return j;
    });
}

const std::vector<std::string>& relation_rules() {
    static const std::vector<std::string> rules = {"bigon",         "ih",   "square-removal", "square-switch",
                                                   "square-switch-general", "loop", "circle"};
    return rules;
}

std::vector<RelationInstance> relation_grid(const std::string& rule, int max_n) {
    std::vector<RelationInstance> out;
    auto in = [](int w, int n) { return w >= 0 && w <= n; };
    for (int n = 2; n <= max_n; ++n) {
        if (rule == "bigon") {
            for (int k = 0; k <= n; ++k)
                for (int l = 0; k + l <= n; ++l)
                    if (k + l > 0) out.push_back(make_bigon(n, k, l));
        } else if (rule == "ih") {
            for (int k = 0; k <= n; ++k)
                for (int l = 0; k + l <= n; ++l)
                    for (int m = 0; k + l + m <= n; ++m) out.push_back(make_IH(n, k, l, m));
        } else if (rule == "square-removal" || rule == "square-switch-general") {
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l)
                    for (int r = 0; r <= 3; ++r)
                        for (int s = 0; r + s <= 3; ++s) {
                            if (rule == "square-removal") {
                                if (in(k - r - s, n) && in(l + r + s, n))
                                    out.push_back(make_square_removal(n, k, l, r, s));
                            } else if (in(k + r - s, n) && in(l - r + s, n)) {
                                out.push_back(make_square_switch_general(n, k, l, r, s));
                            }
                        }
        } else if (rule == "square-switch") {
            for (int k = 0; k <= n; ++k)
                for (int l = 0; l <= n; ++l) out.push_back(make_square_switch_unit(n, k, l));
        } else if (rule == "loop" || rule == "circle") {
            for (int k = 0; k <= n; ++k) out.push_back(rule == "loop" ? make_loop(n, k) : make_circle(n, k));
        } else {
            throw std::invalid_argument("unknown relation rule '" + rule + "'");
        }
    }
    return out;
}

std::vector<RelationResult> verify_all(const std::vector<RelationInstance>& insts, int jobs) {
    std::vector<RelationResult> out(insts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < insts.size();) {
            out[i].label = insts[i].label();
            try {
                out[i].residual = residual(insts[i]);
                out[i].ok = out[i].residual.is_zero();
            } catch (const std::exception& e) {
                out[i].label += ": " + std::string(e.what());
            }
        }
    };
    const int t = std::max(1, jobs);
    if (t == 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace webcalc
