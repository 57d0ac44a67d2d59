#include "webcalc/stranding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace webcalc {

std::map<int, Role> binary_to_strands(const Word& b) {
    std::map<int, Role> out;
    for (int c = 1; c < b.n; ++c) {
        int a = int(b.at(c)) - int(b.at(c + 1));
        if (a == 1) out[c] = Role::With;
        if (a == -1) out[c] = Role::Against;
    }
    return out;
}

Word strands_to_binary(int n, const std::map<int, Role>& strands, bool last_bit) {
    Word w{n, 0};
    int bit = last_bit ? 1 : 0;
    if (bit) w.bits |= 1u << (n - 1);
    for (int c = n - 1; c >= 1; --c) {
        auto it = strands.find(c);
        if (it != strands.end()) bit += it->second == Role::With ? 1 : -1;
        if (bit < 0 || bit > 1) throw std::invalid_argument("strands do not alternate");
        if (bit) w.bits |= 1u << (c - 1);
    }
    return w;
}

namespace {

// true iff the signed label sum at v is a multiple of the all-ones vector
bool vertex_ok(const WebGraph& g, const Topology& t, int v, const std::vector<Word>& labels) {
    int sum[32] = {};
    for (const auto& i : t.inc[v]) {
        const Word& w = labels[i.edge];
        for (int p = 1; p <= g.n; ++p) sum[p - 1] += (i.into ? 1 : -1) * int(w.at(p));
    }
    for (int p = 1; p < g.n; ++p)
        if (sum[p] != sum[0]) return false;
    return true;
}

std::vector<int> sorted_edge_order(const WebGraph& g) {
    std::vector<int> ord(g.edges.size());
    for (std::size_t e = 0; e < ord.size(); ++e) ord[e] = int(e);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return g.edges[a].id < g.edges[b].id; });
    return ord;
}

void sort_canonical(const WebGraph& g, std::vector<Stranding>& out) {
    auto ord = sorted_edge_order(g);
    auto key = [&](const Stranding& s) {
        std::string k;
        for (int e : ord) k += s.labels[e].str();
        return k;
    };
    std::vector<std::pair<std::string, std::size_t>> keyed;
    for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(key(out[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Stranding> sorted;
    sorted.reserve(out.size());
    for (const auto& [k, i] : keyed) sorted.push_back(std::move(out[i]));
    out = std::move(sorted);
}

}  // namespace

bool validate_stranding(const WebGraph& g, const Stranding& s) {
    if (s.labels.size() != g.edges.size()) throw std::invalid_argument("stranding does not cover the edges");
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (s.labels[e].n != g.n || s.labels[e].weight() != g.edges[e].weight) return false;
    Topology t = topology(g);
    for (int v = t.nb; v < t.vertex_count(); ++v) {
        // per color: sum of sigma * (b_c - b_{c+1}) vanishes
        for (int c = 1; c < g.n; ++c) {
            int sum = 0;
            for (const auto& i : t.inc[v]) {
                const Word& w = s.labels[i.edge];
                sum += (i.into ? 1 : -1) * (int(w.at(c)) - int(w.at(c + 1)));
            }
            if (sum != 0) return false;
        }
    }
    return true;
}

std::vector<Stranding> enumerate_strandings(const WebGraph& g) {
    const Topology t = topology(g);
    const int ne = int(g.edges.size());
    const int n = g.n;

    // greedy order: prefer edges closing off a vertex
    std::vector<int> order;
    std::vector<char> placed(ne, 0);
    std::vector<int> seen(t.vertex_count(), 0);
    for (int step = 0; step < ne; ++step) {
        int best = -1, best_score = -1;
        for (int e = 0; e < ne; ++e) {
            if (placed[e]) continue;
            int score = 0;
            for (int v : {t.tail[e], t.head[e]})
                if (v >= t.nb) score = std::max(score, seen[v]);
            if (score > best_score) {
                best = e;
                best_score = score;
            }
        }
        placed[best] = 1;
        order.push_back(best);
        for (int v : {t.tail[best], t.head[best]})
            if (v >= 0) ++seen[v];
    }

    std::vector<std::vector<Word>> choices(ne);
    for (int e = 0; e < ne; ++e) choices[e] = words_of_weight(n, g.edges[e].weight);

    std::vector<Word> labels(ne, Word{n, 0});
    std::vector<char> assigned(ne, 0);
    std::vector<Stranding> out;

    // labels x with sigma*x = c*1 - p for the two assigned edges at v
    auto completions = [&](int v, int e) {
        std::vector<Word> res;
        int p[32] = {};
        int sigma = 0;
        for (const auto& i : t.inc[v]) {
            if (i.edge == e) {
                sigma = i.into ? 1 : -1;
                continue;
            }
            for (int k = 1; k <= n; ++k) p[k - 1] += (i.into ? 1 : -1) * int(labels[i.edge].at(k));
        }
        for (int c = -3; c <= 3; ++c) {
            Word w{n, 0};
            bool ok = true;
            for (int k = 1; k <= n && ok; ++k) {
                int x = sigma * (c - p[k - 1]);
                if (x != 0 && x != 1) ok = false;
                if (x == 1) w.bits |= 1u << (k - 1);
            }
            if (ok && w.weight() == g.edges[e].weight) res.push_back(w);
        }
        return res;
    };

    std::function<void(int)> rec = [&](int k) {
        if (k == ne) {
            out.push_back({labels});
            return;
        }
        int e = order[k];
        std::vector<int> done;  // interior endpoints completed by this edge
        int forced_at = -1;
        for (int v : {t.tail[e], t.head[e]}) {
            if (v < t.nb) continue;
            int missing = 0;
            for (const auto& i : t.inc[v])
                if (i.edge != e && !assigned[i.edge]) ++missing;
            if (missing == 0) {
                done.push_back(v);
                if (forced_at < 0) forced_at = v;
            }
        }
        std::vector<Word> local;
        const std::vector<Word>* cands = &choices[e];
        if (forced_at >= 0) {
            local = completions(forced_at, e);
            cands = &local;
        }
        assigned[e] = 1;
        for (const Word& w : *cands) {
            labels[e] = w;
            bool ok = true;
            for (int v : done)
                if (!vertex_ok(g, t, v, labels)) ok = false;
            if (ok) rec(k + 1);
        }
        assigned[e] = 0;
    };
    rec(0);
    sort_canonical(g, out);
    return out;
}

std::vector<Stranding> brute_force_strandings(const WebGraph& g) {
    const int ne = int(g.edges.size());
    std::vector<std::vector<Word>> choices(ne);
    for (int e = 0; e < ne; ++e) choices[e] = words_of_weight(g.n, g.edges[e].weight);
    std::vector<std::size_t> idx(ne, 0);
    std::vector<Stranding> out;
    while (true) {
        Stranding s;
        for (int e = 0; e < ne; ++e) s.labels.push_back(choices[e][idx[e]]);
        if (validate_stranding(g, s)) out.push_back(std::move(s));
        int e = 0;
        while (e < ne && ++idx[e] == choices[e].size()) idx[e++] = 0;
        if (e == ne) break;
    }
    sort_canonical(g, out);
    return out;
}

StrandContext::StrandContext(const WebGraph& g) : g_(&g), t_(topology(g)) {
    for (int e = 0; e < int(g.edges.size()); ++e) lines_.push_back(edge_polyline(g, t_, e));
}

Orientation StrandContext::orientation(const FlowComponent& c) const {
    std::vector<Point> poly;
    for (const auto& [e, with] : c.traversals) {
        const auto& p = lines_[e];
        if (with)
            poly.insert(poly.end(), p.begin(), p.end() - 1);
        else
            poly.insert(poly.end(), p.rbegin(), p.rend() - 1);
    }
    // open paths close along the axis from their end back to their start
    if (!c.closed && !c.traversals.empty()) {
        const auto& [e, with] = c.traversals.back();
        poly.push_back(with ? lines_[e].back() : lines_[e].front());
    }
    double a = signed_area2(poly);
    if (std::abs(a) < kGeomEps) throw std::runtime_error("orientation: degenerate flow curve");
    return a > 0 ? Orientation::CCW : Orientation::CW;
}

std::vector<FlowComponent> StrandContext::flows(const Stranding& s, int i, int j) const {
    const WebGraph& g = *g_;
    const int ne = int(g.edges.size());
    std::vector<int> dir(ne, 0);  // +1 with, -1 against, 0 absent
    for (int e = 0; e < ne; ++e) {
        int d = int(s.labels[e].at(i)) - int(s.labels[e].at(j));
        dir[e] = d;
    }
    auto start_of = [&](int e) { return dir[e] > 0 ? t_.tail[e] : t_.head[e]; };
    auto end_of = [&](int e) { return dir[e] > 0 ? t_.head[e] : t_.tail[e]; };
    // the unique active edge leaving v
    auto out_edge = [&](int v) {
        for (const auto& in : t_.inc[v])
            if (dir[in.edge] != 0 && start_of(in.edge) == v && !g.edges[in.edge].is_loop()) return in.edge;
        return -1;
    };
    std::vector<char> used(ne, 0);
    std::vector<FlowComponent> out;
    auto follow = [&](int e0, bool closed) {
        FlowComponent c;
        c.i = i;
        c.j = j;
        c.closed = closed;
        int e = e0;
        while (e >= 0 && !used[e]) {
            used[e] = 1;
            c.traversals.emplace_back(e, dir[e] > 0);
            int v = end_of(e);
            if (v < 0 || t_.is_boundary(v)) break;
            e = out_edge(v);
        }
        c.orientation = orientation(c);
        out.push_back(std::move(c));
    };
    for (int b = 0; b < t_.nb; ++b) {
        int e = t_.boundary_edge[b];
        if (e >= 0 && dir[e] != 0 && start_of(e) == b && !used[e]) follow(e, false);
    }
    for (int e = 0; e < ne; ++e)
        if (dir[e] != 0 && !used[e]) follow(e, true);
    return out;
}

int StrandContext::flow_exponent(const Stranding& s) const {
    int x = 0, y = 0;
    for (int i = 1; i <= g_->n; ++i)
        for (int j = i + 1; j <= g_->n; ++j)
            for (const auto& c : flows(s, i, j)) {
                if (c.orientation == Orientation::CCW) ++y;
                else if (c.closed) ++x;
            }
    return x - y;
}

Monomial StrandContext::boundary_monomial(const Stranding& s) const {
    Monomial m;
    for (int b = 0; b < t_.nb; ++b) {
        int e = t_.boundary_edge[b];
        const Word& w = s.labels[e];
        m.push_back({t_.head[e] == b ? w : w.complement(), false});
    }
    return m;
}

std::vector<FlowComponent> flows(const WebGraph& g, const Stranding& s, int i, int j) {
    return StrandContext(g).flows(s, i, j);
}

std::vector<FlowComponent> flows(const WebGraph& g, const Stranding& s) {
    StrandContext ctx(g);
    std::vector<FlowComponent> out;
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j) {
            auto part = ctx.flows(s, i, j);
            out.insert(out.end(), part.begin(), part.end());
        }
    return out;
}

Orientation orientation(const WebGraph& g, const FlowComponent& c) { return StrandContext(g).orientation(c); }

int flow_exponent(const WebGraph& g, const Stranding& s) { return StrandContext(g).flow_exponent(s); }

Stranding base_stranding(const WebGraph& g) {
    FaceSet f = faces(g);
    auto d = dual_distance(g, f);
    Stranding s;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int a = d[f.left[e]];
        Word w{g.n, 0};
        for (int k = 1; k <= g.edges[e].weight; ++k) {
            int r = (a + k) % g.n;
            int pos = r == 0 ? g.n : r;
            w.bits |= 1u << (pos - 1);
        }
        s.labels.push_back(w);
    }
    return s;
}

Stranding sl3_depth_stranding(const WebGraph& g) {
    if (g.n != 3) throw std::invalid_argument("sl3_depth_stranding: n must be 3");
    FaceSet f = faces(g);
    auto depth = face_depth(g, f);
    Topology t = topology(g);
    for (int v = t.nb; v < t.vertex_count(); ++v) {
        std::vector<int> ds;
        for (const auto& i : t.inc[v]) {
            ds.push_back(depth[f.left[i.edge]]);
            ds.push_back(depth[f.right[i.edge]]);
        }
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        if (ds.size() != 2)
            throw std::invalid_argument("sl3_depth_stranding: vertex " + g.interior[v - t.nb].id +
                                        " does not see exactly two depths");
    }
    Stranding s;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        // work on the weight-1 orientation, then undo the flip
        bool flipped = g.edges[e].weight == 2;
        int dl = depth[f.left[e]], dr = depth[f.right[e]];
        if (flipped) std::swap(dl, dr);
        Word w = Word::from_string(dl < dr ? "100" : (dl > dr ? "001" : "010"));
        s.labels.push_back(flipped ? w.complement() : w);
    }
    return s;
}

}  // namespace webcalc
