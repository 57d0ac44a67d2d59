#include "webcalc/ckm.hpp"

#include "webcalc/invariant.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <utility>

namespace webcalc {

namespace {

using Terms = std::vector<std::pair<Monomial, LaurentPoly>>;

int sgn_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

struct PrimInfo {
    PrimKind kind;
    const char* name;
};

constexpr PrimInfo kPrims[] = {
    {PrimKind::MergeM, "MergeM"},
    {PrimKind::SplitM, "SplitM'"},
    {PrimKind::Dual_D, "Dual_D"},
    {PrimKind::Dual_D_signed, "Dual_D_signed"},
    {PrimKind::DualInv, "DualInv"},
    {PrimKind::DualInv_signed, "DualInv_signed"},
    {PrimKind::CupLeft_C_L, "CupLeft_C_L"},
    {PrimKind::CupRight_C_R, "CupRight_C_R"},
    {PrimKind::CapLeft_CL, "CapLeft_CL"},
    {PrimKind::CapRight_CR, "CapRight_CR"},
    {PrimKind::FCap_C, "FCap_C"},
};

bool two_weights(PrimKind k) { return k == PrimKind::MergeM || k == PrimKind::SplitM; }

// Maps accept k+l = n; programs keep every strand weight inside [1, n-1].
void check_weights(const Primitive& p, int n, bool top_ok = false) {
    auto bad = [&] { throw std::invalid_argument(prim_name(p.kind) + ": weights out of range for n=" + std::to_string(n)); };
    if (p.k < 1 || p.k > n - 1) bad();
    if (two_weights(p.kind) && (p.l < 1 || p.k + p.l > (top_ok ? n : n - 1))) bad();
}

// Image of one basis tuple under p.
Terms apply_local(const Primitive& p, int n, const Monomial& in) {
    const int k = p.k, l = p.l;
    Terms out;
    switch (p.kind) {
    case PrimKind::MergeM: {
        const Word &b1 = in[0].word, &b2 = in[1].word;
        if (b1.bits & b2.bits) return out;
        out.push_back({{{Word{n, b1.bits | b2.bits}, false}}, LaurentPoly::neg_q_pow(inversion_ell(b1, b2))});
        return out;
    }
    case PrimKind::SplitM: {
        const Word& b = in[0].word;
        for (const Word& b1 : words_of_weight(n, k)) {
            if ((b1.bits & b.bits) != b1.bits) continue;
            Word b2{n, b.bits & ~b1.bits};
            out.push_back({{{b1, false}, {b2, false}}, sgn_pow(long(k) * l) * LaurentPoly::neg_q_pow(-inversion_ell(b2, b1))});
        }
        return out;
    }
    case PrimKind::Dual_D:
    case PrimKind::Dual_D_signed: {
        const Word& b = in[0].word;
        int s = p.kind == PrimKind::Dual_D_signed ? sgn_pow(long(k) * (n - k)) : 1;
        out.push_back({{{b.complement(), true}}, s * LaurentPoly::neg_q_pow(inversion_ell(b, b.complement()))});
        return out;
    }
    case PrimKind::DualInv:
    case PrimKind::DualInv_signed: {
        const Word& c = in[0].word;
        int s = p.kind == PrimKind::DualInv_signed ? sgn_pow(long(k) * (n - k)) : 1;
        out.push_back({{{c.complement(), false}}, s * LaurentPoly::neg_q_pow(-inversion_ell(c.complement(), c))});
        return out;
    }
    case PrimKind::CupLeft_C_L:
        for (const Word& b : words_of_weight(n, k)) out.push_back({{{b, false}, {b, true}}, 1});
        return out;
    case PrimKind::CupRight_C_R:
        for (const Word& b : words_of_weight(n, k))
            out.push_back({{{b, true}, {b, false}}, LaurentPoly::q_pow(k * (n - k) - 2 * inversion_ell(b, b.complement()))});
        return out;
    case PrimKind::CapLeft_CL:
        if (in[0].word == in[1].word) out.push_back({{}, 1});
        return out;
    case PrimKind::CapRight_CR:
        if (in[0].word == in[1].word)
            out.push_back({{}, LaurentPoly::q_pow(2 * inversion_ell(in[0].word, in[0].word.complement()) - k * (n - k))});
        return out;
    case PrimKind::FCap_C: {
        LaurentPoly c = fcap(k, in[0], in[1]);
        if (!c.is_zero()) out.push_back({{}, c});
        return out;
    }
    }
    return out;
}

std::string sig_str(const Signature& s) {
    std::string r = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) r += ",";
        r += std::to_string(s[i].k) + (s[i].dual ? "*" : "");
    }
    return r + ")";
}

Signature apply_sig(const Signature& in, const Layer& L, int n, std::size_t index) {
    Signature want = prim_input(L.prim, n);
    auto fail = [&] {
        throw std::invalid_argument("layer " + std::to_string(index) + ": " + prim_name(L.prim.kind) + " at slot " +
                                    std::to_string(L.slot) + " does not match signature " + sig_str(in));
    };
    if (L.slot < 0 || L.slot + want.size() > in.size()) fail();
    for (std::size_t i = 0; i < want.size(); ++i)
        if (!(in[L.slot + i] == want[i])) fail();
    Signature out(in.begin(), in.begin() + L.slot);
    for (const SlotType& t : prim_output(L.prim, n)) out.push_back(t);
    out.insert(out.end(), in.begin() + L.slot + want.size(), in.end());
    return out;
}

int up_weight(const SlotType& t, int n) { return t.dual ? n - t.k : t.k; }

// Geometry state for render_program. Edge points run tail to head and include
// the end positions; an open end is the last (head) or first (tail) point.
struct PEdge {
    std::string tail, head;  // empty while open
    int weight = 1;
    std::deque<Point> pts;
    bool loop = false;
    bool dead = false;
};

struct Strand {
    int edge;
    bool head_end;
    double x;
};

struct Renderer {
    int n;
    std::vector<PEdge> edges;
    std::vector<InteriorVertex> verts;
    std::vector<Strand> strands;

    void push(Strand& s, Point p) {
        auto& d = edges[s.edge].pts;
        if (s.head_end) {
            if (d.empty() || !(d.back() == p)) d.push_back(p);
        } else if (d.empty() || !(d.front() == p)) {
            d.push_front(p);
        }
    }

    void close_at(Strand& s, const std::string& v) {
        (s.head_end ? edges[s.edge].head : edges[s.edge].tail) = v;
    }

    void flip(int e) {
        PEdge& E = edges[e];
        std::swap(E.tail, E.head);
        E.weight = n - E.weight;
        std::reverse(E.pts.begin(), E.pts.end());
        for (Strand& s : strands)
            if (s.edge == e) s.head_end = !s.head_end;
    }

    std::string new_vertex(Point p) {
        std::string id = "v" + std::to_string(verts.size() + 1);
        verts.push_back({id, p.x, p.y});
        return id;
    }

    int new_edge(std::string tail, int weight, std::deque<Point> pts) {
        edges.push_back({std::move(tail), "", weight, std::move(pts), false, false});
        return static_cast<int>(edges.size()) - 1;
    }

    // joins the open ends of strands a (left) and b (right) over a cap at height ym
    void cap(std::size_t a, std::size_t b, double ym) {
        Point pa{strands[a].x, ym}, pb{strands[b].x, ym};
        if (strands[a].edge == strands[b].edge) {
            PEdge& E = edges[strands[a].edge];
            if (strands[a].head_end) {
                E.pts.push_back(pa);
                E.pts.push_back(pb);
            } else {
                E.pts.push_back(pb);
                E.pts.push_back(pa);
            }
            E.loop = true;
            return;
        }
        if (!strands[a].head_end) flip(strands[a].edge);
        if (strands[b].head_end) flip(strands[b].edge);
        int ea = strands[a].edge, eb = strands[b].edge;
        PEdge &A = edges[ea], &B = edges[eb];
        if (A.weight != B.weight) throw std::logic_error("render: cap joins strands of different weight");
        A.pts.push_back(pa);
        A.pts.push_back(pb);
        A.pts.insert(A.pts.end(), B.pts.begin(), B.pts.end());
        A.head = B.head;
        B.dead = true;
        for (Strand& s : strands)
            if (s.edge == eb) s.edge = ea;
    }
};

}  // namespace

std::string prim_name(PrimKind k) {
    for (const auto& p : kPrims)
        if (p.kind == k) return p.name;
    return "?";
}

Signature prim_input(const Primitive& p, int n) {
    const int k = p.k, l = p.l;
    switch (p.kind) {
    case PrimKind::MergeM: return {{k, false}, {l, false}};
    case PrimKind::SplitM: return {{k + l, false}};
    case PrimKind::Dual_D:
    case PrimKind::Dual_D_signed: return {{k, false}};
    case PrimKind::DualInv:
    case PrimKind::DualInv_signed: return {{n - k, true}};
    case PrimKind::CupLeft_C_L:
    case PrimKind::CupRight_C_R: return {};
    case PrimKind::CapLeft_CL: return {{k, true}, {k, false}};
    case PrimKind::CapRight_CR: return {{k, false}, {k, true}};
    case PrimKind::FCap_C: return {{k, false}, {n - k, false}};
    }
    return {};
}

Signature prim_output(const Primitive& p, int n) {
    const int k = p.k, l = p.l;
    switch (p.kind) {
    case PrimKind::MergeM: return {{k + l, false}};
    case PrimKind::SplitM: return {{k, false}, {l, false}};
    case PrimKind::Dual_D:
    case PrimKind::Dual_D_signed: return {{n - k, true}};
    case PrimKind::DualInv:
    case PrimKind::DualInv_signed: return {{k, false}};
    case PrimKind::CupLeft_C_L: return {{k, false}, {k, true}};
    case PrimKind::CupRight_C_R: return {{k, true}, {k, false}};
    default: return {};
    }
}

LaurentPoly fcap(int k, const Factor& left, const Factor& right) {
    int n = left.word.n;
    if (left.dual || right.dual || right.word.n != n || left.word.weight() != k || right.word.weight() != n - k)
        throw std::invalid_argument("fcap: expected V_k (x) V_{n-k}");
    if (right.word != left.word.complement()) return {};
    return LaurentPoly::neg_q_pow(inversion_ell(left.word, left.word.complement()));
}

WebVector apply_primitive(const Primitive& p, int slot, int n, const WebVector& v) {
    check_weights(p, n, true);
    const Signature want = prim_input(p, n);
    const std::size_t arity = want.size();
    Terms raw;
    for (const auto& [m, c] : v.terms()) {
        if (slot < 0 || slot + arity > m.size())
            throw std::invalid_argument(prim_name(p.kind) + ": slot " + std::to_string(slot) + " out of range");
        Monomial in(m.begin() + slot, m.begin() + slot + arity);
        for (std::size_t i = 0; i < arity; ++i)
            if (in[i].dual != want[i].dual || in[i].word.n != n || in[i].word.weight() != want[i].k)
                throw std::invalid_argument(prim_name(p.kind) + ": signature mismatch at slot " + std::to_string(slot));
        for (auto& [img, s] : apply_local(p, n, in)) {
            Monomial r(m.begin(), m.begin() + slot);
            r.insert(r.end(), img.begin(), img.end());
            r.insert(r.end(), m.begin() + slot + arity, m.end());
            raw.push_back({std::move(r), c * s});
        }
    }
    return vector_canonicalize(raw);
}

std::vector<Signature> program_signatures(const Program& p) {
    if (p.n < 2) throw std::invalid_argument("program: n must be at least 2");
    std::vector<Signature> out;
    Signature cur;
    for (std::size_t i = 0; i < p.layers.size(); ++i) {
        check_weights(p.layers[i].prim, p.n);
        cur = apply_sig(cur, p.layers[i], p.n, i);
        out.push_back(cur);
    }
    return out;
}

WebVector eval_program(const Program& p) {
    program_signatures(p);
    WebVector v = WebVector::scalar(1);
    for (const Layer& L : p.layers) v = apply_primitive(L.prim, L.slot, p.n, v);
    return v;
}

int program_sign(const Program& p) {
    int s = 1;
    for (const Layer& L : p.layers) {
        const int k = L.prim.k, n = p.n;
        switch (L.prim.kind) {
        case PrimKind::SplitM: s *= sgn_pow(long(k) * L.prim.l); break;
        case PrimKind::CupRight_C_R:
        case PrimKind::CapRight_CR:
        case PrimKind::Dual_D_signed:
        case PrimKind::DualInv_signed: s *= sgn_pow(long(k) * (n - k)); break;
        default: break;
        }
    }
    return s;
}

WebGraph render_program(const Program& p) {
    program_signatures(p);
    const int n = p.n;
    const int L = static_cast<int>(p.layers.size());
    Renderer r{n, {}, {}, {}};
    for (int t = 0; t < L; ++t) {
        const Layer& layer = p.layers[t];
        const double y0 = t - L - 1.0;
        for (std::size_t i = 0; i < r.strands.size(); ++i) {
            r.strands[i].x = 2.0 * (i + 1);
            r.push(r.strands[i], {r.strands[i].x, y0 + 0.2});
        }
        const std::size_t s = layer.slot;
        const std::size_t arity = prim_input(layer.prim, n).size();
        std::vector<Strand> made;
        switch (layer.prim.kind) {
        case PrimKind::CupLeft_C_L:
        case PrimKind::CupRight_C_R: {
            double xl = s > 0 ? r.strands[s - 1].x : 0.0;
            double xr = s < r.strands.size() ? r.strands[s].x : xl + 2.0;
            double mid = (xl + xr) / 2;
            Signature out = prim_output(layer.prim, n);
            int e = r.new_edge("", up_weight(out[1], n),
                               {{mid - 0.5, y0 + 1}, {mid - 0.5, y0 + 0.5}, {mid + 0.5, y0 + 0.5}, {mid + 0.5, y0 + 1}});
            made = {{e, false, mid - 0.5}, {e, true, mid + 0.5}};
            break;
        }
        case PrimKind::MergeM: {
            Strand &a = r.strands[s], &b = r.strands[s + 1];
            Point v{(a.x + b.x) / 2, y0 + 0.6};
            std::string id = r.new_vertex(v);
            for (Strand* x : {&a, &b}) {
                r.push(*x, {x->x, y0 + 0.6});
                r.push(*x, v);
                r.close_at(*x, id);
            }
            int e = r.new_edge(id, layer.prim.k + layer.prim.l, {v, {v.x, y0 + 1}});
            made = {{e, true, v.x}};
            break;
        }
        case PrimKind::SplitM: {
            Strand& a = r.strands[s];
            Point v{a.x, y0 + 0.5};
            r.push(a, v);
            std::string id = r.new_vertex(v);
            r.close_at(a, id);
            int e1 = r.new_edge(id, layer.prim.k, {v, {v.x - 0.5, v.y}, {v.x - 0.5, y0 + 1}});
            int e2 = r.new_edge(id, layer.prim.l, {v, {v.x + 0.5, v.y}, {v.x + 0.5, y0 + 1}});
            made = {{e1, true, v.x - 0.5}, {e2, true, v.x + 0.5}};
            break;
        }
        case PrimKind::CapLeft_CL:
        case PrimKind::CapRight_CR:
        case PrimKind::FCap_C:
            r.cap(s, s + 1, y0 + 0.5);
            break;
        default:  // duals keep the geometry
            made = {r.strands[s]};
            break;
        }
        // cups, merges and splits already drew their outputs up to the layer top
        const bool draws = layer.prim.kind == PrimKind::CupLeft_C_L || layer.prim.kind == PrimKind::CupRight_C_R ||
                           layer.prim.kind == PrimKind::MergeM || layer.prim.kind == PrimKind::SplitM;
        std::vector<Strand> next(r.strands.begin(), r.strands.begin() + s);
        next.insert(next.end(), made.begin(), made.end());
        next.insert(next.end(), r.strands.begin() + s + arity, r.strands.end());
        for (std::size_t i = 0; i < next.size(); ++i) {
            bool fresh = draws && i >= s && i < s + made.size();
            if (!fresh) r.push(next[i], {next[i].x, y0 + 1});
        }
        r.strands = std::move(next);
    }

    WebGraph g;
    g.n = n;
    for (std::size_t i = 0; i < r.strands.size(); ++i) {
        std::string id = "b" + std::to_string(i + 1);
        double x = 2.0 * (i + 1);
        g.boundary.push_back({id, x});
        r.push(r.strands[i], {x, 0.0});
        r.close_at(r.strands[i], id);
    }
    g.interior = r.verts;
    int count = 0;
    for (const PEdge& E : r.edges) {
        if (E.dead) continue;
        Edge e;
        e.id = "e" + std::to_string(++count);
        e.weight = E.weight;
        if (E.loop) {
            e.via.assign(E.pts.begin(), E.pts.end());
        } else {
            e.tail = E.tail;
            e.head = E.head;
            if (E.pts.size() > 2) e.via.assign(E.pts.begin() + 1, E.pts.end() - 1);
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

bool compare_f_g(const Program& p) {
    const auto sigs = program_signatures(p);
    if (!sigs.empty())
        for (const SlotType& t : sigs.back())
            if (t.dual) return false;
    WebGraph g = render_program(p);
    if (!validate(g).ok()) return false;
    return web_vector(g) == LaurentPoly(program_sign(p)) * eval_program(p);
}

Program program_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("layers"))
        throw std::invalid_argument("program: expected object with 'n' and 'layers'");
    Program p;
    p.n = j.at("n").get<int>();
    const Json& layers = j.at("layers");
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const std::string where = "program.layers[" + std::to_string(i) + "]";
        if (!layers[i].contains("slots") || !layers[i]["slots"].is_array())
            throw std::invalid_argument(where + ": missing field 'slots'");
        Layer L;
        int found = 0, pos = 0;
        for (const Json& s : layers[i]["slots"]) {
            if (s.is_string() && s.get<std::string>() == "id") {
                ++pos;
                continue;
            }
            if (!s.is_object() || !s.contains("prim")) throw std::invalid_argument(where + ": bad slot");
            std::string name = s.at("prim").get<std::string>();
            if (name == "SplitM") name = "SplitM'";
            bool known = false;
            for (const auto& pi : kPrims)
                if (name == pi.name) {
                    L.prim.kind = pi.kind;
                    known = true;
                }
            if (!known) throw std::invalid_argument(where + ": unknown primitive '" + name + "'");
            if (!s.contains("k")) throw std::invalid_argument(where + ": missing field 'k'");
            L.prim.k = s.at("k").get<int>();
            if (two_weights(L.prim.kind)) {
                if (!s.contains("l")) throw std::invalid_argument(where + ": missing field 'l'");
                L.prim.l = s.at("l").get<int>();
            }
            L.slot = pos;
            ++found;
            pos += static_cast<int>(prim_input(L.prim, p.n).size());
        }
        if (found != 1) throw std::invalid_argument(where + ": expected exactly one primitive");
        p.layers.push_back(L);
        Signature in = i == 0 ? Signature{} : program_signatures(p).rbegin()[1];
        if (static_cast<std::size_t>(pos) != in.size())
            throw std::invalid_argument(where + ": slots cover " + std::to_string(pos) + " factors, signature has " +
                                        std::to_string(in.size()));
    }
    program_signatures(p);
    return p;
}

Json program_to_json(const Program& p) {
    const auto sigs = program_signatures(p);
    Json layers = Json::array();
    for (std::size_t i = 0; i < p.layers.size(); ++i) {
        const Layer& L = p.layers[i];
        std::size_t width = i == 0 ? 0 : sigs[i - 1].size();
        std::size_t arity = prim_input(L.prim, p.n).size();
        Json slots = Json::array();
        for (int s = 0; s < L.slot; ++s) slots.push_back("id");
        Json prim = {{"prim", prim_name(L.prim.kind)}, {"k", L.prim.k}};
        if (two_weights(L.prim.kind)) prim["l"] = L.prim.l;
        slots.push_back(prim);
        for (std::size_t s = L.slot + arity; s < width; ++s) slots.push_back("id");
        layers.push_back({{"slots", slots}});
    }
    return {{"n", p.n}, {"layers", layers}};
}

Program cup_program(int n, int k) {
    return {n, {{0, {PrimKind::CupLeft_C_L, n - k}}, {1, {PrimKind::DualInv, k}}}};
}

Program tripod_program(int n, int k, int l, int m) {
    if (k + l + m == n)
        return {n, {{0, {PrimKind::CupLeft_C_L, k + l}}, {1, {PrimKind::DualInv, m}}, {0, {PrimKind::SplitM, k, l}}}};
    if (k + l + m == 2 * n)
        return {n,
                {{0, {PrimKind::CupLeft_C_L, n - m}},
                 {1, {PrimKind::DualInv, m}},
                 {1, {PrimKind::CupLeft_C_L, n - l}},
                 {2, {PrimKind::DualInv, l}},
                 {0, {PrimKind::MergeM, n - m, n - l}}}};
    throw std::invalid_argument("tripod_program: weights must sum to n or 2n");
}

void append_at(Program& p, const Program& sub, int slot) {
    for (Layer L : sub.layers) {
        L.slot += slot;
        p.layers.push_back(L);
    }
}

Program running_sl4_program() {
    Program p{4, {}};
    append_at(p, tripod_program(4, 1, 2, 1), 0);  // (1,2,1)
    append_at(p, tripod_program(4, 3, 2, 3), 3);  // (1,2,1,3,2,3)
    append_at(p, tripod_program(4, 2, 3, 3), 5);  // (1,2,1,3,2,2,3,3,3)
    append_at(p, tripod_program(4, 1, 2, 1), 7);  // (1,2,1,3,2,2,3,1,2,1,3,3)
    for (auto [slot, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {1, 2}}) p.layers.push_back({slot, {PrimKind::FCap_C, k}});
    return p;
}

Program random_program(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Program p{n, {}};
    Signature cur;
    for (int t = 0; t < 3; ++t) {
        std::vector<Layer> options;
        const int w = static_cast<int>(cur.size());
        for (int s = 0; s <= w; ++s)
            for (int k = 1; k < n; ++k) {
                options.push_back({s, {PrimKind::CupLeft_C_L, k}});
                options.push_back({s, {PrimKind::CupRight_C_R, k}});
            }
        if (t > 0)
            for (int s = 0; s < w; ++s) {
                const SlotType a = cur[s];
                if (a.dual) {
                    options.push_back({s, {PrimKind::DualInv, n - a.k}});
                    options.push_back({s, {PrimKind::DualInv_signed, n - a.k}});
                } else {
                    options.push_back({s, {PrimKind::Dual_D, a.k}});
                    options.push_back({s, {PrimKind::Dual_D_signed, a.k}});
                    for (int k = 1; k < a.k; ++k) options.push_back({s, {PrimKind::SplitM, k, a.k - k}});
                }
                if (s + 1 < w) {
                    const SlotType b = cur[s + 1];
                    if (!a.dual && !b.dual && a.k + b.k < n) options.push_back({s, {PrimKind::MergeM, a.k, b.k}});
                    if (!a.dual && !b.dual && a.k + b.k == n) options.push_back({s, {PrimKind::FCap_C, a.k}});
                    if (a.dual && !b.dual && a.k == b.k) options.push_back({s, {PrimKind::CapLeft_CL, a.k}});
                    if (!a.dual && b.dual && a.k == b.k) options.push_back({s, {PrimKind::CapRight_CR, a.k}});
                }
            }
        Layer L = options[pick(0, static_cast<int>(options.size()) - 1)];
        cur = apply_sig(cur, L, n, p.layers.size());
        p.layers.push_back(L);
    }
    for (std::size_t s = 0; s < cur.size(); ++s)
        if (cur[s].dual) {
            Layer L{static_cast<int>(s), {pick(0, 1) ? PrimKind::DualInv : PrimKind::DualInv_signed, n - cur[s].k}};
            cur = apply_sig(cur, L, n, p.layers.size());
            p.layers.push_back(L);
        }
    return p;
}

}  // namespace webcalc
