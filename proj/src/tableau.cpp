#include "webcalc/tableau.hpp"

#include "webcalc/invariant.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace webcalc {

StandardTableau StandardTableau::from_word(int n, const std::vector<int>& word) {
    StandardTableau t;
    t.n = n;
    t.rows.assign(static_cast<std::size_t>(std::max(n, 0)), {});
    for (std::size_t j = 0; j < word.size(); ++j) {
        int r = word[j];
        if (r < 1 || r > n) throw std::invalid_argument("tableau word: row " + std::to_string(r) + " out of range");
        t.rows[r - 1].push_back(static_cast<int>(j) + 1);
    }
    return t;
}

StandardTableau StandardTableau::from_word(int n, const std::string& digits) {
    std::vector<int> w;
    for (char ch : digits) {
        if (ch < '1' || ch > '9') throw std::invalid_argument("tableau word: bad character");
        w.push_back(ch - '0');
    }
    return from_word(n, w);
}

std::vector<int> StandardTableau::word() const {
    std::vector<int> w(static_cast<std::size_t>(size()), 0);
    for (int r = 0; r < n; ++r)
        for (int e : rows[r])
            if (e >= 1 && e <= size()) w[e - 1] = r + 1;
    return w;
}

bool validate_tableau(const StandardTableau& t) {
    if (t.n < 1 || static_cast<int>(t.rows.size()) != t.n) return false;
    const int c = t.cols();
    std::vector<bool> seen(static_cast<std::size_t>(t.n * c) + 1, false);
    for (int r = 0; r < t.n; ++r) {
        if (static_cast<int>(t.rows[r].size()) != c) return false;
        for (int j = 0; j < c; ++j) {
            int e = t.rows[r][j];
            if (e < 1 || e > t.n * c || seen[e]) return false;
            seen[e] = true;
            if (j > 0 && t.rows[r][j - 1] >= e) return false;
            if (r > 0 && t.rows[r - 1][j] >= e) return false;
        }
    }
    return true;
}

MulticolorMatching matching_from_tableau(const StandardTableau& t) {
    if (!validate_tableau(t)) throw std::invalid_argument("matching_from_tableau: not a standard rectangular tableau");
    const std::vector<int> w = t.word();
    MulticolorMatching out;
    out.m = static_cast<int>(w.size());
    for (int c = 1; c < t.n; ++c) {
        std::vector<int> open;
        for (int j = 1; j <= out.m; ++j) {
            if (w[j - 1] == c) open.push_back(j);
            if (w[j - 1] == c + 1) {
                if (open.empty()) throw std::logic_error("matching_from_tableau: unmatched closer");
                out.arcs.push_back({c, open.back(), j});
                open.pop_back();
            }
        }
        if (!open.empty()) throw std::logic_error("matching_from_tableau: unmatched opener");
    }
    return out;
}

namespace {

constexpr double kDelta = 0.05;
constexpr double kShelf = 0.2;  // depth of the boundary resolution vertices

// V-shaped arc traversed from the closer to the opener.
struct ArcPath {
    Arc arc;
    double s;
    Point p0, corner, p1;
    double half;  // length of each branch

    ArcPath(const Arc& a, double eps) : arc(a), s(1 + a.color * eps) {
        p0 = {double(a.closer), 0};
        p1 = {double(a.opener), 0};
        corner = {(a.opener + a.closer) / 2.0, -s * (a.closer - a.opener) / 2.0};
        half = dist(p0, corner);
    }
    Point at(double t) const {
        if (t <= half) return {p0.x + (corner.x - p0.x) * t / half, p0.y + (corner.y - p0.y) * t / half};
        double u = (t - half) / half;
        return {corner.x + (p1.x - corner.x) * u, corner.y + (p1.y - corner.y) * u};
    }
    double length() const { return 2 * half; }
    // arc length from either end down to the shelf depth
    double shelf() const { return kShelf * std::sqrt(1 + s * s) / s; }
};

struct Crossing {
    int lo, hi;  // arc indices, color(lo) < color(hi)
    Point x;
    double t_lo, t_hi;
};

bool segment_cross(Point a, Point b, Point c, Point d, Point& out) {
    double r1 = b.x - a.x, r2 = b.y - a.y, s1 = d.x - c.x, s2 = d.y - c.y;
    double den = r1 * s2 - r2 * s1;
    if (std::abs(den) < 1e-12) return false;
    double t = ((c.x - a.x) * s2 - (c.y - a.y) * s1) / den;
    double u = ((c.x - a.x) * r2 - (c.y - a.y) * r1) / den;
    if (t <= 1e-9 || t >= 1 - 1e-9 || u <= 1e-9 || u >= 1 - 1e-9) return false;
    out = {a.x + t * r1, a.y + t * r2};
    return true;
}

// the first branch runs from the closer leftward to the corner
double param_of(const ArcPath& p, Point x) { return x.x >= p.corner.x ? dist(p.p0, x) : p.half + dist(p.corner, x); }

// Where an edge meets an arc: the parameter on the arc and the node it ends at.
struct Attach {
    double t;
    std::string node;
    Point pos;
};

class Builder {
public:
    Builder(const StandardTableau& t, double eps) : t_(t), eps_(eps) {}

    bool run(TableauWeb& out) {
        const MulticolorMatching mm = matching_from_tableau(t_);
        const std::vector<int> w = t_.word();
        const int n = t_.n, m = mm.m;
        for (const Arc& a : mm.arcs) paths_.emplace_back(a, eps_);
        if (!find_crossings()) return false;

        g_.n = n;
        for (int j = 1; j <= m; ++j) g_.boundary.push_back({"b" + std::to_string(j), double(j)});

        // boundary resolution for positions carrying two arcs
        std::map<int, std::string> shelf;
        for (int j = 1; j <= m; ++j) {
            int r = w[j - 1];
            if (r == 1 || r == n) continue;
            std::string v = vertex({double(j), -kShelf});
            shelf[j] = v;
            edge(v, "b" + std::to_string(j), 1, {}, {{r - 1, Role::Against}, {r, Role::With}});
        }

        std::vector<std::vector<Attach>> att(paths_.size());
        for (std::size_t a = 0; a < paths_.size(); ++a) {
            const ArcPath& p = paths_[a];
            if (shelf.count(p.arc.closer))
                att[a].push_back({p.shelf(), shelf[p.arc.closer], {p.arc.closer * 1.0, -kShelf}});
            else
                att[a].push_back({0, "b" + std::to_string(p.arc.closer), p.p0});
        }
        std::vector<std::vector<Attach>> mid(paths_.size());
        for (const Crossing& c : crossings_) {
            const ArcPath &lo = paths_[c.lo], &hi = paths_[c.hi];
            Point u = hi.at(c.t_hi - kDelta), wv = hi.at(c.t_hi + kDelta);
            std::string uid = vertex(u), wid = vertex(wv);
            edge(uid, wid, hi.arc.color - lo.arc.color, {}, {{lo.arc.color, Role::Against}, {hi.arc.color, Role::With}});
            mid[c.hi].push_back({c.t_hi - kDelta, uid, u});
            mid[c.hi].push_back({c.t_hi + kDelta, wid, wv});
            mid[c.lo].push_back({c.t_lo - kDelta, wid, wv});
            mid[c.lo].push_back({c.t_lo + kDelta, uid, u});
        }
        for (std::size_t a = 0; a < paths_.size(); ++a) {
            std::sort(mid[a].begin(), mid[a].end(), [](const Attach& x, const Attach& y) { return x.t < y.t; });
            att[a].insert(att[a].end(), mid[a].begin(), mid[a].end());
            const ArcPath& p = paths_[a];
            if (shelf.count(p.arc.opener))
                att[a].push_back({p.length() - p.shelf(), shelf[p.arc.opener], {p.arc.opener * 1.0, -kShelf}});
            else
                att[a].push_back({p.length(), "b" + std::to_string(p.arc.opener), p.p1});
            for (std::size_t i = 0; i + 1 < att[a].size(); i += 2) piece(p, att[a][i], att[a][i + 1]);
        }

        if (!validate(g_).ok()) return false;
        out.web = g_;
        out.stranding = {labels_};
        return true;
    }

private:
    bool find_crossings() {
        for (std::size_t a = 0; a < paths_.size(); ++a)
            for (std::size_t b = a + 1; b < paths_.size(); ++b) {
                if (paths_[a].arc.color == paths_[b].arc.color) continue;
                const ArcPath &A = paths_[a], &B = paths_[b];
                const Point pa[3] = {A.p0, A.corner, A.p1}, pb[3] = {B.p0, B.corner, B.p1};
                int hits = 0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        Point x;
                        if (!segment_cross(pa[i], pa[i + 1], pb[j], pb[j + 1], x)) continue;
                        ++hits;
                        bool a_lo = A.arc.color < B.arc.color;
                        int lo = static_cast<int>(a_lo ? a : b), hi = static_cast<int>(a_lo ? b : a);
                        crossings_.push_back({lo, hi, x, param_of(paths_[lo], x), param_of(paths_[hi], x)});
                    }
                if (hits > 1) return false;
            }
        // crossings must be well separated from each other, from corners and from the shelf
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            const Crossing& c = crossings_[i];
            if (c.x.y > -(kShelf + 3 * kDelta)) return false;
            for (int a : {c.lo, c.hi})
                if (dist(c.x, paths_[a].corner) < 3 * kDelta) return false;
            for (std::size_t j = i + 1; j < crossings_.size(); ++j)
                if (dist(c.x, crossings_[j].x) < 4 * kDelta) return false;
        }
        return true;
    }

    std::string vertex(Point p) {
        std::string id = "v" + std::to_string(g_.interior.size() + 1);
        g_.interior.push_back({id, p.x, p.y});
        return id;
    }

    void edge(const std::string& tail, const std::string& head, int weight, std::vector<Point> via,
              const std::map<int, Role>& strands) {
        g_.edges.push_back({"e" + std::to_string(g_.edges.size() + 1), tail, head, weight, std::move(via)});
        Word lab = strands_to_binary(t_.n, strands, false);
        if (lab.weight() != weight) lab = strands_to_binary(t_.n, strands, true);
        labels_.push_back(lab);
    }

    void piece(const ArcPath& p, const Attach& a, const Attach& b) {
        std::vector<Point> pts = {a.pos, p.at(a.t)};
        if (a.t < p.half && b.t > p.half) pts.push_back(p.corner);
        pts.push_back(p.at(b.t));
        pts.push_back(b.pos);
        std::vector<Point> clean;
        for (const Point& q : pts)
            if (clean.empty() || dist(clean.back(), q) > 1e-12) clean.push_back(q);
        std::vector<Point> via(clean.begin() + 1, clean.end() - 1);
        edge(a.node, b.node, p.arc.color, via, {{p.arc.color, Role::With}});
    }

    const StandardTableau& t_;
    double eps_;
    std::vector<ArcPath> paths_;
    std::vector<Crossing> crossings_;
    WebGraph g_;
    std::vector<Word> labels_;
};

}  // namespace

TableauWeb web_from_tableau(const StandardTableau& t, double eps) {
    if (!validate_tableau(t)) throw std::invalid_argument("web_from_tableau: not a standard rectangular tableau");
    for (int attempt = 0; attempt < 5; ++attempt) {
        TableauWeb out;
        Builder b(t, eps * (1 + attempt));
        if (b.run(out)) return out;
    }
    throw std::runtime_error("web_from_tableau: degenerate arc crossings after 5 retries");
}

std::vector<StandardTableau> enumerate_syt(int n, int c) {
    std::vector<StandardTableau> out;
    if (n < 1 || c < 0) return out;
    std::vector<int> word, filled(static_cast<std::size_t>(n), 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(word.size()) == n * c) {
            out.push_back(StandardTableau::from_word(n, word));
            return;
        }
        for (int r = 0; r < n; ++r) {
            if (filled[r] == c || (r > 0 && filled[r] >= filled[r - 1])) continue;
            ++filled[r];
            word.push_back(r + 1);
            rec();
            word.pop_back();
            --filled[r];
        }
    };
    rec();
    return out;
}

std::uint64_t count_syt(int n, int c) { return enumerate_syt(n, c).size(); }

std::uint64_t hook_length_count(int n, int c) {
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= n * c; ++i) num *= i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) den *= (c - j) + (n - i) - 1;
    mpz_class q = num / den;
    return q.get_ui();
}

std::uint64_t count_row_strict(int n, const std::vector<int>& k) {
    long total = 0;
    for (int x : k) {
        if (x < 0 || x > n) return 0;
        total += x;
    }
    if (n < 1 || total % n != 0) return 0;
    const int width = static_cast<int>(total / n);
    // shapes after placing each value; rows stay weakly decreasing
    std::map<std::vector<int>, std::uint64_t> cur{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
    for (int x : k) {
        std::map<std::vector<int>, std::uint64_t> next;
        for (const auto& [shape, ways] : cur)
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (__builtin_popcount(mask) != x) continue;
                std::vector<int> s = shape;
                bool ok = true;
                for (int r = 0; r < n && ok; ++r) {
                    if (mask >> r & 1u) ++s[r];
                    ok = s[r] <= width && (r == 0 || s[r] <= s[r - 1]);
                }
                if (ok) next[s] += ways;
            }
        cur = std::move(next);
    }
    auto it = cur.find(std::vector<int>(static_cast<std::size_t>(n), width));
    return it == cur.end() ? 0 : it->second;
}

RankReport basis_rank(int n, int m) {
    if (n < 2 || m % n != 0) throw std::invalid_argument("basis_rank: n must divide m");
    const auto tableaux = enumerate_syt(n, m / n);
    std::vector<WebVector> vecs;
    std::map<Monomial, std::size_t, LexLess> cols;
    for (const StandardTableau& t : tableaux) {
        vecs.push_back(web_vector(web_from_tableau(t).web));
        for (const auto& [mono, c] : vecs.back().terms()) cols.emplace(mono, 0);
    }
    std::size_t idx = 0;
    for (auto& [mono, i] : cols) i = idx++;
    LaurentMatrix rows(vecs.size(), std::vector<LaurentPoly>(cols.size()));
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (const auto& [mono, c] : vecs[r].terms()) rows[r][cols.at(mono)] = c;
    return {rank_over_q(rows), static_cast<std::size_t>(count_syt(n, m / n))};
}

bool basis_rank_check(int n, int m) { return basis_rank(n, m).ok(); }

Json tableau_to_json(const StandardTableau& t) { return {{"n", t.n}, {"rows", t.rows}}; }

StandardTableau tableau_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("tableau: expected object with 'n' and 'rows'");
    StandardTableau t;
    t.n = j.at("n").get<int>();
    t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (!validate_tableau(t)) throw std::invalid_argument("tableau: not a standard rectangular tableau");
    return t;
}

}  // namespace webcalc
