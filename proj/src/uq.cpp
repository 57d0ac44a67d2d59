#include "webcalc/uq.hpp"

#include <stdexcept>

namespace webcalc {

namespace {

int ambient_n(const WebVector& v) {
    for (const auto& [m, c] : v.terms())
        if (!m.empty()) return m.front().word.n;
    return 0;
}

void check_color(int i, const WebVector& v) {
    int n = ambient_n(v);
    if (n != 0 && (i < 1 || i >= n)) throw std::invalid_argument("color " + std::to_string(i) + " out of range");
}

// exponent of q in K_i on one factor
int k_exponent(int i, const Factor& f) {
    bool a = f.word.at(i), b = f.word.at(i + 1);
    int e = (a && !b) ? 1 : ((!a && b) ? -1 : 0);
    return f.dual ? -e : e;
}

}  // namespace

WebVector act_E(int i, const WebVector& v) {
    check_color(i, v);
    WebVector out;
    for (const auto& [m, c] : v.terms()) {
        int after = 0;
        for (std::size_t j = m.size(); j-- > 0;) {
            const Factor& f = m[j];
            bool a = f.word.at(i), b = f.word.at(i + 1);
            if (!f.dual && !a && b) {
                Monomial r = m;
                r[j].word = f.word.swapped(i);
                out.add(r, c.shifted(after));
            } else if (f.dual && a && !b) {
                Monomial r = m;
                r[j].word = f.word.swapped(i);
                out.add(r, -c.shifted(after + 1));
            }
            after += k_exponent(i, f);
        }
    }
    return out;
}

WebVector act_F(int i, const WebVector& v) {
    check_color(i, v);
    WebVector out;
    for (const auto& [m, c] : v.terms()) {
        int before = 0;
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Factor& f = m[j];
            bool a = f.word.at(i), b = f.word.at(i + 1);
            if (!f.dual && a && !b) {
                Monomial r = m;
                r[j].word = f.word.swapped(i);
                out.add(r, c.shifted(-before));
            } else if (f.dual && !a && b) {
                Monomial r = m;
                r[j].word = f.word.swapped(i);
                out.add(r, -c.shifted(-before - 1));
            }
            before += k_exponent(i, f);
        }
    }
    return out;
}

WebVector act_K(int i, const WebVector& v) {
    check_color(i, v);
    WebVector out;
    for (const auto& [m, c] : v.terms()) {
        int e = 0;
        for (const auto& f : m) e += k_exponent(i, f);
        out.add(m, c.shifted(e));
    }
    return out;
}

WebVector act_K_inv(int i, const WebVector& v) {
    check_color(i, v);
    WebVector out;
    for (const auto& [m, c] : v.terms()) {
        int e = 0;
        for (const auto& f : m) e += k_exponent(i, f);
        out.add(m, c.shifted(-e));
    }
    return out;
}

std::vector<InvarianceRow> invariance_table(const WebVector& v, int n) {
    std::vector<InvarianceRow> rows;
    for (int i = 1; i < n; ++i) {
        rows.push_back({"E", i, act_E(i, v).is_zero()});
        rows.push_back({"F", i, act_F(i, v).is_zero()});
        rows.push_back({"K", i, act_K(i, v) == v});
    }
    return rows;
}

bool check_invariant(const WebVector& v) {
    for (const auto& r : invariance_table(v, ambient_n(v)))
        if (!r.pass) return false;
    return true;
}

}  // namespace webcalc
