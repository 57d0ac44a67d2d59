#include "webcalc/tensor.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace webcalc {

Word Word::from_string(std::string_view s) {
    if (s.empty() || s.size() > 31) throw std::invalid_argument("bad word length: '" + std::string(s) + "'");
    Word w{static_cast<int>(s.size()), 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.bits |= 1u << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bad word: '" + std::string(s) + "'");
    }
    return w;
}

int Word::weight() const { return std::popcount(bits); }

Word Word::swapped(int i) const {
    Word w = *this;
    bool a = at(i), b = at(i + 1);
    w.bits &= ~((1u << (i - 1)) | (1u << i));
    if (a) w.bits |= 1u << i;
    if (b) w.bits |= 1u << (i - 1);
    return w;
}

std::vector<int> Word::positions() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (at(i)) out.push_back(i);
    return out;
}

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (at(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

std::vector<Word> words_of_weight(int n, int k) {
    std::vector<Word> out;
    if (k < 0 || k > n) return out;
    for (std::uint32_t b = 0; b < (1u << n); ++b)
        if (std::popcount(b) == k) out.push_back({n, b});
    return out;
}

int inversion_ell(const Word& b, const Word& b2) {
    if (b.n != b2.n) throw std::invalid_argument("inversion_ell: length mismatch");
    int count = 0;
    int ones_before = 0;
    for (int j = 1; j <= b.n; ++j) {
        if (b2.at(j)) count += ones_before;
        if (b.at(j)) ++ones_before;
    }
    return count;
}

bool lex_less(const Factor& a, const Factor& b) {
    if (a.word.bits != b.word.bits) {
        if (a.word.weight() != b.word.weight()) return a.word.positions() < b.word.positions();
        // equal sizes: the lowest index in exactly one subset decides
        std::uint32_t diff = a.word.bits ^ b.word.bits;
        return (a.word.bits & diff & (~diff + 1u)) != 0;
    }
    return a.dual < b.dual;
}

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (lex_less(a[i], b[i])) return true;
        if (lex_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

std::optional<std::pair<LaurentPoly, Word>> wedge_sort_scalar(int n, const std::vector<int>& indices) {
    Word w{n, 0};
    int ascents = 0;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        int i = indices[a];
        if (i < 1 || i > n) throw std::invalid_argument("wedge_sort_scalar: index out of range");
        if (w.at(i)) return std::nullopt;
        w.bits |= 1u << (i - 1);
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            if (indices[a] < indices[b]) ++ascents;
    }
    return std::make_pair(LaurentPoly::neg_q_pow(ascents), w);
}

WebVector WebVector::scalar(const LaurentPoly& c) {
    WebVector v;
    v.add({}, c);
    return v;
}

void WebVector::check_ambient(const Monomial& m) const {
    if (terms_.empty()) return;
    const Monomial& r = terms_.begin()->first;
    bool ok = r.size() == m.size();
    for (std::size_t i = 0; ok && i < m.size(); ++i)
        ok = r[i].dual == m[i].dual && r[i].word.n == m[i].word.n &&
             r[i].word.weight() == m[i].word.weight();
    if (!ok) throw std::invalid_argument("WebVector: mixed ambient spaces");
}

void WebVector::add(const Monomial& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    check_ambient(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly WebVector::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

WebVector& WebVector::operator+=(const WebVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

WebVector& WebVector::operator-=(const WebVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

WebVector operator*(const LaurentPoly& c, const WebVector& v) {
    WebVector r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : v.terms_) r.terms_.emplace(m, c * x);
    return r;
}

bool operator==(const WebVector& a, const WebVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
        if (!(i->first == j->first) || i->second != j->second) return false;
    return true;
}

WebVector vector_canonicalize(const std::vector<std::pair<Monomial, LaurentPoly>>& raw) {
    WebVector v;
    for (const auto& [m, c] : raw) v.add(m, c);
    return v;
}

namespace {

std::string factor_str(const Factor& f) {
    std::ostringstream os;
    auto pos = f.word.positions();
    // dual factors keep the descending basis order
    if (f.dual) std::reverse(pos.begin(), pos.end());
    bool wrap = f.dual && pos.size() > 1;
    if (wrap) os << '(';
    for (std::size_t i = 0; i < pos.size(); ++i) os << (i ? "∧" : "") << 'x' << pos[i];
    if (wrap) os << ')';
    if (f.dual) os << '*';
    return os.str();
}

}  // namespace

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "⊗" : "") + factor_str(m[i]);
    return s;
}

std::string vector_text(const WebVector& v) {
    if (v.is_zero()) return "0";
    if (v.size() == 1 && v.terms().begin()->first.empty()) return v.terms().begin()->second.str();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c0] : v.terms()) {
        // x_T is the descending wedge; ascending display rescales by (-q)^{-C(k,2)}
        int shift = 0;
        for (const auto& f : m) {
            if (f.dual) continue;
            int k = f.word.weight();
            shift -= k * (k - 1) / 2;
        }
        LaurentPoly c = c0 * LaurentPoly::neg_q_pow(shift);
        std::string body = monomial_str(m);
        bool neg = c.is_monomial() && c.coeff(c.low()) < 0;
        LaurentPoly mag = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string cs = mag.str();
        if (body.empty()) {
            os << (mag.is_monomial() ? cs : "(" + cs + ")");
            continue;
        }
        if (mag == LaurentPoly(1)) {
            os << body;
        } else if (mag.is_monomial()) {
            os << cs << ' ' << body;
        } else {
            os << '(' << cs << ") " << body;
        }
    }
    return os.str();
}

}  // namespace webcalc
