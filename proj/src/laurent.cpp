#include "webcalc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

namespace webcalc {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int e) {
    LaurentPoly p(c);
    if (!p.is_zero()) p.low_ = e;
    return p;
}

LaurentPoly LaurentPoly::neg_q_pow(int e) { return monomial((e % 2 == 0) ? 1 : -1, e); }

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    while (c_.back() == 0) c_.pop_back();
}

mpz_class LaurentPoly::coeff(int e) const {
    if (is_zero() || e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const {
    std::vector<std::pair<int, mpz_class>> out;
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
        low_ = lo;
    }
    c_.resize(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& q) const {
    if (is_zero()) return 0;
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + mpq_class(c_[i]);
    mpq_class scale = 1;
    mpq_class base = low_ >= 0 ? q : mpq_class(1) / q;
    for (int i = 0; i < std::abs(low_); ++i) scale *= base;
    return acc * scale;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        mpz_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str();
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentPoly out;
    std::size_t i = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad Laurent polynomial '") + std::string(text) +
                                    "': " + why);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected sign");
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        mpz_class c = 1;
        bool has_coeff = i > start;
        if (has_coeff) c = mpz_class(s.substr(start, i - start));
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail("dangling '*'");
            ++i;
        }
        int e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t es = i;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == es || !std::isdigit(static_cast<unsigned char>(s[i - 1])))
                    fail("missing exponent");
                e = std::stoi(s.substr(es, i - es));
            }
        } else if (!has_coeff) {
            fail("expected coefficient or q");
        }
        out += monomial(sign * c, e);
    }
    return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (a.is_zero()) return {};
    // long division on the top terms; exactness forces every quotient coefficient integral
    LaurentPoly rem = a;
    LaurentPoly quot;
    const int bh = b.high();
    const mpz_class blead = b.coeff(bh);
    const int qlow = a.low() - b.low();
    while (!rem.is_zero()) {
        int e = rem.high() - bh;
        if (e < qlow) throw std::domain_error("inexact Laurent division");
        mpz_class r = rem.coeff(rem.high());
        if (!mpz_divisible_p(r.get_mpz_t(), blead.get_mpz_t()))
            throw std::domain_error("inexact Laurent division");
        LaurentPoly t = LaurentPoly::monomial(r / blead, e);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

LaurentPoly qint(long k) {
    if (k == 0) return {};
    if (k < 0) return -qint(-k);
    LaurentPoly r;
    for (long i = 0; i < k; ++i) r += LaurentPoly::q_pow(static_cast<int>(k - 1 - 2 * i));
    return r;
}

LaurentPoly qbinom(long k, long l) {
    if (l < 0) throw std::invalid_argument("qbinom: negative lower index");
    LaurentPoly num = 1;
    LaurentPoly den = 1;
    for (long i = 0; i < l; ++i) {
        num *= qint(k - i);
        den *= qint(i + 1);
    }
    return divide_exact(num, den);
}

LaurentPoly subst_neg_q(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(e % 2 == 0 ? c : mpz_class(-c), e);
    return r;
}

namespace {

std::size_t column_count(const LaurentMatrix& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("rank: ragged matrix");
    return cols;
}

}  // namespace

std::size_t rank_fraction_free(const LaurentMatrix& rows) {
    const std::size_t cols = column_count(rows);
    LaurentMatrix m = rows;
    const std::size_t nr = m.size();
    std::size_t r = 0;
    LaurentPoly prev = 1;
    for (std::size_t col = 0; col < cols && r < nr; ++col) {
        std::size_t p = r;
        while (p < nr && m[p][col].is_zero()) ++p;
        if (p == nr) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                LaurentPoly t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                m[i][j] = divide_exact(t, prev);
            }
            m[i][col] = LaurentPoly();
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

std::size_t rank_specialized(const LaurentMatrix& rows, const mpq_class& q) {
    const std::size_t cols = column_count(rows);
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!rows[i][j].is_zero()) m[i][j] = rows[i][j].eval(q);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            mpq_class f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

std::size_t rank_over_q(const LaurentMatrix& rows) {
    const std::size_t cols = column_count(rows);
    const std::size_t full = std::min(rows.size(), cols);
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> num(2, 97), den(1, 89);
    for (int attempt = 0; attempt < 3; ++attempt) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        if (rank_specialized(rows, q) == full) return full;
    }
    return rank_fraction_free(rows);
}

}  // namespace webcalc
