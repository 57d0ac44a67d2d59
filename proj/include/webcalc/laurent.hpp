#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace webcalc {

// Laurent polynomial in q with integer coefficients.
// Stored densely from the lowest nonzero exponent; zero has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: constants convert implicitly
    LaurentPoly(const mpz_class& c);  // NOLINT

    static LaurentPoly monomial(const mpz_class& c, int e);
    static LaurentPoly q_pow(int e) { return monomial(1, e); }
    // (-q)^e
    static LaurentPoly neg_q_pow(int e);
    static LaurentPoly parse(std::string_view text);

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int e) const;
    // (exponent, coefficient) pairs, descending exponent, zeros skipped
    std::vector<std::pair<int, mpz_class>> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // multiply by q^e
    LaurentPoly shifted(int e) const;
    mpq_class eval(const mpq_class& q) const;
    std::string str() const;

private:
    void trim();

    int low_ = 0;
    std::vector<mpz_class> c_;
};

// Throws std::domain_error unless b divides a in Z[q, q^-1].
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly qint(long k);
LaurentPoly qbinom(long k, long l);
LaurentPoly subst_neg_q(const LaurentPoly& p);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free elimination over Z[q, q^-1].
std::size_t rank_fraction_free(const LaurentMatrix& rows);
// Rank of the matrix with q specialized to a rational value.
std::size_t rank_specialized(const LaurentMatrix& rows, const mpq_class& q);
// Specialization when it certifies full rank, fraction-free otherwise.
std::size_t rank_over_q(const LaurentMatrix& rows);

}  // namespace webcalc
