#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace webcalc;
using test::P;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<int> e(-4, 4), c(-3, 3);
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(c(rng), e(rng));
    return p;
}

}  // namespace

TEST_SUITE("qlaurent") {
    TEST_CASE("canonical form and printing") {
        CHECK(LaurentPoly(0).is_zero());
        CHECK((P("q") - P("q")).is_zero());
        CHECK(P("q^4 + 2 - q^-2").str() == "q^4 + 2 - q^-2");
        CHECK(P("-q").str() == "-q");
        CHECK(P("3*q^2 - 1").str() == "3q^2 - 1");
        CHECK(LaurentPoly().str() == "0");
        CHECK(P("q^-1 + q^-1") == P("2q^-1"));
        CHECK_THROWS_AS(P("q^"), std::invalid_argument);
        CHECK_THROWS_AS(P("2q q"), std::invalid_argument);
        CHECK_THROWS_AS(P("x"), std::invalid_argument);
    }

    TEST_CASE("parse inverts str") {
        std::mt19937 rng(7);
        for (int i = 0; i < 200; ++i) {
            LaurentPoly p = random_poly(rng);
            CHECK(LaurentPoly::parse(p.str()) == p);
        }
    }

    TEST_CASE("qint") {
        CHECK(qint(0).is_zero());
        CHECK(qint(1) == P("1"));
        CHECK(qint(2) == P("q + q^-1"));
        CHECK(qint(-3) == -P("q^2 + 1 + q^-2"));
        for (int k = 1; k < 8; ++k) CHECK(qint(-k) == -qint(k));
        // (q - q^-1)[k] = q^k - q^-k
        for (int k = 0; k < 8; ++k) CHECK(P("q - q^-1") * qint(k) == LaurentPoly::q_pow(k) - LaurentPoly::q_pow(-k));
    }

    TEST_CASE("qbinom") {
        CHECK(qbinom(5, 0) == P("1"));
        CHECK(qbinom(4, 2) == P("q^4 + q^2 + 2 + q^-2 + q^-4"));
        for (int n = 1; n <= 6; ++n) CHECK(qbinom(n, 1) == qint(n));
        CHECK(qbinom(3, 5).is_zero());
        for (int k = 0; k <= 8; ++k) {
            for (int l = 0; l <= k; ++l) {
                LaurentPoly num = 1, den = 1;
                for (int i = 0; i < l; ++i) {
                    num *= qint(k - i);
                    den *= qint(i + 1);
                }
                CHECK(qbinom(k, l) * den == num);
                CHECK(qbinom(k, l) == qbinom(k, k - l));
            }
        }
        CHECK_THROWS_AS(divide_exact(P("q^2 + 1"), P("q + 1")), std::domain_error);
        CHECK_THROWS_AS(divide_exact(P("1"), P("2")), std::domain_error);
    }

    TEST_CASE("subst_neg_q") {
        CHECK(subst_neg_q(qint(4)) == P("-q^3 - q - q^-1 - q^-3"));
        CHECK(subst_neg_q(P("7")) == P("7"));
        std::mt19937 rng(11);
        for (int i = 0; i < 100; ++i) {
            LaurentPoly a = random_poly(rng), b = random_poly(rng);
            CHECK(subst_neg_q(subst_neg_q(a)) == a);
            CHECK(subst_neg_q(a * b) == subst_neg_q(a) * subst_neg_q(b));
        }
    }

    TEST_CASE("ring axioms") {
        std::mt19937 rng(3);
        for (int i = 0; i < 200; ++i) {
            LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == LaurentPoly());
            if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
        }
    }

    TEST_CASE("evaluation") {
        CHECK(P("q^2 + q^-1").eval(mpq_class(2)) == mpq_class(9, 2));
        CHECK(P("-3").eval(mpq_class(5, 7)) == mpq_class(-3));
    }

    TEST_CASE("rank") {
        LaurentMatrix id = {{1, 0}, {0, 1}};
        CHECK(rank_over_q(id) == 2);
        LaurentMatrix zero(3, std::vector<LaurentPoly>(3));
        CHECK(rank_over_q(zero) == 0);
        CHECK(rank_fraction_free(zero) == 0);
        LaurentMatrix dep = {{1, P("q")}, {P("q^-1"), 1}};
        CHECK(rank_over_q(dep) == 1);
        CHECK(rank_fraction_free(dep) == 1);
        // q = 1 is a bad point for this matrix
        LaurentMatrix special = {{1, 1}, {1, P("q")}};
        CHECK(rank_specialized(special, 1) == 1);
        CHECK(rank_over_q(special) == 2);
        CHECK(rank_fraction_free(special) == 2);
        LaurentMatrix wide = {{1, P("q"), P("q^2")}, {P("q"), P("q^2"), P("q^3")}, {0, 1, P("q + q^-1")}};
        CHECK(rank_fraction_free(wide) == 2);
        CHECK(rank_over_q(wide) == 2);
    }

    TEST_CASE("rank agrees with the best of three specializations") {
        std::mt19937 rng(19);
        std::uniform_int_distribution<int> pick(0, 3);
        std::uniform_int_distribution<int> num(2, 50), den(1, 31);
        for (int trial = 0; trial < 30; ++trial) {
            LaurentMatrix m(5, std::vector<LaurentPoly>(5));
            int r = 1 + trial % 5;
            // a product of 5 x r and r x 5 factors has rank at most r
            LaurentMatrix a(5, std::vector<LaurentPoly>(r)), b(r, std::vector<LaurentPoly>(5));
            for (auto& row : a)
                for (auto& x : row) x = pick(rng) ? random_poly(rng, 2) : LaurentPoly();
            for (auto& row : b)
                for (auto& x : row) x = random_poly(rng, 2);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    for (int k = 0; k < r; ++k) m[i][j] += a[i][k] * b[k][j];
            std::size_t best = 0;
            for (int s = 0; s < 3; ++s) {
                mpq_class q(num(rng), den(rng));
                q.canonicalize();
                best = std::max(best, rank_specialized(m, q));
            }
            CHECK(rank_fraction_free(m) == best);
            CHECK(rank_over_q(m) == best);
            CHECK(best <= std::size_t(r));
        }
    }
}
