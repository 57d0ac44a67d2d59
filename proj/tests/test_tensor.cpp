#include "support.hpp"

#include "webcalc/io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace webcalc;
using test::M;
using test::P;
using test::W;

namespace {

// bubble sort into descending order, one factor -q per swap
std::pair<int, bool> bubble_ascents(std::vector<int> v) {
    int swaps = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size(); ++j) {
            if (v[j] == v[j + 1]) return {0, false};
            if (v[j] < v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                ++swaps;
            }
        }
    return {swaps, true};
}

}  // namespace

TEST_SUITE("tensorspace") {
    TEST_CASE("words") {
        Word w = W("0101");
        CHECK(w.weight() == 2);
        CHECK(w.str() == "0101");
        CHECK(w.complement() == W("1010"));
        CHECK(w.swapped(1) == W("1001"));
        CHECK(w.positions() == std::vector<int>{2, 4});
        CHECK(Word::lambda(4, 2) == W("1100"));
        CHECK(words_of_weight(4, 2).size() == 6);
        for (int n = 2; n <= 5; ++n)
            for (std::uint32_t b = 0; b < (1u << n); ++b)
                for (int i = 1; i < n; ++i) CHECK(Word{n, b}.swapped(i).weight() == Word{n, b}.weight());
    }

    TEST_CASE("inversion_ell") {
        CHECK(inversion_ell(W("10"), W("01")) == 1);
        CHECK(inversion_ell(W("01"), W("10")) == 0);
        CHECK(inversion_ell(W("1010"), W("0101")) == 3);
        CHECK_THROWS_AS(inversion_ell(W("10"), W("100")), std::invalid_argument);
        for (int n = 2; n <= 6; ++n)
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                Word b{n, bits};
                int k = b.weight();
                CHECK(inversion_ell(b, b.complement()) + inversion_ell(b.complement(), b) == k * (n - k));
            }
    }

    TEST_CASE("wedge_sort_scalar") {
        auto r = wedge_sort_scalar(2, {2, 1});
        REQUIRE(r);
        CHECK(r->first == P("1"));
        CHECK(r->second == W("11"));
        r = wedge_sort_scalar(2, {1, 2});
        REQUIRE(r);
        CHECK(r->first == P("-q"));
        CHECK(!wedge_sort_scalar(2, {1, 1}));
        // all permutations of up to 4 indices against bubble sorting
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> idx;
            for (int i = 1; i <= k; ++i) idx.push_back(i + 1);
            do {
                auto [swaps, ok] = bubble_ascents(idx);
                REQUIRE(ok);
                auto s = wedge_sort_scalar(6, idx);
                REQUIRE(s);
                CHECK(s->first == LaurentPoly::neg_q_pow(swaps));
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
    }

    TEST_CASE("lex order") {
        LexLess less;
        // x1 x2 x1 ... is smaller than x1 x2 x3 ...
        CHECK(less(M("1000,0100,1000"), M("1000,0100,0010")));
        CHECK(!less(M("1000,0100,0010"), M("1000,0100,1000")));
        // subsets {1,4} < {2,3}
        CHECK(less(M("1001"), M("0110")));
        CHECK(less(M("1100"), M("1010")));
        CHECK(!less(M("0110"), M("0110")));
    }

    TEST_CASE("vector canonicalization") {
        CHECK(vector_canonicalize({{M("10,01"), P("0")}}).is_zero());
        CHECK(vector_canonicalize({{M("10,01"), P("q")}, {M("10,01"), P("-q")}}).is_zero());
        auto v = vector_canonicalize({{M("01,10"), P("q")}, {M("10,01"), P("1")}, {M("01,10"), P("1")}});
        CHECK(v.size() == 2);
        CHECK(v.coeff(M("01,10")) == P("q + 1"));
        CHECK(vector_to_json(v).dump() == vector_to_json(v).dump());
        std::string a = vector_to_json(v).dump();
        auto w = vector_canonicalize({{M("01,10"), P("1")}, {M("10,01"), P("1")}, {M("01,10"), P("q")}});
        CHECK(vector_to_json(w).dump() == a);
        CHECK(vector_from_json(vector_to_json(v)) == v);
        WebVector mixed;
        mixed.add(M("10,01"), 1);
        CHECK_THROWS_AS(mixed.add(M("10"), 1), std::invalid_argument);
        CHECK_THROWS_AS(mixed.add(M("10,01*"), 1), std::invalid_argument);
    }

    TEST_CASE("text rendering uses ascending wedges") {
        WebVector v;
        v.add(M("10,01"), 1);
        v.add(M("01,10"), P("-q^-1"));
        CHECK(vector_text(v) == "x1⊗x2 - q^-1 x2⊗x1");
        WebVector w;
        w.add(M("110,001"), 1);
        // x_{110} = x2^x1 = (-q)^-1 x1^x2
        CHECK(vector_text(w) == "-q^-1 x1∧x2⊗x3");
        CHECK(vector_text(WebVector::scalar(P("q + 1"))) == "q + 1");
        CHECK(vector_text(WebVector()) == "0");
    }
}
