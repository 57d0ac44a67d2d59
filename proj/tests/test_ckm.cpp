#include "support.hpp"

#include "webcalc/builders.hpp"
#include "webcalc/ckm.hpp"
#include "webcalc/invariant.hpp"
#include "webcalc/uq.hpp"

#include <doctest.h>

using namespace webcalc;
using test::M;
using test::P;

namespace {

WebVector single(const std::string& m, const LaurentPoly& c = 1) {
    WebVector v;
    v.add(M(m), c);
    return v;
}

Primitive prim(PrimKind k, int a, int b = 0) { return {k, a, b}; }

}  // namespace

TEST_SUITE("ckmoracle") {
    TEST_CASE("primitive formulas") {
        CHECK(apply_primitive(prim(PrimKind::MergeM, 1, 1), 2, single("10,01")) == single("11", P("-q")));
        CHECK(apply_primitive(prim(PrimKind::MergeM, 1, 1), 2, single("10,10")).is_zero());
        CHECK(apply_primitive(prim(PrimKind::Dual_D, 1), 2, single("10")) == single("01*", P("-q")));
        CHECK(apply_primitive(prim(PrimKind::Dual_D_signed, 1), 2, single("10")) == single("01*", P("q")));

        // M'_{1,1}(x_11) = -(x_10 (x) x_01 - q^-1 x_01 (x) x_10)
        WebVector split;
        split.add(M("10,01"), -1);
        split.add(M("01,10"), P("q^-1"));
        CHECK(apply_primitive(prim(PrimKind::SplitM, 1, 1), 2, single("11")) == split);

        WebVector cup;
        cup.add(M("100,100*"), 1);
        cup.add(M("010,010*"), 1);
        cup.add(M("001,001*"), 1);
        CHECK(apply_primitive(prim(PrimKind::CupLeft_C_L, 1), 3, WebVector::scalar(1)) == cup);

        WebVector cupr;
        cupr.add(M("10*,10"), P("q^-1"));
        cupr.add(M("01*,01"), P("q"));
        CHECK(apply_primitive(prim(PrimKind::CupRight_C_R, 1), 2, WebVector::scalar(1)) == cupr);

        CHECK(apply_primitive(prim(PrimKind::CapLeft_CL, 1), 2, single("10*,10")) == WebVector::scalar(1));
        CHECK(apply_primitive(prim(PrimKind::CapLeft_CL, 1), 2, single("10*,01")).is_zero());
        CHECK(apply_primitive(prim(PrimKind::CapRight_CR, 1), 2, single("10,10*")) == WebVector::scalar(P("q")));

        // slot handling keeps the surrounding factors
        CHECK(apply_primitive(prim(PrimKind::MergeM, 1, 1), 1, 3, single("100,010,001")) == single("100,011", P("-q")));
        CHECK_THROWS_AS(apply_primitive(prim(PrimKind::MergeM, 1, 1), 2, single("11")), std::invalid_argument);
        CHECK_THROWS_AS(apply_primitive(prim(PrimKind::Dual_D, 1), 2, single("10*")), std::invalid_argument);
    }

    TEST_CASE("fcap values") {
        CHECK(fcap(1, {Word::from_string("10"), false}, {Word::from_string("01"), false}) == P("-q"));
        CHECK(fcap(1, {Word::from_string("10"), false}, {Word::from_string("10"), false}).is_zero());
        CHECK(fcap(1, {Word::from_string("001"), false}, {Word::from_string("110"), false}) == P("1"));
        CHECK_THROWS_AS(fcap(2, {Word::from_string("100"), false}, {Word::from_string("011"), false}), std::invalid_argument);
    }

    TEST_CASE("fcap factors through the dual pairing") {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k < n; ++k)
                for (const Word& a : words_of_weight(n, k))
                    for (const Word& b : words_of_weight(n, n - k)) {
                        WebVector v;
                        v.add({{a, false}, {b, false}}, 1);
                        WebVector w = apply_primitive(prim(PrimKind::Dual_D, k), 0, n, v);
                        w = apply_primitive(prim(PrimKind::CapLeft_CL, n - k), 0, n, w);
                        CHECK(w == WebVector::scalar(fcap(k, {a, false}, {b, false})));
                    }
    }

    TEST_CASE("duality cancellation") {
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k < n; ++k)
                for (const Word& b : words_of_weight(n, k)) {
                    WebVector v;
                    v.add({{b, false}}, 1);
                    WebVector w = apply_primitive(prim(PrimKind::Dual_D, k), n, v);
                    CHECK(apply_primitive(prim(PrimKind::DualInv, k), n, w) == v);
                    w = apply_primitive(prim(PrimKind::Dual_D_signed, k), n, v);
                    CHECK(apply_primitive(prim(PrimKind::DualInv_signed, k), n, w) == v);
                }
    }

    TEST_CASE("program evaluation") {
        CHECK(eval_program({3, {}}) == WebVector::scalar(1));
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k < n; ++k) {
                Program p = cup_program(n, k);
                CHECK(eval_program(p) == web_vector(make_cup_web(n, k)));
                CHECK(program_sign(p) == 1);
            }
        // Type I tripod: expand (M' (x) Id)(Id (x) D^-1)(C_L) by hand
        for (int n = 3; n <= 4; ++n)
            for (int k = 1; k < n; ++k)
                for (int l = 1; k + l < n; ++l) {
                    const int m = n - k - l;
                    WebVector want;
                    for (const Word& b : words_of_weight(n, k + l)) {
                        Word c = b.complement();  // D^-1 of x_b^*
                        LaurentPoly dc = LaurentPoly::neg_q_pow(-inversion_ell(c, b));
                        for (const Word& b1 : words_of_weight(n, k)) {
                            if ((b1.bits & b.bits) != b1.bits) continue;
                            Word b2{n, b.bits & ~b1.bits};
                            LaurentPoly s = LaurentPoly(((k * l) % 2) ? -1 : 1) * LaurentPoly::neg_q_pow(-inversion_ell(b2, b1));
                            want.add({{b1, false}, {b2, false}, {c, false}}, s * dc);
                        }
                    }
                    CHECK(eval_program(tripod_program(n, k, l, m)) == want);
                }
    }

    TEST_CASE("signs") {
        CHECK(program_sign(tripod_program(3, 1, 1, 1)) == -1);
        CHECK(program_sign(tripod_program(4, 1, 2, 1)) == 1);
        CHECK(program_sign(tripod_program(4, 3, 3, 2)) == 1);
        CHECK(program_sign(running_sl4_program()) == 1);
        Program caps{3, {{0, {PrimKind::CupLeft_C_L, 1}}, {2, {PrimKind::CupLeft_C_L, 2}}, {1, {PrimKind::CapLeft_CL, 1}}}};
        CHECK(program_sign(caps) == 1);
    }

    TEST_CASE("signature errors") {
        Program bad{3, {{0, {PrimKind::CupLeft_C_L, 1}}, {0, {PrimKind::MergeM, 1, 1}}}};
        CHECK_THROWS_AS(program_signatures(bad), std::invalid_argument);
        CHECK_THROWS_AS(eval_program(bad), std::invalid_argument);
        Program weights{3, {{0, {PrimKind::CupLeft_C_L, 3}}}};
        CHECK_THROWS_AS(program_signatures(weights), std::invalid_argument);
    }

    TEST_CASE("rendering") {
        WebGraph cup = render_program(cup_program(4, 1));
        CHECK(validate(cup).ok());
        CHECK(boundary_weight_vector(cup) == std::vector<int>{3, 1});
        CHECK(cup.edges.size() == 1);

        WebGraph t = render_program(tripod_program(5, 1, 3, 1));
        REQUIRE(validate(t).ok());
        CHECK(t.interior.size() == 1);
        CHECK(boundary_weight_vector(t) == std::vector<int>{1, 3, 1});
        CHECK(vertex_type(t, t.interior[0].id) == VertexType::TypeI);

        WebGraph t2 = render_program(tripod_program(4, 3, 2, 3));
        REQUIRE(validate(t2).ok());
        CHECK(boundary_weight_vector(t2) == std::vector<int>{3, 2, 3});

        WebGraph r = render_program(running_sl4_program());
        REQUIRE(validate(r).ok());
        CHECK(boundary_weight_vector(r) == std::vector<int>{1, 1, 3, 3});
        CHECK(r.interior.size() == 4);
        CHECK(web_vector(r) == web_vector(make_running_sl4()));

        // cup followed by its cap closes a loop
        Program loop{4, {{0, {PrimKind::CupLeft_C_L, 2}}, {0, {PrimKind::CapRight_CR, 2}}}};
        WebGraph lg = render_program(loop);
        REQUIRE(validate(lg).ok());
        REQUIRE(lg.edges.size() == 1);
        CHECK(lg.edges[0].is_loop());
    }

    TEST_CASE("f equals sgn times g") {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k < n; ++k) CHECK(compare_f_g(cup_program(n, k)));
        for (int n = 3; n <= 5; ++n)
            for (int k = 1; k < n; ++k)
                for (int l = 1; l < n; ++l) {
                    if (k + l < n) CHECK(compare_f_g(tripod_program(n, k, l, n - k - l)));
                    int m = 2 * n - k - l;
                    if (m >= 1 && m < n) CHECK(compare_f_g(tripod_program(n, k, l, m)));
                }
        CHECK(compare_f_g(running_sl4_program()));
        Program dual_top{3, {{0, {PrimKind::CupLeft_C_L, 1}}}};
        CHECK(!compare_f_g(dual_top));
    }

    TEST_CASE("randomized programs") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            int n = 2 + static_cast<int>(seed % 3);
            Program p = random_program(n, seed);
            INFO("seed " << seed << ": " << program_to_json(p).dump());
            CHECK(compare_f_g(p));
            CHECK(check_invariant(eval_program(p)));
        }
    }

    TEST_CASE("json roundtrip") {
        Program p = running_sl4_program();
        Json j = program_to_json(p);
        CHECK(j["layers"][0]["slots"].size() == 1);
        CHECK(program_to_json(program_from_json(j)) == j);
        Json given = Json::parse(R"({"n":4,"layers":[{"slots":[{"prim":"CupLeft_C_L","k":2}]},
                                                     {"slots":["id",{"prim":"DualInv","k":2}]},
                                                     {"slots":["id","id",{"prim":"CupRight_C_R","k":1}]}]})");
        Program q = program_from_json(given);
        CHECK(q.layers.size() == 3);
        CHECK(q.layers[2].slot == 2);
        CHECK_THROWS_AS(program_from_json(Json::parse(R"({"n":4,"layers":[{"slots":["id"]}]})")), std::invalid_argument);
        CHECK_THROWS_AS(program_from_json(Json::parse(R"({"n":4,"layers":[{"slots":[{"prim":"Bogus","k":1}]}]})")),
                        std::invalid_argument);
    }
}
