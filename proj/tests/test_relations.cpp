#include "support.hpp"

#include "webcalc/builders.hpp"
#include "webcalc/invariant.hpp"
#include "webcalc/relations.hpp"
#include "webcalc/tableau.hpp"

#include <doctest.h>

using namespace webcalc;
using test::P;

TEST_SUITE("relations") {
    TEST_CASE("coefficients") {
        RelationInstance loop = make_loop(4, 2);
        REQUIRE(loop.rhs.size() == 1);
        CHECK(loop.rhs[0].coeff == P("q^4 + q^2 + 2 + q^-2 + q^-4"));
        CHECK(loop.rhs[0].web.edges.empty());

        RelationInstance bigon = make_bigon(3, 1, 1);
        REQUIRE(bigon.rhs.size() == 1);
        CHECK(bigon.rhs[0].coeff == P("-q - q^-1"));

        RelationInstance sw = make_square_switch_unit(4, 2, 1);
        REQUIRE(sw.rhs.size() == 2);
        CHECK(sw.rhs[1].coeff == P("1"));

        CHECK(make_circle(4, 1).rhs[0].coeff == P("-q^3 - q - q^-1 - q^-3"));
        CHECK(make_square_removal(4, 3, 0, 1, 1).rhs[0].coeff == P("-q - q^-1"));
        // the signed q-binomial in the general switch is the binomial at -q
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; l <= 4; ++l) {
                RelationInstance g = make_square_switch_general(4, k, l, 1, 2);
                for (const RelationTerm& t : g.rhs) {
                    bool hit = false;
                    for (int j = 0; j <= 1; ++j) hit = hit || t.coeff == subst_neg_q(qbinom(k - l - 1, j));
                    CHECK(hit);
                }
            }
    }

    TEST_CASE("zero rule") {
        WebGraph cup = make_cup_web(3, 2);
        cup.edges[0].weight = 4;
        CHECK(!apply_zero_rule(cup).has_value());
        cup.edges[0].weight = 3;
        auto gone = apply_zero_rule(cup);
        REQUIRE(gone.has_value());
        CHECK(gone->edges.empty());
        CHECK(gone->boundary.empty());

        // k + l = n: the legs vanish and the bigon closes into a circle
        RelationInstance b = make_bigon(3, 1, 2);
        REQUIRE(b.lhs.size() == 1);
        CHECK(b.lhs[0].web.boundary.empty());
        REQUIRE(b.lhs[0].web.edges.size() == 1);
        CHECK(b.lhs[0].web.edges[0].is_loop());
        CHECK(verify(b));

        // s = 0 smooths the lower rung away
        RelationInstance sq = make_square_removal(4, 2, 1, 1, 0);
        REQUIRE(sq.lhs.size() == 1);
        CHECK(validate(sq.lhs[0].web).ok());
        CHECK(sq.lhs[0].web.interior.size() == 2);
        CHECK(verify(sq));

        // k - 1 < 0 zeroes the left side; the right side still cancels
        RelationInstance z = make_square_switch_unit(3, 0, 2);
        CHECK(z.lhs.empty());
        CHECK(verify(z));
    }

    TEST_CASE("relation grids") {
        for (const std::string& rule : relation_rules()) {
            std::vector<RelationInstance> grid = relation_grid(rule, 4);
            CHECK(!grid.empty());
            for (const RelationResult& r : verify_all(grid, 4)) {
                INFO(r.label << " residual " << vector_text(r.residual));
                CHECK(r.ok);
            }
        }
        CHECK(relation_grid("bigon", 2).size() == 5);
        CHECK_THROWS_AS(relation_grid("kekule", 3), std::invalid_argument);
    }

    TEST_CASE("members are valid with a shared boundary") {
        for (const std::string& rule : relation_rules())
            for (const RelationInstance& inst : relation_grid(rule, 3))
                for (const auto* side : {&inst.lhs, &inst.rhs})
                    for (const RelationTerm& t : *side) {
                        INFO(inst.label());
                        CHECK(validate(t.web).ok());
                    }
        RelationInstance bad = make_bigon(3, 1, 1);
        bad.rhs[0].web = make_cup_web(3, 1);
        CHECK_THROWS_AS(verify(bad), std::invalid_argument);
    }

    TEST_CASE("mirror and redraw") {
        for (const std::string& rule : relation_rules())
            for (const RelationInstance& inst : relation_grid(rule, 4)) {
                INFO(inst.label());
                CHECK(verify(mirrored(inst)));
                CHECK(verify(jittered(inst, 11)));
            }
    }

    TEST_CASE("edge flips") {
        WebGraph g = make_running_sl4();
        CHECK(verify_edge_flip(g, {"e2", "e4", "e5", "e6", "e8"}));
        CHECK(verify_edge_flip(g, {}));
        TableauWeb tw = web_from_tableau(StandardTableau::from_word(3, "121323"));
        std::vector<std::string> all;
        for (const Edge& e : tw.web.edges) all.push_back(e.id);
        CHECK(verify_edge_flip(tw.web, all));
        CHECK(verify_flip_orbit(make_square_switch_general(4, 3, 1, 1, 2)));
        CHECK(verify_flip_orbit(make_square_switch_unit(3, 1, 1)));
        CHECK(verify_flip_orbit(make_IH(4, 1, 1, 1)));
    }

    TEST_CASE("parallel verification matches sequential") {
        std::vector<RelationInstance> grid = relation_grid("square-switch-general", 3);
        auto a = verify_all(grid, 1), b = verify_all(grid, 6);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].label == b[i].label);
            CHECK(a[i].ok == b[i].ok);
        }
    }
}
