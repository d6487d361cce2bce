#include <doctest.h>

#include "cechhom/cech_elements.hpp"
#include "cechhom/errors.hpp"
#include "cechhom/random.hpp"
#include "oracles.hpp"

using namespace cechhom;

namespace {
HallWord w(const char* s) { return HallWord::parse(s); }
const SphereGroupTable& seed() { return SphereGroupTable::seed(); }
GroupElement z(std::int64_t c) { return GroupElement(FGAbelianGroup::integers(), {c}); }
GroupElement z2(std::int64_t c) { return GroupElement(FGAbelianGroup::cyclic(2), {c}); }
}  // namespace

TEST_SUITE("cech_elements") {
    TEST_CASE("level examples") {
        const auto fs = CoherentElement::finite_support(3, 2, {{w("[a1,a3]"), z(2)}}, seed());
        CHECK(level(fs, 2).empty());
        CHECK(level(fs, 3) == Coordinates{{w("[a1,a3]"), z(2)}});

        const auto band = CoherentElement::weight2_family(2, EpsilonOracle::band(1, 1));
        CHECK(level(band, 3) == Coordinates{{w("[a1,a2]"), z(1)}, {w("[a2,a3]"), z(1)}});

        const auto gt = CoherentElement::gtuple(3, 2, {{1, {{w("[a1,a2]"), z(1)}}}}, seed());
        CHECK(level(gt, 1).empty());
        CHECK(level(gt, 2) == Coordinates{{w("[a1,a2]"), z(1)}});
    }

    TEST_CASE("construction validates coordinates") {
        CHECK_THROWS_AS(CoherentElement::finite_support(3, 2, {{w("[a1,[a1,a2]]"), z(1)}}, seed()), DomainError);
        CHECK_THROWS_AS(CoherentElement::finite_support(3, 2, {{w("[a2,a1]"), z(1)}}, seed()), DomainError);
        CHECK_THROWS_AS(CoherentElement::finite_support(4, 2, {{w("a1"), z(1)}}, seed()), DomainError);
        CHECK_THROWS_AS(CoherentElement::finite_support(6, 2, {{w("a1"), z(1)}}, seed()), UnresolvedGroupError);
        CHECK_THROWS_AS(CoherentElement::gtuple(3, 2, {{2, {{w("[a1,a2]"), z(1)}}}}, seed()), DomainError);
        CHECK_THROWS_AS(CoherentElement::gtuple(3, 2, {{1, {{w("a1"), z(1)}}}}, seed()), DomainError);
        CHECK_THROWS_AS(CoherentElement(1, 2), DomainError);
    }

    TEST_CASE("coherence") {
        CHECK(check_coherence(CoherentElement::finite_support(4, 2, {{w("[a1,a3]"), z2(1)}, {w("a2"), z2(1)}}, seed()), 6));
        CHECK(check_coherence(CoherentElement::weight2_family(3, EpsilonOracle::band(2, -1)), 6));
        const auto good = CoherentElement::weight2_family(2, EpsilonOracle::band(1, 1));
        auto corrupted = [&](int k) {
            Coordinates c = level(good, k);
            if (k == 4) c.insert_or_assign(w("[a1,a2]"), z(7));
            return c;
        };
        const Verdict v = check_coherence(corrupted, 3, GradingSequence::constant(1), 6);
        CHECK_FALSE(v.passed);
        CHECK(v.k == 3);
        REQUIRE(v.word.has_value());
        CHECK(*v.word == w("[a1,a2]"));
        auto stray = [&](int k) {
            Coordinates c = level(good, k);
            if (k == 3) c.emplace(w("[a1,a4]"), z(1));
            return c;
        };
        CHECK_FALSE(check_coherence(stray, 3, GradingSequence::constant(1), 4).passed);
    }

    TEST_CASE("group operations") {
        const auto a = EpsilonOracle::sparse({{1, 2, 2}, {2, 3, 1}});
        const auto b = EpsilonOracle::sparse({{1, 2, -2}, {1, 3, 4}});
        const auto sum = CoherentElement::weight2_family(2, a) + CoherentElement::weight2_family(2, b);
        REQUIRE(sum.epsilon().has_value());
        CHECK((*sum.epsilon())(1, 2) == 0);
        CHECK((*sum.epsilon())(1, 3) == 4);
        for (int k = 1; k <= 5; ++k)
            CHECK(level(sum, k) == level(CoherentElement::weight2_family(2, a), k) +
                                       level(CoherentElement::weight2_family(2, b), k));
        const auto e = CoherentElement::finite_support(3, 2, {{w("a1"), z(3)}}, seed()) + CoherentElement::weight2_family(2, a);
        for (int k = 1; k <= 4; ++k) CHECK(level(e + negate(e), k).empty());

        const auto x = CoherentElement::gtuple(4, 2, {{1, {{w("[a1,a2]"), z2(1)}}}}, seed());
        const auto y = CoherentElement::gtuple(4, 2, {{1, {{w("[a1,a2]"), z2(1)}, {w("[a1,a3]"), z2(1)}}}}, seed());
        const auto xy = x + y;
        REQUIRE(xy.gtuple_data().has_value());
        CHECK(xy.gtuple_data()->at(1).size() == 1);
        CHECK(xy.gtuple_data()->at(1).count(w("[a1,a3]")) == 1);

        CHECK_THROWS_AS(CoherentElement::weight2_family(2, a) + CoherentElement::gtuple(3, 2, {}, seed()),
                        IncompatibleOracleError);
        CHECK_THROWS_AS(x + CoherentElement::weight2_family(2, a), DomainError);
    }

    TEST_CASE("homomorphism law across oracle kinds") {
        Rng rng(5);
        for (int t = 0; t < 30; ++t) {
            const auto a = random_finite_support(rng, 4, 2, 4, seed());
            const auto b = random_gtuple(rng, 4, 2, 4, seed());
            const auto c = random_finite_support(rng, 4, 2, 4, seed());
            for (int k = 1; k <= 6; ++k) {
                CHECK(level(a + b, k) == level(a, k) + level(b, k));
                CHECK(level(b + c, k) == level(b, k) + level(c, k));
            }
        }
    }

    TEST_CASE("zeta and sigma") {
        const std::map<int, GroupElement> g{{1, z(1)}, {2, z(1)}};
        const auto e = zeta(2, 2, g, seed());
        CHECK(level(e, 2) == Coordinates{{w("a1"), z(1)}, {w("a2"), z(1)}});
        CHECK(sigma_coords(e, 5) == g);
        CHECK(sigma_coords(e, 1) == std::map<int, GroupElement>{{1, z(1)}});
        CHECK_FALSE(in_kernel_sigma(e, 3));
        const auto empty = zeta(2, 2, {}, seed());
        for (int k = 1; k <= 3; ++k) CHECK(level(empty, k).empty());
        CHECK(in_kernel_sigma(CoherentElement::weight2_family(2, EpsilonOracle::band(1, 1)), 5));
        CHECK(in_kernel_sigma(CoherentElement::gtuple(3, 2, {{1, {{w("[a1,a2]"), z(1)}}}}, seed()), 5));
        const std::map<int, GroupElement> tor{{1, z2(1)}, {4, z2(1)}};
        CHECK(sigma_coords(zeta(4, 3, tor, seed()), 6) == tor);
    }

    TEST_CASE("edge lemma") {
        const auto& t = seed();
        CHECK(verify_edge(EpsilonOracle::sparse({{1, 2, 1}}), 2, 4, t));
        for (int k = 2; k <= 4; ++k)
            CHECK(project_level(f_alpha(EpsilonOracle::sparse({{1, 2, 1}}), 2), k, 3, t) ==
                  Coordinates{{w("[a1,a2]"), z(1)}});
        for (int k = 1; k <= 4; ++k) CHECK(project_level(f_alpha({}, 3), k, 5, t).empty());
        CHECK(verify_edge(EpsilonOracle::band(3, -2) + EpsilonOracle::sparse({{2, 7, 1}}), 3, 8, t));
    }

    TEST_CASE("theta") {
        const auto& t = seed();
        const auto a = CoherentElement::gtuple(3, 2, {{1, {{w("[a1,a2]"), z(1)}}}}, t);
        const auto b = CoherentElement::gtuple(3, 2, {{1, {{w("[a1,a2]"), z(-1)}}}, {2, {{w("[a2,a3]"), z(4)}}}}, t);
        CHECK(project_level(theta(a), 1, 3, t).empty());
        CHECK(project_level(theta(a), 2, 3, t) == Coordinates{{w("[a1,a2]"), z(1)}});
        CHECK(verify_theta_additive(a, b, 5, t));
        CHECK((a + b).gtuple_data()->count(1) == 0);
        CHECK_THROWS_AS(theta(CoherentElement::finite_support(3, 2, {{w("a1"), z(1)}}, t)), DomainError);
        CHECK_THROWS_AS(theta(CoherentElement::weight2_family(2, {})), DomainError);
    }

    TEST_CASE("G_n(m) forms") {
        const auto& t = seed();
        const auto four = g_group_expr(4, 2, t);
        CHECK(render(four.distributed) == "PROD_N SUM_N Z/2 (+) PROD_N SUM_N Z");
        CHECK(four.equal);
        CHECK(render(four.direct) == "PROD_N (SUM_N Z/2 (+) SUM_N Z)");
        CHECK(render(g_group_expr(3, 2, t).distributed) == "PROD_N SUM_N Z");
        CHECK(g_group_expr(2, 2, t).distributed == GroupExpr::zero());
        for (int n = 2; n <= 8; ++n)
            for (int m = 2; m <= 4; ++m) CHECK(g_group_expr(n, m, t).equal);
    }

    TEST_CASE("element files") {
        const auto& t = seed();
        const auto e = parse_element(
            "# weight-2 element\nelement n=3 m=2\nsupport a1 = 2\nsupport [a1,a3] = -1\neps 1 2 = 3\neps 2 4 = 1\n", t);
        CHECK(level(e, 4) == Coordinates{{w("a1"), z(2)}, {w("[a1,a2]"), z(3)}, {w("[a1,a3]"), z(-1)}, {w("[a2,a4]"), z(1)}});
        const auto g = parse_element("element n=4 m=2\ngtuple 1 [a1,[a1,a2]] = 5\ngtuple 2 [a2,a3] = 1\n", t);
        CHECK(level(g, 3).size() == 2);
        CHECK_THROWS_AS(parse_element("support a1 = 1\n", t), ParseError);
        CHECK_THROWS_AS(parse_element("element n=3 m=2\nsupport a1 = x\n", t), ParseError);
        CHECK_THROWS_AS(parse_element("element n=4 m=2\neps 1 2 = 1\n", t), ParseError);
        CHECK_THROWS_AS(parse_element("element n=4 m=2\ngtuple 2 [a1,a2] = 1\n", t), ParseError);
        CHECK_THROWS_AS(parse_element("element n=3 m=2\nfrobnicate a1 = 1\n", t), ParseError);
        try {
            parse_element("element n=3 m=2\n\nsupport [a1,a2] = 1,2\n", t);
            FAIL("expected a parse error");
        } catch (const ParseError& err) {
            CHECK(err.line() == 3);
        }
    }
}
