#include <doctest.h>

#include "cechhom/errors.hpp"
#include "cechhom/hilton_milnor.hpp"

using namespace cechhom;

namespace {
HallWord w(const char* s) { return HallWord::parse(s); }
const SphereGroupTable& seed() { return SphereGroupTable::seed(); }
const GradingSequence kOne = GradingSequence::constant(1);

GroupElement z(std::int64_t c) { return GroupElement(FGAbelianGroup::integers(), {c}); }
}  // namespace

TEST_SUITE("hilton_milnor") {
    TEST_CASE("decompose_wedge examples") {
        const auto d = decompose_wedge(3, 2, kOne, seed());
        REQUIRE(d.summands.size() == 3);
        for (const auto& s : d.summands) CHECK(render(s.group) == "Z");
        CHECK(render(d.total()) == "Z (+) Z (+) Z");

        const auto five = decompose_wedge(2, 5, kOne, seed());
        CHECK(five.summands.size() == 5);
        for (const auto& s : five.summands) CHECK(s.word.is_letter());

        const auto four = decompose_wedge(4, 2, kOne, seed());
        std::vector<std::string> got;
        for (const auto& s : four.summands) got.push_back(s.word.to_string() + " " + render(s.group));
        CHECK(got == std::vector<std::string>{"a1 Z/2", "a2 Z/2", "[a1,a2] Z/2", "[a1,[a1,a2]] Z", "[a2,[a1,a2]] Z"});
    }

    TEST_CASE("decompose_wedge below connectivity") {
        const auto d = decompose_wedge(2, 3, GradingSequence::constant(2), seed());
        CHECK(d.trivial_by_connectivity);
        CHECK(d.summands.empty());
        CHECK(d.total() == GroupExpr::zero());
    }

    TEST_CASE("decompose_wedge keeps unknown groups symbolic") {
        const auto d = decompose_wedge(6, 2, kOne, seed());
        CHECK(d.summands.front().group == GroupExpr::sphere(6, 2));
    }

    TEST_CASE("summand count equals the truncation size") {
        for (const auto& g : {kOne, GradingSequence::constant(2), GradingSequence::parse("1,2;3")})
            for (int n = 2; n <= 6; ++n)
                for (int k = 1; k <= 5; ++k) {
                    if (n <= g.first()) continue;
                    CHECK(decompose_wedge(n, k, g, seed()).summands.size() == dimension_truncation(k, n, g).size());
                }
    }

    TEST_CASE("bonding examples") {
        const auto b = bonding(3, 2, kOne);
        CHECK(apply_bonding(b, {{w("[a1,a3]"), z(5)}}).empty());
        CHECK(apply_bonding(b, {{w("[a1,a2]"), z(5)}}) == Coordinates{{w("[a1,a2]"), z(5)}});
        CHECK(apply_bonding(b, {{w("a3"), z(1)}, {w("a1"), z(2)}}) == Coordinates{{w("a1"), z(2)}});
        CHECK_THROWS_AS(apply_bonding(b, {{w("a4"), z(1)}}), SupportError);
        CHECK_THROWS_AS(apply_bonding(b, {{w("[a1,[a1,a2]]"), z(1)}}), SupportError);
    }

    TEST_CASE("bonding kills exactly the new letter") {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 4; ++k) {
                const auto b = bonding(n, k, kOne);
                for (const auto& x : b.domain()) CHECK(b.kills(x) == (x.multiplicity(k + 1) >= 1));
            }
    }

    TEST_CASE("composite bonding equals direct kill set") {
        for (int n = 2; n <= 5; ++n)
            for (int k = 1; k <= 3; ++k) {
                Coordinates top;
                for (const auto& x : dimension_truncation(k + 2, n, kOne))
                    top.emplace(x, GroupElement(FGAbelianGroup::integers(), {x.length()}));
                const auto two_steps = apply_bonding(bonding(n, k, kOne), apply_bonding(bonding(n, k + 1, kOne), top));
                Coordinates direct;
                for (const auto& [x, f] : top)
                    if (x.max_letter() <= k) direct.emplace(x, f);
                CHECK(two_steps == direct);
            }
    }

    TEST_CASE("cech_decompose examples") {
        CHECK(render(cech_decompose(3, kOne, seed())) == "Z^N (+) Z^N");
        CHECK(render(cech_decompose(2, kOne, seed())) == "Z^N");
        CHECK(render(cech_decompose(3, GradingSequence::parse("1,2;3"), seed())) == "Z (+) Z");
        CHECK(cech_decompose(2, GradingSequence::constant(2), seed()) == GroupExpr::zero());
        CHECK(render(cech_decompose(4, GradingSequence::parse("1;2"), seed())) == "Z/2 (+) (Z/2)^N (+) Z^N");
    }

    TEST_CASE("earring formula examples") {
        CHECK(render(earring_formula(4, 2, seed())) == "(Z/2)^N (+) (Z/2)^N (+) Z^N");
        CHECK(render(earring_formula(5, 4, seed())) == "(Z/2)^N");
        CHECK(earring_formula(2, 3, seed()) == GroupExpr::zero());
        CHECK_THROWS_AS(earring_formula(3, 1, seed()), DomainError);
    }

    TEST_CASE("weight summands and the relative group") {
        CHECK(render(weight_summand(3, 2, 2, seed())) == "Z^N");
        CHECK(weight_summand(3, 2, 5, seed()) == GroupExpr::zero());
        CHECK(render(relative_cech(4, 2, seed())) == "(Z/2)^N (+) Z^N");
        for (int n = 2; n <= 8; ++n)
            for (int m = 2; m <= 5; ++m)
                CHECK(normalize(GroupExpr::direct_sum({relative_cech(n, m, seed()), weight_summand(n, m, 1, seed())})) ==
                      earring_formula(n, m, seed()));
    }

    TEST_CASE("earring vanishes below the connectivity") {
        for (int m = 3; m <= 6; ++m)
            for (int n = 2; n < m; ++n) CHECK(earring_formula(n, m, seed()) == GroupExpr::zero());
    }

    TEST_CASE("stabilization") {
        const auto one = stabilization_report(1, 3, 6, seed());
        CHECK(one.stable);
        CHECK(one.verdict() == "stable: (Z/2)^N");
        const auto zero = stabilization_report(0, 2, 6, seed());
        CHECK(zero.verdict() == "stable: Z^N");
        for (const auto& row : zero.rows) CHECK(render(row.value) == "Z^N");
        const auto with2 = stabilization_report(1, 2, 6, seed());
        CHECK(with2.stable);
        CHECK_FALSE(with2.rows.front().in_stable_range);
        CHECK(render(with2.rows.front().value) == "Z^N (+) Z^N");
        const auto unknown = stabilization_report(2, 4, 6, seed());
        CHECK_FALSE(unknown.stable);
        CHECK_FALSE(unknown.warnings.empty());
        CHECK(unknown.verdict().rfind("undetermined", 0) == 0);
        CHECK(stabilization_report(1, 2, 2, seed()).verdict().rfind("undetermined", 0) == 0);
    }
}
