#include <doctest.h>

#include <algorithm>
#include <set>

#include "cechhom/errors.hpp"
#include "cechhom/hall_basis.hpp"
#include "oracles.hpp"

using namespace cechhom;

namespace {
HallWord w(const char* s) { return HallWord::parse(s); }

std::vector<std::string> strings(const std::vector<HallWord>& ws) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(x.to_string());
    return out;
}
}  // namespace

TEST_SUITE("hall_basis") {
    TEST_CASE("grading sequences") {
        const auto g = GradingSequence::parse("1,1,5;5");
        CHECK(g(1) == 1);
        CHECK(g(3) == 5);
        CHECK(g(100) == 5);
        CHECK(GradingSequence::parse("2") == GradingSequence::constant(2));
        CHECK(GradingSequence::parse("1,2;3").to_string() == "1,2;3");
        CHECK_THROWS_AS(GradingSequence({2, 1}, 3), DomainError);
        CHECK_THROWS_AS(GradingSequence({1, 2}, 1), DomainError);
        CHECK_THROWS_AS(GradingSequence({0}, 1), DomainError);
        CHECK_THROWS_AS(GradingSequence::parse("1,x;2"), ParseError);
    }

    TEST_CASE("words parse and carry statistics") {
        const HallWord x = w("[a1,[a1,a2]]");
        CHECK(x.to_string() == "[a1,[a1,a2]]");
        CHECK(x.length() == 3);
        CHECK(x.multiplicity(1) == 2);
        CHECK(x.multiplicity(2) == 1);
        CHECK(x.multiplicity(7) == 0);
        CHECK(x.min_letter() == 1);
        CHECK(x.max_letter() == 2);
        CHECK(w(" [ a2 , a3 ] ") == w("[a2,a3]"));
        CHECK_THROWS_AS(HallWord::parse("[a1,a2"), ParseError);
        CHECK_THROWS_AS(HallWord::parse("a0"), ParseError);
    }

    TEST_CASE("generate: small cases") {
        CHECK(strings(HallSet::generate(2, 1).words()) == std::vector<std::string>{"a1", "a2"});
        const HallSet h = HallSet::generate(2, 3);
        CHECK(strings(h.stratum(2)) == std::vector<std::string>{"[a1,a2]"});
        const auto s3 = strings(h.stratum(3));
        CHECK(std::set<std::string>(s3.begin(), s3.end()) ==
              std::set<std::string>{"[a1,[a1,a2]]", "[a2,[a1,a2]]"});
        const HallSet one = HallSet::generate(1, 3);
        CHECK(one.size() == 1);
        CHECK(one.stratum(2).empty());
    }

    TEST_CASE("generate: resource cap") {
        CHECK_THROWS_AS(HallSet::generate(4, 6, 100), ResourceLimitError);
    }

    TEST_CASE("is_hall examples") {
        CHECK(is_hall(w("[a2,[a1,a3]]"), 3));
        CHECK_FALSE(is_hall(w("[a1,[a2,a3]]"), 3));
        CHECK(is_hall(w("[a1,a2]"), 2));
        CHECK_FALSE(is_hall(w("[a1,a1]"), 1));
        CHECK_FALSE(is_hall(w("[a2,a1]"), 2));
        CHECK_FALSE(is_hall(w("[a1,a3]"), 2));
    }

    TEST_CASE("is_hall agrees with the reference predicate on all small bracketings") {
        for (int j = 1; j <= 4; ++j)
            for (const auto& t : oracle::all_trees(3, j)) {
                CAPTURE(t.to_string());
                CHECK(is_hall(t, 3) == oracle::is_hall(t));
            }
    }

    TEST_CASE("canonical order agrees with the reference comparator") {
        const auto words = HallSet::generate(3, 4).words();
        for (const auto& a : words)
            for (const auto& b : words) CHECK((a < b) == oracle::less(a, b));
    }

    TEST_CASE("heights") {
        CHECK(height(w("[a1,a2]"), GradingSequence::constant(1)) == 2);
        CHECK(height(w("[a1,[a1,a2]]"), GradingSequence::parse("1,2;2")) == 4);
        CHECK(height(w("a3"), GradingSequence::parse("1,1,5;5")) == 5);
        const HallSet three = HallSet::generate(3, 4);
        for (const auto& x : three.words()) CHECK(height(x, GradingSequence::constant(3)) == 3 * x.length());
    }

    TEST_CASE("moebius and necklace counts") {
        CHECK(moebius(1) == 1);
        CHECK(moebius(6) == 1);
        CHECK(moebius(12) == 0);
        CHECK(moebius(30) == -1);
        CHECK(necklace_count(2, 3) == 2);
        CHECK(necklace_count(1, 1) == 1);
        CHECK(necklace_count(3, 3) == 8);
        CHECK(necklace_count(1, 5) == 0);
        CHECK(necklace_count(2, 64) == 288230376084602880ULL);
        CHECK_THROWS_AS(necklace_count(1000, 64), ResourceLimitError);
        for (int k = 1; k <= 4; ++k)
            for (int j = 1; j <= 6; ++j) CHECK(necklace_count(k, j) == oracle::lyndon_count(k, j));
    }

    TEST_CASE("dimension truncation") {
        const auto c1 = GradingSequence::constant(1);
        CHECK(strings(dimension_truncation(2, 3, c1)) == std::vector<std::string>{"a1", "a2", "[a1,a2]"});
        CHECK(strings(dimension_truncation(2, 2, c1)) == std::vector<std::string>{"a1", "a2"});
        CHECK(dimension_truncation(3, 4, c1).size() == 14);
        const auto mixed = GradingSequence::parse("1,2;3");
        for (const auto& x : dimension_truncation(4, 5, mixed)) CHECK(height(x, mixed) + 1 <= 5);
    }

    TEST_CASE("minimal letter partition") {
        CHECK(strings(min_letter_partition(1, 2, 3)) == std::vector<std::string>{"[a1,a2]", "[a1,a3]"});
        CHECK(strings(min_letter_partition(2, 2, 3)) == std::vector<std::string>{"[a2,a3]"});
        CHECK(min_letter_partition(3, 2, 3).empty());
        std::size_t total = 0;
        for (int i = 1; i <= 4; ++i) total += min_letter_partition(i, 3, 4).size();
        CHECK(total == necklace_count(4, 3));
    }

    TEST_CASE("height class census") {
        using M = std::map<int, ClassSize>;
        CHECK(height_class_census(3, GradingSequence::constant(1)) == M{{1, {true, 0}}, {2, {true, 0}}});
        CHECK(height_class_census(3, GradingSequence::parse("1,2;3")) == M{{1, {false, 1}}, {2, {false, 1}}});
        CHECK(height_class_census(2, GradingSequence::constant(1)) == M{{1, {true, 0}}});
        // letters past a2 have r = 5 > n - 1, so only a1, a2 ever occur
        const auto census = height_class_census(5, GradingSequence::parse("1,2;5"));
        for (const auto& [h, size] : census) {
            CAPTURE(h);
            CHECK_FALSE(size.countably_infinite);
        }
    }

    TEST_CASE("census agrees with truncations at finite level") {
        for (const auto& g : {GradingSequence::constant(1), GradingSequence::parse("1,2;3"), GradingSequence::parse("1;2")})
            for (int n = 2; n <= 6; ++n)
                for (int k = 1; k <= 4; ++k) {
                    std::map<int, std::uint64_t> direct;
                    for (const auto& x : dimension_truncation(k, n, g)) ++direct[height(x, g)];
                    CHECK(height_census_at(k, n, g) == direct);
                }
    }

    TEST_CASE("infinite census classes keep growing with the alphabet") {
        const auto g = GradingSequence::parse("1;2");
        const auto census = height_class_census(5, g);
        const auto small = height_census_at(4, 5, g);
        const auto large = height_census_at(6, 5, g);
        for (const auto& [h, size] : census) {
            CAPTURE(h);
            if (size.countably_infinite)
                CHECK(large.at(h) > small.at(h));
            else
                CHECK(large.at(h) == size.count);
        }
    }

    TEST_CASE("weight-monotone order inside a HallSet") {
        const auto words = HallSet::generate(3, 5).words();
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1].length() <= words[i].length());
    }
}
