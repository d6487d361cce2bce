// Acceptance criteria AC1..AC9. Prints one PASS/FAIL line per criterion.
// Usage: acceptance [criterion numbers...]   (no arguments: all)

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cechhom/cech_elements.hpp"
#include "cechhom/hall_basis.hpp"
#include "cechhom/hilton_milnor.hpp"
#include "cechhom/random.hpp"
#include "cechhom/whitehead.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace cechhom;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

const SphereGroupTable& seed() { return SphereGroupTable::seed(); }

std::string cli_line(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(args, out, err) != 0) return "<exit error: " + err.str() + ">";
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

Outcome ac1_golden() {
    Outcome o;
    auto golden = [&](int m, int n, const std::string& want) {
        const std::string got = cli_line({"cech", "earring", "-m", std::to_string(m), "-n", std::to_string(n)});
        o.expect(got == want, "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": got '" + got + "'");
    };
    golden(2, 3, "Z^N (+) Z^N");
    golden(2, 4, "(Z/2)^N (+) (Z/2)^N (+) Z^N");
    for (int n = 3; n <= 6; ++n) golden(n, n + 1, "(Z/2)^N");
    golden(2, 2, "Z^N");
    return o;
}

Outcome ac2_census() {
    Outcome o;
    for (int k = 1; k <= 5; ++k) {
        const HallSet set = HallSet::generate(k, 7);
        for (int j = 1; j <= 7; ++j) {
            const auto size = set.stratum(j).size();
            const std::string at = "k=" + std::to_string(k) + " j=" + std::to_string(j);
            o.expect(size == necklace_count(k, j), at + ": stratum size " + std::to_string(size) + " vs M_k(j)");
            o.expect(size == oracle::lyndon_count(k, j), at + ": stratum size vs Lyndon count");
        }
    }
    for (int k = 1; k <= 3; ++k) {
        const HallSet set = HallSet::generate(k, 5);
        for (int j = 1; j <= 5; ++j) {
            const auto brute = oracle::brute_force_hall(k, j);
            const auto& stratum = set.stratum(j);
            const std::set<HallWord> a(brute.begin(), brute.end());
            const std::set<HallWord> b(stratum.begin(), stratum.end());
            const std::string at = "k=" + std::to_string(k) + " j=" + std::to_string(j);
            o.expect(a == b, at + ": generated stratum differs from brute-force Hall enumeration");
            o.expect(std::is_sorted(stratum.begin(), stratum.end(), oracle::less), at + ": stratum not in canonical order");
        }
    }
    return o;
}

Outcome ac3_coherence_of_nesting() {
    Outcome o;
    std::vector<HallSet> sets;
    for (int k = 1; k <= 6; ++k) sets.push_back(HallSet::generate(k, 6));
    for (int k = 1; k <= 5; ++k)
        for (int j = 1; j <= 6; ++j) {
            const auto& small = sets[static_cast<std::size_t>(k - 1)].stratum(j);
            const auto& big = sets[static_cast<std::size_t>(k)].stratum(j);
            const std::string at = "k=" + std::to_string(k) + " j=" + std::to_string(j);
            o.expect(big.size() >= small.size() && std::equal(small.begin(), small.end(), big.begin()),
                     at + ": not an ordered prefix");
            for (std::size_t i = small.size(); i < big.size(); ++i)
                o.expect(big[i].contains(k + 1), at + ": new word " + big[i].to_string() + " lacks a" + std::to_string(k + 1));
            for (const auto& w : small) o.expect(!w.contains(k + 1), at + ": old word contains the new letter");
        }
    return o;
}

Outcome ac4_two_paths() {
    Outcome o;
    for (int n = 2; n <= 8; ++n)
        for (int m = 2; m <= 5; ++m) {
            const GroupExpr closed = earring_formula(n, m, seed());
            const GroupExpr general = normalize(cech_decompose(n, GradingSequence::constant(m - 1), seed()));
            o.expect(closed == general, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + render(closed) +
                                            " vs " + render(general));
        }
    return o;
}

Outcome ac5_tower_coherence() {
    Outcome o;
    Rng rng(20240501);
    struct Config {
        int n;
        int m;
    };
    std::vector<Config> configs;
    for (int m = 2; m <= 3; ++m)
        for (int n = m; n <= 6; ++n) configs.push_back({n, m});
    std::size_t kinds[3] = {0, 0, 0};
    int built = 0;
    while (built < 200) {
        const Config c = configs[std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(rng)];
        const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        std::optional<CoherentElement> e;
        try {
            if (kind == 0) e = random_finite_support(rng, c.n, c.m, 6, seed());
            if (kind == 1 && c.n == 2 * c.m - 1) e = CoherentElement::weight2_family(c.m, random_sparse_epsilon(rng));
            if (kind == 2) e = random_gtuple(rng, c.n, c.m, 6, seed());
        } catch (const DomainError&) {
            continue;  // no resolvable coordinate group for this (n, m)
        }
        if (!e) continue;
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
            try {
                e = *e + random_finite_support(rng, c.n, c.m, 6, seed());
            } catch (const DomainError&) {
            }
        }
        ++kinds[kind];
        ++built;
        const Verdict v = check_coherence(*e, 6);
        o.expect(v.passed, "element " + std::to_string(built) + " (n=" + std::to_string(c.n) + ", m=" +
                               std::to_string(c.m) + "): " + v.detail);
    }
    o.expect(kinds[0] > 0 && kinds[1] > 0 && kinds[2] > 0, "some oracle kind was never sampled");

    const auto good = CoherentElement::weight2_family(2, EpsilonOracle::band(2, 1));
    const HallWord target = HallWord::parse("[a2,a4]");
    auto mutated = [&](int k) {
        Coordinates c = level(good, k);
        if (k == 5) c.insert_or_assign(target, GroupElement(FGAbelianGroup::integers(), {-4}));
        return c;
    };
    const Verdict neg = check_coherence(mutated, 3, GradingSequence::constant(1), 6);
    o.expect(!neg.passed, "negative control passed coherence");
    o.expect(neg.k == 4 && neg.word && *neg.word == target, "negative control reported the wrong (k, w): " + neg.detail);
    o.detail = o.passed ? "200 elements (finite " + std::to_string(kinds[0]) + ", weight-2 " + std::to_string(kinds[1]) +
                              ", G-tuple " + std::to_string(kinds[2]) + "), negative control fails at (k=" +
                              std::to_string(neg.k) + ", " + target.to_string() + ")"
                        : o.detail;
    return o;
}

Outcome ac6_edge_lemma() {
    Outcome o;
    Rng rng(777);
    for (int t = 0; t < 100; ++t) {
        const int m = 2 + t % 2;
        const int n = 2 * m - 1;
        const EpsilonOracle a = random_sparse_epsilon(rng, 6, 10, 3);
        const EpsilonOracle b = random_sparse_epsilon(rng, 6, 10, 3);
        const Verdict v = verify_edge(a, m, 6, seed());
        o.expect(v.passed, "case " + std::to_string(t) + ": " + v.detail);
        for (int k = 1; k <= 6; ++k) {
            const Coordinates fa = project_level(f_alpha(a, m), k, n, seed());
            o.expect(fa == oracle::edge_double_sum(a, k), "case " + std::to_string(t) + " level " + std::to_string(k) +
                                                              ": projection differs from the double sum");
            const Coordinates joint = project_level(f_alpha(a, m) + f_alpha(b, m), k, n, seed());
            const Coordinates merged = project_level(f_alpha(a + b, m), k, n, seed());
            o.expect(joint == merged, "case " + std::to_string(t) + " level " + std::to_string(k) +
                                          ": F_alpha + F_beta != F_{alpha+beta}");
            o.expect(merged == oracle::edge_double_sum(a, k) + oracle::edge_double_sum(b, k),
                     "case " + std::to_string(t) + " level " + std::to_string(k) + ": eps-additivity vs double sums");
        }
    }
    return o;
}

Outcome ac7_theta() {
    Outcome o;
    Rng rng(4242);
    std::size_t separated = 0;
    for (const auto [n, m] : {std::pair{4, 2}, std::pair{5, 3}}) {
        for (int t = 0; t < 100; ++t) {
            const std::string at = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ") case " + std::to_string(t);
            const CoherentElement a = random_gtuple(rng, n, m, 4, seed());
            const CoherentElement b = random_gtuple(rng, n, m, 4, seed());
            const Verdict v = verify_theta_additive(a, b, 5, seed());
            o.expect(v.passed, at + ": " + v.detail);
            for (int k = 1; k <= 5; ++k)
                o.expect(project_level(theta(a), k, n, seed()) == level(a, k),
                         at + ": Psi(Theta(alpha)) != alpha at level " + std::to_string(k));
            o.expect(in_kernel_sigma(a, 5) && in_kernel_sigma(a + b, 5), at + ": Theta image outside ker sigma");

            // injectivity witness: b and a perturbed copy of a
            for (const auto* other : {&b}) {
                if (*a.gtuple_data() == *other->gtuple_data()) continue;
                bool differ = false;
                for (int k = 1; k <= 5 && !differ; ++k) differ = level(a, k) != level(*other, k);
                o.expect(differ, at + ": distinct G-tuples agree at every level <= 5");
                separated += differ;
            }
            const auto& data = *a.gtuple_data();
            const auto first = std::find_if(data.begin(), data.end(), [](const auto& kv) { return !kv.second.empty(); });
            if (first == data.end()) continue;  // all coordinates cancelled
            const auto& [w, f] = *first->second.begin();
            const CoherentElement bumped = a + CoherentElement::gtuple(n, m, {{first->first, {{w, f}}}}, seed());
            if (*bumped.gtuple_data() != data) {
                bool differ = false;
                for (int k = 1; k <= 5 && !differ; ++k) differ = level(a, k) != level(bumped, k);
                o.expect(differ, at + ": perturbed G-tuple not separated at " + w.to_string());
                separated += differ;
            }
        }
    }
    if (o.passed) o.detail = "200 G-tuple pairs, " + std::to_string(separated) + " distinct pairs separated";
    return o;
}

Outcome ac8_rewriting() {
    Outcome o;
    std::vector<HallWord> monomials;
    for (int j = 1; j <= 3; ++j) {
        auto trees = oracle::all_trees(3, j);
        monomials.insert(monomials.end(), trees.begin(), trees.end());
    }
    o.expect(monomials.size() == 66, "expected 66 monomials, got " + std::to_string(monomials.size()));
    std::size_t cases = 0;
    for (int d1 = 2; d1 <= 4; ++d1)
        for (int d2 = 2; d2 <= 4; ++d2)
            for (int d3 = 2; d3 <= 4; ++d3) {
                const LetterDegrees degrees({d1, d2, d3}, d3);
                for (const auto& w : monomials) {
                    ++cases;
                    const std::string at = w.to_string() + " degrees " + std::to_string(d1) + "," +
                                           std::to_string(d2) + "," + std::to_string(d3);
                    const FormalSum input = FormalSum::monomial(w, degrees);
                    const HallNormalForm nf = hall_normalize(input, 3);
                    FormalSum output = nf.residual;
                    for (const auto& [h, c] : nf.hall) {
                        o.expect(oracle::is_hall(h), at + ": output " + h.to_string() + " is not Hall");
                        output.add(h, c);
                    }
                    const auto ref = oracle::tensor(w, [&](int i) { return degrees(i); });
                    o.expect(tensor_oracle(input) == TensorElement(ref.begin(), ref.end()),
                             at + ": tensor oracle disagrees with the reference expansion");
                    o.expect(tensor_oracle(input) == tensor_oracle(output), at + ": normal form changes the tensor image");
                    for (const auto& [h, c] : output.terms())
                        o.expect(whitehead_degree(h, degrees) == whitehead_degree(w, degrees), at + ": degree changed");
                    if (!w.is_letter()) {
                        const auto [s1, once] = graded_swap(w, degrees);
                        const auto [s2, twice] = graded_swap(once, degrees);
                        o.expect(s1 * s2 == 1 && twice == w, at + ": swap is not an involution");
                    }
                }
            }

    Rng rng(8);
    std::uniform_int_distribution<int> deg(2, 3);
    const HallWord a = HallWord::letter(1), b = HallWord::letter(2), c = HallWord::letter(3);
    for (int t = 0; t < 64; ++t) {
        const int p = deg(rng), q = deg(rng), r = deg(rng);
        const LetterDegrees degrees({p, q, r}, r);
        auto sign = [](int e) { return e % 2 ? -1 : 1; };
        FormalSum jacobi(degrees);
        jacobi.add(HallWord::bracket(HallWord::bracket(a, b), c), sign(p * r));
        jacobi.add(HallWord::bracket(HallWord::bracket(b, c), a), sign(p * q));
        jacobi.add(HallWord::bracket(HallWord::bracket(c, a), b), sign(r * q));
        o.expect(tensor_oracle(jacobi).empty(), "Jacobi instance does not vanish for degrees " + std::to_string(p) +
                                                    "," + std::to_string(q) + "," + std::to_string(r));
    }
    if (o.passed) o.detail = std::to_string(cases) + " monomial/degree cases, 64 Jacobi instances";
    return o;
}

Outcome ac9_stabilization() {
    Outcome o;
    const auto one = stabilization_report(1, 3, 6, seed());
    o.expect(one.stable && one.verdict() == "stable: (Z/2)^N", "s=1: " + one.verdict());
    for (const auto& row : one.rows)
        o.expect(render(row.value) == "(Z/2)^N", "s=1 m=" + std::to_string(row.m) + ": " + render(row.value));
    const auto zero = stabilization_report(0, 2, 6, seed());
    o.expect(zero.stable && zero.verdict() == "stable: Z^N", "s=0: " + zero.verdict());
    for (const auto& row : zero.rows)
        o.expect(render(row.value) == "Z^N", "s=0 m=" + std::to_string(row.m) + ": " + render(row.value));
    const std::string cli = cli_line({"verify", "stabilize", "-s", "1", "--m-range", "3..6", "--table", "seed"});
    o.expect(cli.substr(cli.rfind('\n') + 1) == "stable: (Z/2)^N", "CLI verdict: " + cli);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "golden decompositions", ac1_golden},
        {2, "Hall census", ac2_census},
        {3, "coherent nesting", ac3_coherence_of_nesting},
        {4, "two-path equality", ac4_two_paths},
        {5, "tower coherence", ac5_tower_coherence},
        {6, "edge lemma", ac6_edge_lemma},
        {7, "Theta properties", ac7_theta},
        {8, "rewriting soundness", ac8_rewriting},
        {9, "stabilization", ac9_stabilization},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = std::string("exception: ") + e.what();
        }
        std::cout << "AC" << c.id << " " << (out.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << out.checks
                  << " checks]";
        if (!out.detail.empty()) std::cout << "  " << out.detail;
        std::cout << "\n";
        failures += !out.passed;
    }
    return failures ? 1 : 0;
}
