#include "cechhom/random.hpp"

#include <vector>

namespace cechhom {

GroupElement random_element(Rng& rng, const FGAbelianGroup& group, std::int64_t bound) {
    std::vector<std::int64_t> components;
    std::uniform_int_distribution<std::int64_t> free(-bound, bound);
    for (int i = 0; i < group.rank(); ++i) components.push_back(free(rng));
    for (auto d : group.torsion())
        components.push_back(std::uniform_int_distribution<std::int64_t>(0, static_cast<std::int64_t>(d) - 1)(rng));
    return GroupElement(group, components);
}

EpsilonOracle random_sparse_epsilon(Rng& rng, int max_index, int max_entries, std::int64_t bound) {
    std::vector<EpsilonOracle::Entry> entries;
    const int count = std::uniform_int_distribution<int>(0, max_entries)(rng);
    std::uniform_int_distribution<int> index(1, max_index);
    std::uniform_int_distribution<std::int64_t> value(-bound, bound);
    for (int t = 0; t < count; ++t) {
        int i = index(rng);
        int j = index(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        entries.push_back({i, j, value(rng)});
    }
    return EpsilonOracle::sparse(entries);
}

namespace {

struct Candidate {
    HallWord word;
    FGAbelianGroup group;
};

std::vector<Candidate> candidates(int n, int m, int max_letter, int min_weight, const SphereGroupTable& table) {
    std::vector<Candidate> out;
    for (const auto& w : dimension_truncation(max_letter, n, GradingSequence::constant(m - 1))) {
        if (w.length() < min_weight) continue;
        auto g = table.lookup(n, (m - 1) * w.length() + 1);
        if (g && !g->is_zero()) out.push_back({w, *g});
    }
    if (out.empty())
        throw DomainError("no Hall word on " + std::to_string(max_letter) + " letters has a known nonzero group for n=" +
                          std::to_string(n) + ", m=" + std::to_string(m));
    return out;
}

// Nonzero values only; repeated words may still cancel.
std::vector<std::pair<HallWord, GroupElement>> pick(Rng& rng, const std::vector<Candidate>& pool) {
    std::vector<std::pair<HallWord, GroupElement>> out;
    const int count = std::uniform_int_distribution<int>(1, 6)(rng);
    std::uniform_int_distribution<std::size_t> which(0, pool.size() - 1);
    for (int t = 0; t < count; ++t) {
        const auto& c = pool[which(rng)];
        GroupElement value = random_element(rng, c.group);
        while (value.is_zero()) value = random_element(rng, c.group);
        out.emplace_back(c.word, value);
    }
    return out;
}

}  // namespace

CoherentElement random_finite_support(Rng& rng, int n, int m, int max_letter, const SphereGroupTable& table) {
    return CoherentElement::finite_support(n, m, pick(rng, candidates(n, m, max_letter, 1, table)), table);
}

CoherentElement random_gtuple(Rng& rng, int n, int m, int max_letter, const SphereGroupTable& table) {
    ThetaFamilies families;
    for (auto& [w, f] : pick(rng, candidates(n, m, max_letter, 2, table))) families[w.min_letter()].emplace_back(w, f);
    return CoherentElement::gtuple(n, m, families, table);
}

}  // namespace cechhom
