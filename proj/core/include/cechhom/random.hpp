#pragma once

#include <cstdint>
#include <random>

#include "cechhom/abelian_groups.hpp"
#include "cechhom/cech_elements.hpp"
#include "cechhom/sphere_table.hpp"
#include "cechhom/whitehead.hpp"

namespace cechhom {

/// Seeded generators for property runs. Same seed, same sequence.
using Rng = std::mt19937_64;

/// Free components in [-bound, bound], torsion components uniform.
GroupElement random_element(Rng& rng, const FGAbelianGroup& group, std::int64_t bound = 5);

/// Up to max_entries entries (i, j) with i < j <= max_index and values in [-bound, bound].
EpsilonOracle random_sparse_epsilon(Rng& rng, int max_index = 6, int max_entries = 10, std::int64_t bound = 3);

/// Finitely many coordinates on Hall words over letters <= max_letter whose group is
/// known and nonzero. Throws DomainError if no such word exists.
CoherentElement random_finite_support(Rng& rng, int n, int m, int max_letter, const SphereGroupTable& table);

/// G-tuple over words of weight >= 2 on letters <= max_letter with known, nonzero groups.
/// Throws DomainError if no such word exists.
CoherentElement random_gtuple(Rng& rng, int n, int m, int max_letter, const SphereGroupTable& table);

}  // namespace cechhom
