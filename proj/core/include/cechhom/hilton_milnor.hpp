#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cechhom/abelian_groups.hpp"
#include "cechhom/coordinates.hpp"
#include "cechhom/errors.hpp"
#include "cechhom/grading.hpp"
#include "cechhom/hall_basis.hpp"
#include "cechhom/sphere_table.hpp"

namespace cechhom {

/// Coordinates mention a word outside the domain of a bonding map.
class SupportError : public DomainError {
public:
    using DomainError::DomainError;
};

struct WedgeSummand {
    HallWord word;
    int height;
    GroupExpr group;  ///< pi_n(S^{h(w)+1}), a symbol if the table does not know it
};

/// pi_n of the wedge of the first k spheres S^{r_i+1}, one summand per w in H_{n,k}.
struct WedgeDecomposition {
    int n;
    int k;
    GradingSequence grading;
    std::vector<WedgeSummand> summands;
    /// n <= r_1: the wedge is (n)-connected and the decomposition is empty.
    bool trivial_by_connectivity = false;

    /// Normalized direct sum of the summand groups.
    GroupExpr total() const;
};

WedgeDecomposition decompose_wedge(int n, int k, const GradingSequence& grading, const SphereGroupTable& table);

/// p_{k+1,k}: identity on the coordinates of H_{n,k}, zero on words containing a_{k+1}.
class BondingMap {
public:
    BondingMap(int n, int k, GradingSequence grading);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    /// H_{n,k+1}
    const std::vector<HallWord>& domain() const noexcept { return domain_; }
    bool kills(const HallWord& w) const noexcept { return w.contains(k_ + 1); }

private:
    int n_;
    int k_;
    GradingSequence grading_;
    std::vector<HallWord> domain_;
};

BondingMap bonding(int n, int k, const GradingSequence& grading);

/// Throws SupportError if some coordinate is indexed by a word outside H_{n,k+1}.
Coordinates apply_bonding(const BondingMap& b, const Coordinates& coords);

/// Product over the height classes of H_{n,infinity}: a class of height h with c
/// words contributes pi_n(S^{h+1})^c, an infinite class PROD_N pi_n(S^{h+1}).
/// Zero when n <= r_1.
GroupExpr cech_decompose(int n, const GradingSequence& grading, const SphereGroupTable& table);

/// sum over 1 <= j <= (n-1)/(m-1) of PROD_N pi_n(S^{(m-1)j+1}).
GroupExpr earring_formula(int n, int m, const SphereGroupTable& table);

/// W_j = PROD_N pi_n(S^{(m-1)j+1}); Zero once (m-1)j + 1 > n.
GroupExpr weight_summand(int n, int m, int j, const SphereGroupTable& table);

/// sum of W_j over j >= 2.
GroupExpr relative_cech(int n, int m, const SphereGroupTable& table);

struct StabilizationRow {
    int m;
    GroupExpr value;  ///< earring_formula(m + s, m)
    bool in_stable_range;
};

struct StabilizationReport {
    int offset;
    std::vector<StabilizationRow> rows;
    /// Every row with m >= s + 2 has the same, fully resolved value.
    bool stable = false;
    std::optional<GroupExpr> stable_value;
    std::vector<std::string> warnings;

    /// "stable: (Z/2)^N", "not stable", or "undetermined: ..." .
    std::string verdict() const;
};

StabilizationReport stabilization_report(int offset, int m_first, int m_last, const SphereGroupTable& table);

}  // namespace cechhom
