#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cechhom/abelian_groups.hpp"
#include "cechhom/coordinates.hpp"
#include "cechhom/errors.hpp"
#include "cechhom/grading.hpp"
#include "cechhom/hall_basis.hpp"
#include "cechhom/sphere_table.hpp"
#include "cechhom/whitehead.hpp"

namespace cechhom {

/// Two oracle kinds that cannot be combined into one element.
class IncompatibleOracleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Per minimal letter i, the coordinates f_{i,w} for w in M_i.
using GTupleData = std::map<int, std::map<HallWord, GroupElement>>;

/// An element of the Cech group of the m-dimensional earring in degree n, given
/// by a coordinate oracle over H_{n,infinity} and evaluated level by level.
///
/// The oracle is a finitely supported part plus at most one of
///   - a weight-2 family [a_i,a_j] -> eps_{i,j} * gamma (needs n = 2m - 1), or
///   - a G-tuple: finitely many f_{i,w}, w in M_i, for each letter i.
/// Every coordinate group is resolved against the table on construction.
class CoherentElement {
public:
    /// The zero element.
    CoherentElement(int n, int m);

    /// Throws DomainError for words outside H_{n,infinity}, UnresolvedGroupError
    /// for unknown groups, DomainError for values in the wrong group.
    static CoherentElement finite_support(int n, int m, const std::vector<std::pair<HallWord, GroupElement>>& coords,
                                          const SphereGroupTable& table);
    static CoherentElement weight2_family(int m, EpsilonOracle epsilon);
    /// Additionally requires L(w) >= 2 and min letter i for w listed under i.
    static CoherentElement gtuple(int n, int m, const ThetaFamilies& families, const SphereGroupTable& table);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    GradingSequence grading() const { return GradingSequence::constant(m_ - 1); }

    const Coordinates& finite_part() const noexcept { return finite_; }
    const std::optional<EpsilonOracle>& epsilon() const noexcept { return epsilon_; }
    const std::optional<GTupleData>& gtuple_data() const noexcept { return gtuple_; }

    /// Throws DomainError for different (n, m), IncompatibleOracleError for a
    /// weight-2 family against a G-tuple.
    CoherentElement operator+(const CoherentElement& other) const;
    CoherentElement operator-() const;

private:
    int n_;
    int m_;
    Coordinates finite_;
    std::optional<EpsilonOracle> epsilon_;
    std::optional<GTupleData> gtuple_;
};

CoherentElement add(const CoherentElement& a, const CoherentElement& b);
CoherentElement negate(const CoherentElement& e);

/// Coordinates {w -> f_w : w in H_{n,k}, f_w != 0}.
Coordinates level(const CoherentElement& e, int k);

struct Verdict {
    bool passed = true;
    int k = 0;                        ///< first failing level
    std::optional<HallWord> word;     ///< first failing coordinate, if any
    std::string detail;

    explicit operator bool() const noexcept { return passed; }
};

/// apply_bonding(level(k+1)) == level(k) for every k < kmax.
Verdict check_coherence(const CoherentElement& e, int kmax);
/// Same check for an arbitrary stream of level coordinates.
Verdict check_coherence(const std::function<Coordinates(int)>& levels, int n, const GradingSequence& grading,
                        int kmax);

/// Weight-one splitting: a_i -> g_i in pi_n(S^m).
CoherentElement zeta(int n, int m, const std::map<int, GroupElement>& g, const SphereGroupTable& table);

/// Weight-one coordinates of level k, keyed by letter index.
std::map<int, GroupElement> sigma_coords(const CoherentElement& e, int k);
/// True iff sigma_coords vanishes at every level <= kmax.
bool in_kernel_sigma(const CoherentElement& e, int kmax);

/// F_alpha = sum_i [l_i, sum_{j>i} eps_{i,j} l_j].
InfiniteSumExpr f_alpha(const EpsilonOracle& epsilon, int m);
/// project_level(F_alpha, k) == level(weight2_family(m, eps), k) for k <= kmax.
Verdict verify_edge(const EpsilonOracle& epsilon, int m, int kmax, const SphereGroupTable& table);

/// Theta(alpha) = sum_i sum_w l_w o f_{i,w}. Throws DomainError unless alpha is a pure G-tuple.
InfiniteSumExpr theta(const CoherentElement& alpha);
/// For k <= kmax: Theta is additive at level k and project_level(Theta(alpha+beta), k)
/// equals level(alpha+beta, k).
Verdict verify_theta_additive(const CoherentElement& alpha, const CoherentElement& beta, int kmax,
                              const SphereGroupTable& table);

struct GGroupForms {
    GroupExpr direct;       ///< PROD_N (sum over weights j of SUM_N pi_n(S^{(m-1)j+1}))
    GroupExpr distributed;  ///< sum over 2 <= j <= (n-1)/(m-1) of PROD_N SUM_N pi_n(S^{(m-1)j+1})
    bool equal;             ///< distribute_products(direct) == distributed
};

GGroupForms g_group_expr(int n, int m, const SphereGroupTable& table);

/// Element file:
///   element n=<n> m=<m>
///   support <word> = <c1,c2,...>
///   eps <i> <j> = <c>
///   gtuple <i> <word> = <c1,c2,...>
/// '#' starts a comment. Throws ParseError with the line number.
CoherentElement parse_element(std::string_view text, const SphereGroupTable& table);
CoherentElement load_element(const std::string& path, const SphereGroupTable& table);

}  // namespace cechhom
