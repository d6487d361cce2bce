#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cechhom/coordinates.hpp"
#include "cechhom/grading.hpp"
#include "cechhom/hall_basis.hpp"

namespace cechhom {

class SphereGroupTable;

/// Dimension d_i of the sphere carrying generator a_i (d_i = r_i + 1). All >= 2.
class LetterDegrees {
public:
    LetterDegrees(std::vector<int> degrees, int tail);
    static LetterDegrees constant(int degree) { return LetterDegrees({}, degree); }
    static LetterDegrees from_grading(const GradingSequence& grading);

    int operator()(int letter) const;

    friend bool operator==(const LetterDegrees&, const LetterDegrees&) = default;

private:
    std::vector<int> degrees_;
    int tail_;
};

/// deg(a_i) = d_i, deg[x,y] = deg x + deg y - 1.
int whitehead_degree(const HallWord& monomial, const LetterDegrees& degrees);

/// Integer combination of Whitehead bracket monomials (trees over the letters).
class FormalSum {
public:
    explicit FormalSum(LetterDegrees degrees) : degrees_(std::move(degrees)) {}
    static FormalSum monomial(const HallWord& w, LetterDegrees degrees, std::int64_t coefficient = 1);

    const LetterDegrees& degrees() const noexcept { return degrees_; }
    const std::map<HallWord, std::int64_t>& terms() const noexcept { return terms_; }
    std::int64_t coefficient(const HallWord& w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Common degree of the monomials; nullopt for the zero sum.
    std::optional<int> degree() const;

    void add(const HallWord& w, std::int64_t coefficient);
    FormalSum operator+(const FormalSum& other) const;
    FormalSum operator-(const FormalSum& other) const { return *this + other.scaled(-1); }
    FormalSum scaled(std::int64_t factor) const;

    /// "2*[a1,a2] - [a1,a3]", or "0".
    std::string to_string() const;

    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    LetterDegrees degrees_;
    std::map<HallWord, std::int64_t> terms_;
};

/// Bracket expressions whose leaves may be sums, integer multiples or zero,
/// e.g. "[a1, 2*a2 + a3]". Text syntax: letters `a<i>`, brackets `[x,y]`,
/// multiples `3*x`, sums `x + y` / `x - y`, zero `0`, parentheses.
class BracketExpr {
public:
    enum class Kind { Zero, Letter, Scale, Sum, Bracket };

    static BracketExpr zero();
    static BracketExpr letter(int index);
    static BracketExpr scale(std::int64_t factor, BracketExpr e);
    static BracketExpr sum(std::vector<BracketExpr> terms);
    static BracketExpr bracket(BracketExpr x, BracketExpr y);
    static BracketExpr parse(std::string_view text);

    Kind kind() const noexcept;
    int letter_index() const;
    std::int64_t factor() const;
    const std::vector<BracketExpr>& operands() const;

    std::string to_string() const;

private:
    struct Node;
    explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Full multilinear expansion: bilinearity in each bracket slot and [x,0] = [0,x] = 0.
/// Throws DomainError when a sum mixes degrees.
FormalSum expand(const BracketExpr& e, const LetterDegrees& degrees);

/// 0 if a_letter occurs in w, else w itself.
FormalSum substitute_zero(const HallWord& w, int letter, const LetterDegrees& degrees);
/// Same, termwise.
FormalSum substitute_zero(const FormalSum& s, int letter);

/// [x,y] = (-1)^{deg x deg y} [y,x]: returns the sign and [y,x]. Throws DomainError on a letter.
std::pair<int, HallWord> graded_swap(const HallWord& monomial, const LetterDegrees& degrees);

struct HallNormalForm {
    std::map<HallWord, std::int64_t> hall;
    /// Monomials containing a Whitehead square [a_i,a_i]; never reduced further.
    FormalSum residual;
};

/// Rewrites a combination of weight <= 3 monomials on letters <= k into Hall
/// coordinates using graded symmetry and the graded Jacobi identity.
/// Throws DomainError for weight > 3 or letters above k.
HallNormalForm hall_normalize(const FormalSum& s, int letters);

/// Element of the free graded associative ring: words with integer coefficients.
using TensorElement = std::map<std::vector<int>, std::int64_t>;

/// Independent check of the bracket rewriting. Embeds Whitehead products into
/// the tensor algebra graded by |a_i| = d_i - 1 through
///   [x,y] -> (-1)^{|x|} (x (x) y - (-1)^{|x||y|} y (x) x),
/// which respects bilinearity, graded symmetry and the graded Jacobi identity in
/// the sign convention of this library. Limited to weight <= 4 and at most three
/// distinct letters (ResourceLimitError otherwise).
TensorElement tensor_oracle(const FormalSum& s);

/// Integer matrix entries eps_{i,j}, i < j: a finitely supported sparse part plus
/// band rules "value c whenever 1 <= j - i <= B". Closed under sums and negation.
class EpsilonOracle {
public:
    struct Entry {
        int i;
        int j;
        std::int64_t value;
    };

    EpsilonOracle() = default;  ///< identically zero
    static EpsilonOracle sparse(const std::vector<Entry>& entries);
    static EpsilonOracle band(int width, std::int64_t value);

    /// eps_{i,j}; requires 1 <= i < j.
    std::int64_t operator()(int i, int j) const;

    EpsilonOracle operator+(const EpsilonOracle& other) const;
    EpsilonOracle operator-() const;

    const std::map<std::pair<int, int>, std::int64_t>& sparse_entries() const noexcept { return sparse_; }
    const std::map<int, std::int64_t>& bands() const noexcept { return bands_; }

private:
    std::map<std::pair<int, int>, std::int64_t> sparse_;
    std::map<int, std::int64_t> bands_;  // width -> value
};

/// sum_i [l_i, sum_{j>i} eps_{i,j} l_j] in pi_{2m-1} of the m-dimensional earring.
struct EdgeShape {
    int m;
    EpsilonOracle epsilon;
};

/// Per minimal letter i, finitely many (w, f) with w in M_i and f in pi_n(S^{h(w)+1}).
using ThetaFamilies = std::map<int, std::vector<std::pair<HallWord, GroupElement>>>;

/// sum_i sum_w l_w o f_{i,w}.
struct ThetaShape {
    int m;
    int n;
    ThetaFamilies families;
};

/// Formal sum of infinite-sum maps of the two supported shapes.
class InfiniteSumExpr {
public:
    using Term = std::variant<EdgeShape, ThetaShape>;

    /// Throws DomainError for m < 2.
    static InfiniteSumExpr edge(int m, EpsilonOracle epsilon);
    /// Throws DomainError if some w has weight < 2, is not a Hall word, or has
    /// smallest letter different from its family index.
    static InfiniteSumExpr theta(int m, int n, ThetaFamilies families);

    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Formal sum of the two maps.
    InfiniteSumExpr operator+(const InfiniteSumExpr& other) const;

    /// Linearity of infinite sums: merges all edge terms of equal m into one with
    /// summed eps, and theta terms of equal (m, n) by adding f_{i,w} (pairs that
    /// cancel disappear).
    InfiniteSumExpr linearized() const;

private:
    std::vector<Term> terms_;
};

/// Hilton coordinates of b_k applied to the expression, in pi_n of the wedge of
/// the first k spheres. Edge terms (which need n = 2m - 1) are expanded by
/// bilinearity and normalized; theta terms are read off word by word.
/// Throws UnresolvedGroupError, DomainError, or ConsistencyError if a
/// Whitehead square survives normalization.
Coordinates project_level(const InfiniteSumExpr& e, int k, int n, const SphereGroupTable& table);

}  // namespace cechhom
