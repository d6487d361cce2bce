#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cechhom {

class SphereGroupTable;

/// Z^rank + Z/d_1 + ... + Z/d_s with d_1 | d_2 | ... | d_s, every d_i >= 2.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;

    /// Invariant-factor normal form of Z^rank + sum_i Z/orders[i]. Orders of 1 are dropped.
    static FGAbelianGroup from_cyclics(int rank, const std::vector<std::uint64_t>& orders);
    static FGAbelianGroup integers() { return from_cyclics(1, {}); }
    static FGAbelianGroup cyclic(std::uint64_t order) { return from_cyclics(0, {order}); }

    /// Table syntax: "0" | term (" + " term)* with terms Z, Z^a, Z/t, (Z/t)^a.
    static FGAbelianGroup parse(std::string_view text);

    int rank() const noexcept { return rank_; }
    const std::vector<std::uint64_t>& torsion() const noexcept { return torsion_; }
    bool is_zero() const noexcept { return rank_ == 0 && torsion_.empty(); }
    /// Number of integer components of an element: rank + number of invariant factors.
    std::size_t components() const noexcept { return static_cast<std::size_t>(rank_) + torsion_.size(); }

    /// Table syntax, e.g. "Z + Z/12", "(Z/2)^2".
    std::string to_string() const;
    /// Expression syntax, e.g. "Z (+) Z/12", "(Z/2)^2".
    std::string render() const;

    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;
    friend std::strong_ordering operator<=>(const FGAbelianGroup&, const FGAbelianGroup&) = default;

private:
    int rank_ = 0;
    std::vector<std::uint64_t> torsion_;
};

/// An element of a finitely generated abelian group: integer free part and
/// torsion residues reduced into [0, d_i).
class GroupElement {
public:
    /// The zero element of `ambient`.
    explicit GroupElement(FGAbelianGroup ambient);
    /// components = free part followed by torsion part; torsion entries are reduced.
    GroupElement(FGAbelianGroup ambient, const std::vector<std::int64_t>& components);

    const FGAbelianGroup& ambient() const noexcept { return ambient_; }
    const std::vector<std::int64_t>& free_part() const noexcept { return free_; }
    const std::vector<std::int64_t>& torsion_part() const noexcept { return torsion_; }
    std::vector<std::int64_t> components() const;
    bool is_zero() const noexcept;

    /// Throws DomainError when the ambient groups differ.
    GroupElement operator+(const GroupElement& other) const;
    GroupElement operator-() const;
    GroupElement operator-(const GroupElement& other) const { return *this + (-other); }
    GroupElement& operator+=(const GroupElement& other) { return *this = *this + other; }
    GroupElement scaled(std::int64_t factor) const;

    /// Comma-separated components, e.g. "2,3".
    std::string to_string() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    void reduce();
    FGAbelianGroup ambient_;
    std::vector<std::int64_t> free_;
    std::vector<std::int64_t> torsion_;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupElement& x);

/// Formal expressions for (possibly infinitely generated) abelian groups:
/// finite groups, unresolved symbols pi_n(S^q), finite direct sums, finite
/// powers, countable direct sums SUM_N and countable direct products PROD_N.
class GroupExpr {
public:
    /// Declaration order is the canonical constructor rank used to sort summands.
    enum class Kind { Zero, Finite, Sphere, Pow, SumN, ProdN, DirectSum };

    GroupExpr();  ///< Zero
    static GroupExpr zero() { return GroupExpr(); }
    static GroupExpr finite(FGAbelianGroup group);
    static GroupExpr sphere(int n, int q);
    static GroupExpr direct_sum(std::vector<GroupExpr> children);
    static GroupExpr pow(GroupExpr base, std::uint64_t exponent);
    static GroupExpr sum_n(GroupExpr base);
    static GroupExpr prod_n(GroupExpr base);

    Kind kind() const noexcept;
    const FGAbelianGroup& group() const;            ///< Finite
    int sphere_n() const;                           ///< Sphere
    int sphere_q() const;                           ///< Sphere
    const std::vector<GroupExpr>& children() const; ///< DirectSum; one child for Pow/SumN/ProdN
    const GroupExpr& base() const;                  ///< Pow/SumN/ProdN
    std::uint64_t exponent() const;                 ///< Pow

    /// True if an unresolved sphere symbol occurs anywhere.
    bool has_symbols() const;

    friend bool operator==(const GroupExpr& a, const GroupExpr& b);
    friend std::strong_ordering operator<=>(const GroupExpr& a, const GroupExpr& b);

private:
    struct Node;
    explicit GroupExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Canonical form: sums flattened and sorted, Zero and trivial groups dropped,
/// Pow(x, 1) -> x, singleton sums unwrapped. Idempotent.
GroupExpr normalize(const GroupExpr& e);

/// Replaces every symbol the table knows; unknown symbols stay. Result is normalized.
GroupExpr resolve(const GroupExpr& e, const SphereGroupTable& table);

/// Regrouping rule PROD_N(A (+) B) -> PROD_N A (+) PROD_N B (finite sums commute
/// with arbitrary products). Result is normalized.
GroupExpr distribute_products(const GroupExpr& e);

enum class RenderMode { Text, Machine };

/// Text: "Z^N (+) Z^N", "(Z/2)^N", "PROD_N SUM_N Z/2", "pi_5(S^2)^N".
/// Machine: JSON document with fields kind, children, rank, torsion, n, q, exponent.
std::string render(const GroupExpr& e, RenderMode mode = RenderMode::Text);

/// Inverse of render(e, RenderMode::Machine). Throws ParseError on malformed input.
GroupExpr parse_machine(std::string_view json_text);

}  // namespace cechhom
