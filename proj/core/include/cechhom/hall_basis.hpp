#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cechhom/grading.hpp"

namespace cechhom {

/// A nested formal commutator over the letters a_1, a_2, ...
///
/// Values are immutable and share structure; copying is cheap. The ordering
/// operator is the canonical Hall order used throughout the library:
///   1. shorter words first,
///   2. then the larger maximal letter index last,
///   3. then lexicographically by (left, right) using this same order.
/// On letters it reduces to a_1 < a_2 < ... . Any tree can be compared, but the
/// order only carries meaning for Hall words.
class HallWord {
public:
    static HallWord letter(int index);
    static HallWord bracket(HallWord left, HallWord right);

    /// Parses "a3" or "[x,y]" (whitespace allowed).
    static HallWord parse(std::string_view text);

    bool is_letter() const noexcept;
    /// Valid only for letters.
    int letter_index() const;
    /// Valid only for brackets.
    const HallWord& left() const;
    const HallWord& right() const;

    /// Weight L(w): number of letters.
    int length() const noexcept;
    /// nu_i(w): occurrences of letter i.
    int multiplicity(int letter) const noexcept;
    /// nu_i(w) for i = 1..max_letter(), stored at index i - 1.
    const std::vector<int>& multiplicities() const noexcept;
    int min_letter() const noexcept;
    int max_letter() const noexcept;
    bool contains(int letter) const noexcept { return multiplicity(letter) > 0; }

    std::string to_string() const;

    friend bool operator==(const HallWord& a, const HallWord& b) noexcept;
    friend std::strong_ordering operator<=>(const HallWord& a, const HallWord& b) noexcept;

private:
    struct Node;
    explicit HallWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// All Hall words on a_1..a_k up to weight J, stratified by weight and sorted in
/// canonical order within each stratum.
class HallSet {
public:
    static constexpr std::size_t kDefaultStratumCap = 1'000'000;

    /// Builds the set incrementally in the number of letters, so the stratum of
    /// weight j for k letters is an ordered prefix of the one for k + 1 letters.
    /// Throws ResourceLimitError if any stratum would exceed `stratum_cap` words.
    static HallSet generate(int letters, int max_weight, std::size_t stratum_cap = kDefaultStratumCap);

    /// Same set on one more letter: appends the words containing a_{k+1}.
    HallSet with_next_letter(std::size_t stratum_cap = kDefaultStratumCap) const;

    int letters() const noexcept { return letters_; }
    int max_weight() const noexcept { return static_cast<int>(strata_.size()); }
    /// Words of weight j (1 <= j <= max_weight()).
    const std::vector<HallWord>& stratum(int weight) const;
    /// Every word, weight by weight.
    std::vector<HallWord> words() const;
    std::size_t size() const noexcept;

private:
    HallSet(int letters, std::vector<std::vector<HallWord>> strata)
        : letters_(letters), strata_(std::move(strata)) {}
    int letters_;
    std::vector<std::vector<HallWord>> strata_;
};

/// The three Hall conditions, checked recursively against the canonical order.
/// Words using letters above k are never Hall on k letters.
bool is_hall(const HallWord& w, int letters);

/// h(w) = sum_i r_i nu_i(w).
int height(const HallWord& w, const GradingSequence& grading);

/// Moebius function by trial division.
int moebius(std::uint64_t n);

/// Necklace polynomial M_k(j) = (1/j) sum_{d | j} mu(d) k^{j/d}.
/// Throws ResourceLimitError when the value does not fit in 64 bits.
std::uint64_t necklace_count(std::uint64_t letters, std::uint64_t weight);

/// H_{n,k}: Hall words on k letters with h(w) + 1 <= n, in canonical order.
std::vector<HallWord> dimension_truncation(int letters, int n, const GradingSequence& grading);

/// M_i(j) restricted to k letters: weight-j Hall words whose smallest letter is a_i.
std::vector<HallWord> min_letter_partition(int letter, int weight, int letters);

/// Size of one height class of H_infinity.
struct ClassSize {
    bool countably_infinite = false;
    std::uint64_t count = 0;  ///< meaningful when !countably_infinite

    friend bool operator==(const ClassSize&, const ClassSize&) = default;
};

/// Cardinality of {w in H_infinity : h(w) = h} for every height h with h + 1 <= n
/// that is attained. Heights with no Hall word are omitted.
std::map<int, ClassSize> height_class_census(int n, const GradingSequence& grading);

/// Same classification restricted to the first k letters; every class is finite.
std::map<int, std::uint64_t> height_census_at(int letters, int n, const GradingSequence& grading);

}  // namespace cechhom

template <>
struct std::hash<cechhom::HallWord> {
    std::size_t operator()(const cechhom::HallWord& w) const noexcept;
};
