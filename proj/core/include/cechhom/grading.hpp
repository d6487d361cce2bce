#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cechhom {

/// Monotone dimension data r_1 <= r_2 <= ... for a shrinking wedge of spheres S^{r_i + 1}.
/// Stored as an explicit prefix followed by a constant tail value.
class GradingSequence {
public:
    /// Throws DomainError if the data is not monotone or has entries < 1.
    GradingSequence(std::vector<int> prefix, int tail);

    /// r_i = r for every i; the earring E_m is constant(m - 1).
    static GradingSequence constant(int r);

    /// Parses "p1,p2,...,pk;t" or a single integer "t" (constant).
    static GradingSequence parse(std::string_view spec);

    /// r_i for i >= 1.
    int operator()(int letter) const;

    const std::vector<int>& prefix() const noexcept { return prefix_; }
    int tail() const noexcept { return tail_; }
    int first() const noexcept { return prefix_.empty() ? tail_ : prefix_.front(); }
    bool is_constant() const noexcept;

    std::string to_string() const;

    friend bool operator==(const GradingSequence&, const GradingSequence&) = default;

private:
    std::vector<int> prefix_;
    int tail_;
};

}  // namespace cechhom
