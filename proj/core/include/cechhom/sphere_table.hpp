#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cechhom/abelian_groups.hpp"

namespace cechhom {

/// Homotopy groups of spheres pi_n(S^q) known as data.
///
/// Lookup order: built-in structural rules (n < q gives 0, n = q gives Z,
/// q = 1 and n >= 2 gives 0), then table entries. Everything else is Unknown
/// (std::nullopt); the table never guesses.
class SphereGroupTable {
public:
    using Key = std::pair<int, int>;  // (n, q)

    /// Rules only, no entries.
    SphereGroupTable() = default;

    /// The values the construction needs out of the box: pi_3(S^2) = Z,
    /// pi_4(S^2) = Z/2 and pi_{q+1}(S^q) = Z/2 for 3 <= q <= 6.
    static const SphereGroupTable& seed();

    /// Line format: `pi <n> <q> = <group>`, `#` comments, blank lines ignored.
    /// Throws ParseError (with line number) or ConsistencyError.
    static SphereGroupTable parse(std::string_view text, const std::string& source = "<text>");
    static SphereGroupTable load(const std::string& path);

    /// Adds one entry. Identical duplicates are accepted; conflicting ones and
    /// entries contradicting a built-in rule raise ConsistencyError.
    void insert(int n, int q, const FGAbelianGroup& group, std::string provenance);

    /// Known group or std::nullopt. Total for n, q >= 1.
    std::optional<FGAbelianGroup> lookup(int n, int q) const;

    /// Value forced by a structural rule, if any.
    static std::optional<FGAbelianGroup> builtin(int n, int q);

    const std::map<Key, FGAbelianGroup>& entries() const noexcept { return entries_; }
    const std::string& provenance(int n, int q) const;

    /// Normalized table text: one `pi n q = group` line per entry, sorted by key.
    std::string render() const;

    friend bool operator==(const SphereGroupTable& a, const SphereGroupTable& b) { return a.entries_ == b.entries_; }

private:
    std::map<Key, FGAbelianGroup> entries_;
    std::map<Key, std::string> provenance_;
};

}  // namespace cechhom
