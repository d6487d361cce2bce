#include "cechhom/hilton_milnor.hpp"

#include <algorithm>

namespace cechhom {

GroupExpr WedgeDecomposition::total() const {
    std::vector<GroupExpr> groups;
    groups.reserve(summands.size());
    for (const auto& s : summands) groups.push_back(s.group);
    return normalize(GroupExpr::direct_sum(std::move(groups)));
}

WedgeDecomposition decompose_wedge(int n, int k, const GradingSequence& grading, const SphereGroupTable& table) {
    if (n < 2) throw DomainError("decompose_wedge needs n >= 2");
    if (k < 1) throw DomainError("decompose_wedge needs k >= 1");
    WedgeDecomposition out{n, k, grading, {}, false};
    if (n <= grading.first()) {
        out.trivial_by_connectivity = true;
        return out;
    }
    for (const auto& w : dimension_truncation(k, n, grading)) {
        const int h = height(w, grading);
        out.summands.push_back({w, h, resolve(GroupExpr::sphere(n, h + 1), table)});
    }
    return out;
}

BondingMap::BondingMap(int n, int k, GradingSequence grading)
    : n_(n), k_(k), grading_(std::move(grading)), domain_(dimension_truncation(k + 1, n, grading_)) {
    if (k < 1) throw DomainError("bonding map needs k >= 1");
}

BondingMap bonding(int n, int k, const GradingSequence& grading) { return BondingMap(n, k, grading); }

Coordinates apply_bonding(const BondingMap& b, const Coordinates& coords) {
    Coordinates out;
    for (const auto& [w, f] : coords) {
        if (!std::binary_search(b.domain().begin(), b.domain().end(), w))
            throw SupportError(w.to_string() + " is not in H_{" + std::to_string(b.n()) + "," +
                               std::to_string(b.k() + 1) + "}");
        if (!b.kills(w)) accumulate(out, w, f);
    }
    return out;
}

GroupExpr cech_decompose(int n, const GradingSequence& grading, const SphereGroupTable& table) {
    if (n < 2) throw DomainError("cech_decompose needs n >= 2");
    if (n <= grading.first()) return GroupExpr::zero();
    std::vector<GroupExpr> blocks;
    for (const auto& [h, size] : height_class_census(n, grading)) {
        GroupExpr sym = GroupExpr::sphere(n, h + 1);
        blocks.push_back(size.countably_infinite ? GroupExpr::prod_n(sym) : GroupExpr::pow(sym, size.count));
    }
    return resolve(GroupExpr::direct_sum(std::move(blocks)), table);
}

namespace {

void require_earring(int n, int m) {
    if (n < 2 || m < 2) throw DomainError("earring groups need n, m >= 2");
}

}  // namespace

GroupExpr weight_summand(int n, int m, int j, const SphereGroupTable& table) {
    require_earring(n, m);
    if (j < 1) throw DomainError("weight_summand needs j >= 1");
    const long q = static_cast<long>(m - 1) * j + 1;
    if (q > n) return GroupExpr::zero();
    return resolve(GroupExpr::prod_n(GroupExpr::sphere(n, static_cast<int>(q))), table);
}

GroupExpr earring_formula(int n, int m, const SphereGroupTable& table) {
    require_earring(n, m);
    std::vector<GroupExpr> blocks;
    for (int j = 1; j <= (n - 1) / (m - 1); ++j)
        blocks.push_back(GroupExpr::prod_n(GroupExpr::sphere(n, (m - 1) * j + 1)));
    return resolve(GroupExpr::direct_sum(std::move(blocks)), table);
}

GroupExpr relative_cech(int n, int m, const SphereGroupTable& table) {
    require_earring(n, m);
    std::vector<GroupExpr> blocks;
    for (int j = 2; j <= (n - 1) / (m - 1); ++j) blocks.push_back(weight_summand(n, m, j, table));
    return normalize(GroupExpr::direct_sum(std::move(blocks)));
}

std::string StabilizationReport::verdict() const {
    if (stable) return "stable: " + render(*stable_value);
    const bool any_in_range = std::any_of(rows.begin(), rows.end(), [](const StabilizationRow& r) { return r.in_stable_range; });
    const bool symbolic = std::any_of(rows.begin(), rows.end(), [](const StabilizationRow& r) {
        return r.in_stable_range && r.value.has_symbols();
    });
    if (!any_in_range || symbolic) return "undetermined: " + warnings.front();
    return "not stable";
}

StabilizationReport stabilization_report(int offset, int m_first, int m_last, const SphereGroupTable& table) {
    if (offset < 0) throw DomainError("stabilization offset must be >= 0");
    if (m_first < 2 || m_last < m_first) throw DomainError("m range must satisfy 2 <= first <= last");
    StabilizationReport report{offset, {}, false, std::nullopt, {}};
    bool consistent = true;
    for (int m = m_first; m <= m_last; ++m) {
        GroupExpr value = earring_formula(m + offset, m, table);
        const bool in_range = m >= offset + 2;
        if (value.has_symbols())
            report.warnings.push_back("m = " + std::to_string(m) + ": " + render(value) +
                                      " has entries missing from the table");
        if (in_range) {
            if (!report.stable_value)
                report.stable_value = value;
            else if (!(*report.stable_value == value))
                consistent = false;
        }
        report.rows.push_back({m, std::move(value), in_range});
    }
    if (!report.stable_value) {
        report.warnings.insert(report.warnings.begin(),
                               "no m >= " + std::to_string(offset + 2) + " in the requested range");
        return report;
    }
    const bool resolved = std::none_of(report.rows.begin(), report.rows.end(), [](const StabilizationRow& r) {
        return r.in_stable_range && r.value.has_symbols();
    });
    report.stable = consistent && resolved;
    if (!report.stable) report.stable_value.reset();
    return report;
}

}  // namespace cechhom
