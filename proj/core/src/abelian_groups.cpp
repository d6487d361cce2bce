#include "cechhom/abelian_groups.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include <json.hpp>

#include "cechhom/errors.hpp"
#include "cechhom/sphere_table.hpp"

namespace cechhom {

// ---------------------------------------------------------------------------
// FGAbelianGroup

FGAbelianGroup FGAbelianGroup::from_cyclics(int rank, const std::vector<std::uint64_t>& orders) {
    if (rank < 0) throw DomainError("abelian group rank must be >= 0");
    // prime -> prime powers p^e occurring among the cyclic factors
    std::map<std::uint64_t, std::vector<std::uint64_t>> primary;
    for (std::uint64_t order : orders) {
        if (order == 0) throw DomainError("cyclic factor of order 0; use the free rank instead");
        std::uint64_t n = order;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            std::uint64_t power = 1;
            while (n % p == 0) {
                n /= p;
                power *= p;
            }
            primary[p].push_back(power);
        }
        if (n > 1) primary[n].push_back(n);
    }
    std::size_t factors = 0;
    for (auto& [p, powers] : primary) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        factors = std::max(factors, powers.size());
    }
    // largest invariant factor collects the largest power of every prime, and so on
    std::vector<std::uint64_t> torsion(factors, 1);
    for (const auto& [p, powers] : primary)
        for (std::size_t i = 0; i < powers.size(); ++i) torsion[factors - 1 - i] *= powers[i];

    FGAbelianGroup g;
    g.rank_ = rank;
    g.torsion_ = std::move(torsion);
    return g;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_count(std::string_view s, std::string_view context) {
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("group: bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

std::string power_suffix(std::uint64_t a) { return a == 1 ? "" : "^" + std::to_string(a); }

std::string join_components(const FGAbelianGroup& g, const char* sep) {
    if (g.is_zero()) return "0";
    std::vector<std::string> parts;
    if (g.rank() > 0) parts.push_back("Z" + power_suffix(static_cast<std::uint64_t>(g.rank())));
    const auto& t = g.torsion();
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        const std::uint64_t run = j - i;
        const std::string cyc = "Z/" + std::to_string(t[i]);
        parts.push_back(run == 1 ? cyc : "(" + cyc + ")" + power_suffix(run));
        i = j;
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

FGAbelianGroup FGAbelianGroup::parse(std::string_view text) {
    const std::string_view whole = trim(text);
    if (whole == "0") return {};
    if (whole.empty()) throw ParseError("group: empty");
    int rank = 0;
    std::vector<std::uint64_t> orders;
    std::string_view rest = whole;
    while (true) {
        auto plus = rest.find('+');
        std::string_view term = trim(rest.substr(0, plus));
        if (term == "Z") {
            rank += 1;
        } else if (term.starts_with("Z^")) {
            auto a = parse_count(term.substr(2), whole);
            if (a < 1) throw ParseError("group: exponent must be >= 1 in '" + std::string(whole) + "'");
            rank += static_cast<int>(a);
        } else if (term.starts_with("Z/")) {
            auto t = parse_count(term.substr(2), whole);
            if (t < 2) throw ParseError("group: cyclic order must be >= 2 in '" + std::string(whole) + "'");
            orders.push_back(t);
        } else if (term.starts_with("(Z/")) {
            auto close = term.find(')');
            if (close == std::string_view::npos || close + 1 >= term.size() || term[close + 1] != '^')
                throw ParseError("group: expected '(Z/t)^a' in '" + std::string(whole) + "'");
            auto t = parse_count(term.substr(3, close - 3), whole);
            auto a = parse_count(term.substr(close + 2), whole);
            if (t < 2 || a < 1) throw ParseError("group: need t >= 2 and a >= 1 in '" + std::string(whole) + "'");
            orders.insert(orders.end(), a, t);
        } else {
            throw ParseError("group: unrecognized term '" + std::string(term) + "'");
        }
        if (plus == std::string_view::npos) break;
        rest.remove_prefix(plus + 1);
    }
    return from_cyclics(rank, orders);
}

std::string FGAbelianGroup::to_string() const { return join_components(*this, " + "); }
std::string FGAbelianGroup::render() const { return join_components(*this, " (+) "); }

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(FGAbelianGroup ambient)
    : ambient_(std::move(ambient)),
      free_(static_cast<std::size_t>(ambient_.rank()), 0),
      torsion_(ambient_.torsion().size(), 0) {}

GroupElement::GroupElement(FGAbelianGroup ambient, const std::vector<std::int64_t>& components)
    : GroupElement(std::move(ambient)) {
    if (components.size() != ambient_.components())
        throw DomainError("element has " + std::to_string(components.size()) + " components, group " +
                          ambient_.render() + " needs " + std::to_string(ambient_.components()));
    std::copy_n(components.begin(), free_.size(), free_.begin());
    std::copy(components.begin() + static_cast<std::ptrdiff_t>(free_.size()), components.end(), torsion_.begin());
    reduce();
}

void GroupElement::reduce() {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        const auto d = static_cast<std::int64_t>(ambient_.torsion()[i]);
        torsion_[i] %= d;
        if (torsion_[i] < 0) torsion_[i] += d;
    }
}

std::vector<std::int64_t> GroupElement::components() const {
    std::vector<std::int64_t> out = free_;
    out.insert(out.end(), torsion_.begin(), torsion_.end());
    return out;
}

bool GroupElement::is_zero() const noexcept {
    auto nz = [](std::int64_t v) { return v != 0; };
    return std::none_of(free_.begin(), free_.end(), nz) && std::none_of(torsion_.begin(), torsion_.end(), nz);
}

GroupElement GroupElement::operator+(const GroupElement& other) const {
    if (ambient_ != other.ambient_)
        throw DomainError("cannot add elements of " + ambient_.render() + " and " + other.ambient_.render());
    GroupElement out = *this;
    for (std::size_t i = 0; i < free_.size(); ++i) out.free_[i] += other.free_[i];
    for (std::size_t i = 0; i < torsion_.size(); ++i) out.torsion_[i] += other.torsion_[i];
    out.reduce();
    return out;
}

GroupElement GroupElement::operator-() const { return scaled(-1); }

GroupElement GroupElement::scaled(std::int64_t factor) const {
    GroupElement out = *this;
    for (auto& v : out.free_) v *= factor;
    for (auto& v : out.torsion_) v *= factor;
    out.reduce();
    return out;
}

std::string GroupElement::to_string() const {
    std::string out;
    auto comps = components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(comps[i]);
    }
    return out;
}

GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
GroupElement negate(const GroupElement& x) { return -x; }

// ---------------------------------------------------------------------------
// GroupExpr

struct GroupExpr::Node {
    Kind kind = Kind::Zero;
    FGAbelianGroup group;
    int n = 0;
    int q = 0;
    std::uint64_t exponent = 0;
    std::vector<GroupExpr> children;
};

GroupExpr::GroupExpr() {
    static const auto zero_node = std::make_shared<const Node>();
    node_ = zero_node;
}

GroupExpr GroupExpr::finite(FGAbelianGroup group) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Finite;
    node->group = std::move(group);
    return GroupExpr(std::move(node));
}

GroupExpr GroupExpr::sphere(int n, int q) {
    if (n < 1 || q < 1) throw DomainError("pi_n(S^q) needs n, q >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Sphere;
    node->n = n;
    node->q = q;
    return GroupExpr(std::move(node));
}

GroupExpr GroupExpr::direct_sum(std::vector<GroupExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::DirectSum;
    node->children = std::move(children);
    return GroupExpr(std::move(node));
}

GroupExpr GroupExpr::pow(GroupExpr base, std::uint64_t exponent) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Pow;
    node->exponent = exponent;
    node->children.push_back(std::move(base));
    return GroupExpr(std::move(node));
}

GroupExpr GroupExpr::sum_n(GroupExpr base) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::SumN;
    node->children.push_back(std::move(base));
    return GroupExpr(std::move(node));
}

GroupExpr GroupExpr::prod_n(GroupExpr base) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::ProdN;
    node->children.push_back(std::move(base));
    return GroupExpr(std::move(node));
}

GroupExpr::Kind GroupExpr::kind() const noexcept { return node_->kind; }

const FGAbelianGroup& GroupExpr::group() const {
    if (kind() != Kind::Finite) throw DomainError("group() on a non-finite expression");
    return node_->group;
}

int GroupExpr::sphere_n() const {
    if (kind() != Kind::Sphere) throw DomainError("sphere_n() on a non-sphere expression");
    return node_->n;
}

int GroupExpr::sphere_q() const {
    if (kind() != Kind::Sphere) throw DomainError("sphere_q() on a non-sphere expression");
    return node_->q;
}

const std::vector<GroupExpr>& GroupExpr::children() const { return node_->children; }

const GroupExpr& GroupExpr::base() const {
    if (kind() != Kind::Pow && kind() != Kind::SumN && kind() != Kind::ProdN)
        throw DomainError("base() needs Pow, SUM_N or PROD_N");
    return node_->children.front();
}

std::uint64_t GroupExpr::exponent() const {
    if (kind() != Kind::Pow) throw DomainError("exponent() on a non-power expression");
    return node_->exponent;
}

bool GroupExpr::has_symbols() const {
    if (kind() == Kind::Sphere) return true;
    return std::any_of(children().begin(), children().end(), [](const GroupExpr& c) { return c.has_symbols(); });
}

bool operator==(const GroupExpr& a, const GroupExpr& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const GroupExpr& a, const GroupExpr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    using Kind = GroupExpr::Kind;
    switch (a.kind()) {
        case Kind::Zero:
            return std::strong_ordering::equal;
        case Kind::Finite:
            return a.group() <=> b.group();
        case Kind::Sphere:
            if (auto c = a.sphere_n() <=> b.sphere_n(); c != 0) return c;
            return a.sphere_q() <=> b.sphere_q();
        case Kind::Pow:
            if (auto c = a.base() <=> b.base(); c != 0) return c;
            return a.exponent() <=> b.exponent();
        case Kind::SumN:
        case Kind::ProdN:
            return a.base() <=> b.base();
        case Kind::DirectSum:
            return std::lexicographical_compare_three_way(a.children().begin(), a.children().end(),
                                                          b.children().begin(), b.children().end());
    }
    return std::strong_ordering::equal;
}

GroupExpr normalize(const GroupExpr& e) {
    using Kind = GroupExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero:
        case Kind::Sphere:
            return e;
        case Kind::Finite:
            return e.group().is_zero() ? GroupExpr::zero() : e;
        case Kind::Pow: {
            GroupExpr b = normalize(e.base());
            if (b.kind() == Kind::Zero || e.exponent() == 0) return GroupExpr::zero();
            return e.exponent() == 1 ? b : GroupExpr::pow(b, e.exponent());
        }
        case Kind::SumN: {
            GroupExpr b = normalize(e.base());
            return b.kind() == Kind::Zero ? b : GroupExpr::sum_n(b);
        }
        case Kind::ProdN: {
            GroupExpr b = normalize(e.base());
            return b.kind() == Kind::Zero ? b : GroupExpr::prod_n(b);
        }
        case Kind::DirectSum: {
            std::vector<GroupExpr> flat;
            for (const auto& c : e.children()) {
                GroupExpr nc = normalize(c);
                if (nc.kind() == Kind::Zero) continue;
                if (nc.kind() == Kind::DirectSum)
                    flat.insert(flat.end(), nc.children().begin(), nc.children().end());
                else
                    flat.push_back(std::move(nc));
            }
            if (flat.empty()) return GroupExpr::zero();
            if (flat.size() == 1) return flat.front();
            std::sort(flat.begin(), flat.end());
            return GroupExpr::direct_sum(std::move(flat));
        }
    }
    return e;
}

namespace {

GroupExpr resolve_raw(const GroupExpr& e, const SphereGroupTable& table) {
    using Kind = GroupExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero:
        case Kind::Finite:
            return e;
        case Kind::Sphere: {
            auto g = table.lookup(e.sphere_n(), e.sphere_q());
            return g ? GroupExpr::finite(*g) : e;
        }
        case Kind::Pow:
            return GroupExpr::pow(resolve_raw(e.base(), table), e.exponent());
        case Kind::SumN:
            return GroupExpr::sum_n(resolve_raw(e.base(), table));
        case Kind::ProdN:
            return GroupExpr::prod_n(resolve_raw(e.base(), table));
        case Kind::DirectSum: {
            std::vector<GroupExpr> cs;
            for (const auto& c : e.children()) cs.push_back(resolve_raw(c, table));
            return GroupExpr::direct_sum(std::move(cs));
        }
    }
    return e;
}

GroupExpr distribute_raw(const GroupExpr& e) {
    using Kind = GroupExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero:
        case Kind::Finite:
        case Kind::Sphere:
            return e;
        case Kind::Pow:
            return GroupExpr::pow(distribute_raw(e.base()), e.exponent());
        case Kind::SumN:
            return GroupExpr::sum_n(distribute_raw(e.base()));
        case Kind::ProdN: {
            GroupExpr b = normalize(distribute_raw(e.base()));
            if (b.kind() != Kind::DirectSum) return GroupExpr::prod_n(b);
            std::vector<GroupExpr> cs;
            for (const auto& c : b.children()) cs.push_back(GroupExpr::prod_n(c));
            return GroupExpr::direct_sum(std::move(cs));
        }
        case Kind::DirectSum: {
            std::vector<GroupExpr> cs;
            for (const auto& c : e.children()) cs.push_back(distribute_raw(c));
            return GroupExpr::direct_sum(std::move(cs));
        }
    }
    return e;
}

}  // namespace

GroupExpr resolve(const GroupExpr& e, const SphereGroupTable& table) { return normalize(resolve_raw(e, table)); }

GroupExpr distribute_products(const GroupExpr& e) { return normalize(distribute_raw(e)); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

using json = nlohmann::json;

bool is_compound_finite(const GroupExpr& e) {
    return e.kind() == GroupExpr::Kind::Finite && e.group().components() > 1;
}

std::string render_text(const GroupExpr& e);

// operand of a postfix power: Z and pi_n(S^q) stand alone, everything else is parenthesized
std::string power_operand(const GroupExpr& e) {
    if (e.kind() == GroupExpr::Kind::Sphere) return render_text(e);
    if (e.kind() == GroupExpr::Kind::Finite && e.group() == FGAbelianGroup::integers()) return "Z";
    return "(" + render_text(e) + ")";
}

// operand of a prefix SUM_N / PROD_N or a summand of (+)
std::string grouped_operand(const GroupExpr& e) {
    if (e.kind() == GroupExpr::Kind::DirectSum || is_compound_finite(e)) return "(" + render_text(e) + ")";
    return render_text(e);
}

std::string render_text(const GroupExpr& e) {
    using Kind = GroupExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero:
            return "0";
        case Kind::Finite:
            return e.group().render();
        case Kind::Sphere:
            return "pi_" + std::to_string(e.sphere_n()) + "(S^" + std::to_string(e.sphere_q()) + ")";
        case Kind::Pow:
            return power_operand(e.base()) + "^" + std::to_string(e.exponent());
        case Kind::SumN:
            return "SUM_N " + grouped_operand(e.base());
        case Kind::ProdN:
            if (e.base().kind() == Kind::Finite || e.base().kind() == Kind::Sphere)
                return power_operand(e.base()) + "^N";
            return "PROD_N " + grouped_operand(e.base());
        case Kind::DirectSum: {
            std::string out;
            for (std::size_t i = 0; i < e.children().size(); ++i) {
                if (i) out += " (+) ";
                out += grouped_operand(e.children()[i]);
            }
            return out;
        }
    }
    return {};
}

const char* kind_name(GroupExpr::Kind k) {
    switch (k) {
        case GroupExpr::Kind::Zero: return "zero";
        case GroupExpr::Kind::Finite: return "finite";
        case GroupExpr::Kind::Sphere: return "sphere";
        case GroupExpr::Kind::Pow: return "pow";
        case GroupExpr::Kind::SumN: return "sum_n";
        case GroupExpr::Kind::ProdN: return "prod_n";
        case GroupExpr::Kind::DirectSum: return "direct_sum";
    }
    return "?";
}

json to_json(const GroupExpr& e) {
    using Kind = GroupExpr::Kind;
    json j;
    j["kind"] = kind_name(e.kind());
    switch (e.kind()) {
        case Kind::Zero:
            break;
        case Kind::Finite:
            j["rank"] = e.group().rank();
            j["torsion"] = e.group().torsion();
            break;
        case Kind::Sphere:
            j["n"] = e.sphere_n();
            j["q"] = e.sphere_q();
            break;
        case Kind::Pow:
            j["exponent"] = e.exponent();
            [[fallthrough]];
        case Kind::SumN:
        case Kind::ProdN:
        case Kind::DirectSum: {
            json cs = json::array();
            for (const auto& c : e.children()) cs.push_back(to_json(c));
            j["children"] = std::move(cs);
            break;
        }
    }
    return j;
}

GroupExpr from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("machine expression: object with a string 'kind' expected");
    const std::string kind = j["kind"];
    auto single_child = [&]() {
        if (!j.contains("children") || !j["children"].is_array() || j["children"].size() != 1)
            throw ParseError("machine expression: '" + kind + "' needs exactly one child");
        return from_json(j["children"][0]);
    };
    try {
        if (kind == "zero") return GroupExpr::zero();
        if (kind == "finite") {
            const int rank = j.at("rank").get<int>();
            const auto torsion = j.at("torsion").get<std::vector<std::uint64_t>>();
            auto g = FGAbelianGroup::from_cyclics(rank, torsion);
            if (g.torsion() != torsion) throw ParseError("machine expression: torsion not in invariant-factor form");
            return GroupExpr::finite(std::move(g));
        }
        if (kind == "sphere") return GroupExpr::sphere(j.at("n").get<int>(), j.at("q").get<int>());
        if (kind == "pow") {
            auto base = single_child();
            return GroupExpr::pow(std::move(base), j.at("exponent").get<std::uint64_t>());
        }
        if (kind == "sum_n") return GroupExpr::sum_n(single_child());
        if (kind == "prod_n") return GroupExpr::prod_n(single_child());
        if (kind == "direct_sum") {
            std::vector<GroupExpr> cs;
            for (const auto& c : j.at("children")) cs.push_back(from_json(c));
            return GroupExpr::direct_sum(std::move(cs));
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("machine expression: ") + ex.what());
    }
    throw ParseError("machine expression: unknown kind '" + kind + "'");
}

}  // namespace

std::string render(const GroupExpr& e, RenderMode mode) {
    if (mode == RenderMode::Text) return render_text(e);
    return to_json(e).dump();
}

GroupExpr parse_machine(std::string_view json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw ParseError("machine expression: invalid JSON");
    return from_json(j);
}

}  // namespace cechhom
