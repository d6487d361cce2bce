#include "cechhom/cech_elements.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cechhom/hilton_milnor.hpp"

namespace cechhom {

namespace {

FGAbelianGroup coordinate_group(int n, int m, const HallWord& w, const SphereGroupTable& table) {
    if (!is_hall(w, w.max_letter())) throw DomainError(w.to_string() + " is not a Hall word");
    const int q = (m - 1) * w.length() + 1;
    if (q > n)
        throw DomainError(w.to_string() + " has height " + std::to_string(q - 1) + ", outside H_{" +
                          std::to_string(n) + ",inf}");
    auto g = table.lookup(n, q);
    if (!g) throw UnresolvedGroupError(n, q);
    return *g;
}

void check_value(int n, int m, const HallWord& w, const GroupElement& f, const SphereGroupTable& table) {
    const FGAbelianGroup g = coordinate_group(n, m, w, table);
    if (f.ambient() != g)
        throw DomainError("coordinate " + w.to_string() + " -> " + f.to_string() + " lies in " + f.ambient().render() +
                          ", expected " + g.render());
}

void check_degrees(int n, int m) {
    if (n < 2 || m < 2) throw DomainError("earring elements need n, m >= 2");
}

void merge_into(GTupleData& acc, const GTupleData& more) {
    for (const auto& [i, family] : more) {
        auto& target = acc[i];
        for (const auto& [w, f] : family) {
            auto [it, fresh] = target.try_emplace(w, f);
            if (!fresh) it->second += f;
            if (it->second.is_zero()) target.erase(it);
        }
        if (target.empty()) acc.erase(i);
    }
}

}  // namespace

CoherentElement::CoherentElement(int n, int m) : n_(n), m_(m) { check_degrees(n, m); }

CoherentElement CoherentElement::finite_support(int n, int m,
                                                const std::vector<std::pair<HallWord, GroupElement>>& coords,
                                                const SphereGroupTable& table) {
    CoherentElement e(n, m);
    for (const auto& [w, f] : coords) {
        check_value(n, m, w, f, table);
        accumulate(e.finite_, w, f);
    }
    return e;
}

CoherentElement CoherentElement::weight2_family(int m, EpsilonOracle epsilon) {
    CoherentElement e(2 * m - 1, m);
    e.epsilon_ = std::move(epsilon);
    return e;
}

CoherentElement CoherentElement::gtuple(int n, int m, const ThetaFamilies& families, const SphereGroupTable& table) {
    CoherentElement e(n, m);
    GTupleData data;
    for (const auto& [i, list] : families) {
        for (const auto& [w, f] : list) {
            if (w.length() < 2) throw DomainError("G-tuple word " + w.to_string() + " has weight 1");
            if (w.min_letter() != i)
                throw DomainError("G-tuple word " + w.to_string() + " listed under a" + std::to_string(i) +
                                  " has smallest letter a" + std::to_string(w.min_letter()));
            check_value(n, m, w, f, table);
        }
        GTupleData one;
        for (const auto& [w, f] : list) merge_into(one, GTupleData{{i, {{w, f}}}});
        merge_into(data, one);
    }
    e.gtuple_ = std::move(data);
    return e;
}

CoherentElement CoherentElement::operator+(const CoherentElement& other) const {
    if (n_ != other.n_ || m_ != other.m_)
        throw DomainError("adding elements of different groups (n=" + std::to_string(n_) + ", m=" +
                          std::to_string(m_) + ") and (n=" + std::to_string(other.n_) + ", m=" +
                          std::to_string(other.m_) + ")");
    if ((epsilon_ && other.gtuple_) || (gtuple_ && other.epsilon_))
        throw IncompatibleOracleError("cannot add a weight-2 family and a G-tuple");
    CoherentElement out = *this;
    out.finite_ = finite_ + other.finite_;
    if (other.epsilon_) out.epsilon_ = epsilon_ ? *epsilon_ + *other.epsilon_ : *other.epsilon_;
    if (other.gtuple_) {
        if (!out.gtuple_) out.gtuple_.emplace();
        merge_into(*out.gtuple_, *other.gtuple_);
    }
    return out;
}

CoherentElement CoherentElement::operator-() const {
    CoherentElement out = *this;
    out.finite_ = -finite_;
    if (epsilon_) out.epsilon_ = -*epsilon_;
    if (gtuple_)
        for (auto& [i, family] : *out.gtuple_)
            for (auto& [w, f] : family) f = -f;
    return out;
}

CoherentElement add(const CoherentElement& a, const CoherentElement& b) { return a + b; }
CoherentElement negate(const CoherentElement& e) { return -e; }

Coordinates level(const CoherentElement& e, int k) {
    if (k < 1) throw DomainError("level needs k >= 1");
    Coordinates out;
    for (const auto& [w, f] : e.finite_part())
        if (w.max_letter() <= k) accumulate(out, w, f);
    if (e.epsilon()) {
        const FGAbelianGroup z = FGAbelianGroup::integers();
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                if (auto c = (*e.epsilon())(i, j); c != 0)
                    accumulate(out, HallWord::bracket(HallWord::letter(i), HallWord::letter(j)), GroupElement(z, {c}));
    }
    if (e.gtuple_data())
        for (const auto& [i, family] : *e.gtuple_data()) {
            if (i > k) break;
            for (const auto& [w, f] : family)
                if (w.max_letter() <= k) accumulate(out, w, f);
        }
    return out;
}

Verdict check_coherence(const std::function<Coordinates(int)>& levels, int n, const GradingSequence& grading,
                        int kmax) {
    if (kmax < 2) throw DomainError("check_coherence needs kmax >= 2");
    Coordinates lower = levels(1);
    for (int k = 1; k < kmax; ++k) {
        const Coordinates upper = levels(k + 1);
        Coordinates projected;
        try {
            projected = apply_bonding(bonding(n, k, grading), upper);
        } catch (const SupportError& err) {
            return {false, k + 1, std::nullopt, err.what()};
        }
        std::set<HallWord> words;
        for (const auto& [w, f] : projected) words.insert(w);
        for (const auto& [w, f] : lower) words.insert(w);
        for (const auto& w : words) {
            auto a = projected.find(w);
            auto b = lower.find(w);
            const bool same = a != projected.end() && b != lower.end() ? a->second == b->second : false;
            if (!same) {
                const std::string pv = a == projected.end() ? "0" : a->second.to_string();
                const std::string lv = b == lower.end() ? "0" : b->second.to_string();
                return {false, k, w,
                        "level " + std::to_string(k) + ", " + w.to_string() + ": bonding of level " +
                            std::to_string(k + 1) + " gives " + pv + ", level " + std::to_string(k) + " has " + lv};
            }
        }
        lower = upper;
    }
    return {};
}

Verdict check_coherence(const CoherentElement& e, int kmax) {
    return check_coherence([&e](int k) { return level(e, k); }, e.n(), e.grading(), kmax);
}

CoherentElement zeta(int n, int m, const std::map<int, GroupElement>& g, const SphereGroupTable& table) {
    std::vector<std::pair<HallWord, GroupElement>> coords;
    for (const auto& [i, value] : g) coords.emplace_back(HallWord::letter(i), value);
    return CoherentElement::finite_support(n, m, coords, table);
}

std::map<int, GroupElement> sigma_coords(const CoherentElement& e, int k) {
    std::map<int, GroupElement> out;
    for (const auto& [w, f] : level(e, k))
        if (w.is_letter()) out.emplace(w.letter_index(), f);
    return out;
}

bool in_kernel_sigma(const CoherentElement& e, int kmax) {
    for (int k = 1; k <= kmax; ++k)
        if (!sigma_coords(e, k).empty()) return false;
    return true;
}

InfiniteSumExpr f_alpha(const EpsilonOracle& epsilon, int m) { return InfiniteSumExpr::edge(m, epsilon); }

namespace {

Verdict compare_levels(const Coordinates& got, const Coordinates& want, int k, const std::string& what) {
    if (got == want) return {};
    return {false, k, std::nullopt, what + " at level " + std::to_string(k) + ": " + to_string(got) + " vs " +
                                        to_string(want)};
}

}  // namespace

Verdict verify_edge(const EpsilonOracle& epsilon, int m, int kmax, const SphereGroupTable& table) {
    const int n = 2 * m - 1;
    const InfiniteSumExpr expr = f_alpha(epsilon, m);
    const CoherentElement alpha = CoherentElement::weight2_family(m, epsilon);
    for (int k = 1; k <= kmax; ++k)
        if (auto v = compare_levels(project_level(expr, k, n, table), level(alpha, k), k, "Psi(F_alpha) != alpha"); !v)
            return v;
    return {};
}

InfiniteSumExpr theta(const CoherentElement& alpha) {
    if (!alpha.gtuple_data() || !alpha.finite_part().empty())
        throw DomainError("Theta is defined on G-tuples only");
    ThetaFamilies families;
    for (const auto& [i, family] : *alpha.gtuple_data())
        for (const auto& [w, f] : family) families[i].emplace_back(w, f);
    return InfiniteSumExpr::theta(alpha.m(), alpha.n(), std::move(families));
}

Verdict verify_theta_additive(const CoherentElement& alpha, const CoherentElement& beta, int kmax,
                              const SphereGroupTable& table) {
    const CoherentElement sum = alpha + beta;
    const InfiniteSumExpr ta = theta(alpha);
    const InfiniteSumExpr tb = theta(beta);
    const InfiniteSumExpr tsum = theta(sum);
    const int n = alpha.n();
    for (int k = 1; k <= kmax; ++k) {
        const Coordinates whole = project_level(tsum, k, n, table);
        const Coordinates parts = project_level(ta, k, n, table) + project_level(tb, k, n, table);
        if (auto v = compare_levels(whole, parts, k, "Theta(alpha+beta) != Theta(alpha)+Theta(beta)"); !v) return v;
        if (auto v = compare_levels(project_level(ta + tb, k, n, table), parts, k, "formal sum of Theta images"); !v)
            return v;
        if (auto v = compare_levels(whole, level(sum, k), k, "Psi(Theta(alpha+beta)) != alpha+beta"); !v) return v;
    }
    return {};
}

GGroupForms g_group_expr(int n, int m, const SphereGroupTable& table) {
    if (n < 2 || m < 2) throw DomainError("G_n(m) needs n, m >= 2");
    std::vector<GroupExpr> per_letter;
    std::vector<GroupExpr> blocks;
    for (int j = 2; j <= (n - 1) / (m - 1); ++j) {
        GroupExpr sym = GroupExpr::sphere(n, (m - 1) * j + 1);
        per_letter.push_back(GroupExpr::sum_n(sym));
        blocks.push_back(GroupExpr::prod_n(GroupExpr::sum_n(sym)));
    }
    GGroupForms out;
    out.direct = resolve(GroupExpr::prod_n(GroupExpr::direct_sum(std::move(per_letter))), table);
    out.distributed = resolve(GroupExpr::direct_sum(std::move(blocks)), table);
    out.equal = distribute_products(out.direct) == out.distributed;
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
    tok = trim(tok);
    std::int64_t v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
    return v;
}

std::vector<std::int64_t> parse_components(std::string_view text, std::size_t line) {
    std::vector<std::int64_t> out;
    text = trim(text);
    if (text.empty()) return out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_int(text.substr(0, comma), line));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

int parse_key(std::string_view tok, std::string_view key, std::size_t line) {
    if (tok.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "<value>'", line);
    return static_cast<int>(parse_int(tok.substr(key.size()), line));
}

}  // namespace

CoherentElement parse_element(std::string_view text, const SphereGroupTable& table) {
    std::optional<std::pair<int, int>> header;
    std::vector<std::pair<HallWord, GroupElement>> support;
    std::vector<EpsilonOracle::Entry> eps;
    ThetaFamilies families;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto space = line.find_first_of(" \t");
        const std::string_view head = line.substr(0, space);
        std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

        try {
            if (head == "element") {
                if (header) throw ParseError("duplicate element header", line_no);
                std::istringstream in{std::string(rest)};
                std::string a, b, extra;
                if (!(in >> a >> b) || (in >> extra)) throw ParseError("expected 'element n=<n> m=<m>'", line_no);
                header.emplace(parse_key(a, "n=", line_no), parse_key(b, "m=", line_no));
                if (header->first < 2 || header->second < 2) throw ParseError("n and m must be >= 2", line_no);
                continue;
            }
            if (!header) throw ParseError("missing 'element n=<n> m=<m>' header", line_no);
            const auto [n, m] = *header;
            auto eq = rest.rfind('=');
            if (eq == std::string_view::npos) throw ParseError("expected '= <value>'", line_no);
            std::string_view lhs = trim(rest.substr(0, eq));
            std::string_view rhs = rest.substr(eq + 1);

            if (head == "support") {
                const HallWord w = HallWord::parse(lhs);
                support.emplace_back(w, GroupElement(coordinate_group(n, m, w, table), parse_components(rhs, line_no)));
            } else if (head == "eps") {
                std::istringstream in{std::string(lhs)};
                std::string i, j, extra;
                if (!(in >> i >> j) || (in >> extra)) throw ParseError("expected 'eps <i> <j> = <c>'", line_no);
                eps.push_back({static_cast<int>(parse_int(i, line_no)), static_cast<int>(parse_int(j, line_no)),
                               parse_int(rhs, line_no)});
                EpsilonOracle::sparse({eps.back()});
            } else if (head == "gtuple") {
                auto sep = lhs.find_first_of(" \t");
                if (sep == std::string_view::npos) throw ParseError("expected 'gtuple <i> <word> = <value>'", line_no);
                const int i = static_cast<int>(parse_int(lhs.substr(0, sep), line_no));
                const HallWord w = HallWord::parse(trim(lhs.substr(sep)));
                families[i].emplace_back(
                    w, GroupElement(coordinate_group(n, m, w, table), parse_components(rhs, line_no)));
                CoherentElement::gtuple(n, m, {{i, {families[i].back()}}}, table);
            } else {
                throw ParseError("unknown directive '" + std::string(head) + "'", line_no);
            }
        } catch (const ParseError& err) {
            if (err.line()) throw;
            throw ParseError(err.what(), line_no);
        } catch (const Error& err) {
            throw ParseError(err.what(), line_no);
        }
    }
    if (!header) throw ParseError("missing 'element n=<n> m=<m>' header");
    const auto [n, m] = *header;
    CoherentElement e = CoherentElement::finite_support(n, m, support, table);
    if (!eps.empty()) {
        if (n != 2 * m - 1) throw ParseError("eps lines need n = 2m - 1");
        e = e + CoherentElement::weight2_family(m, EpsilonOracle::sparse(eps));
    }
    if (!families.empty()) {
        if (!eps.empty()) throw ParseError("an element cannot have both eps and gtuple lines");
        e = e + CoherentElement::gtuple(n, m, families, table);
    }
    return e;
}

CoherentElement load_element(const std::string& path, const SphereGroupTable& table) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open element file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_element(buf.str(), table);
}

}  // namespace cechhom
