#include "cechhom/sphere_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cechhom/errors.hpp"

namespace cechhom {

std::optional<FGAbelianGroup> SphereGroupTable::builtin(int n, int q) {
    if (n < 1 || q < 1) throw DomainError("pi_n(S^q) needs n, q >= 1");
    if (n < q) return FGAbelianGroup{};
    if (n == q) return FGAbelianGroup::integers();
    if (q == 1) return FGAbelianGroup{};
    return std::nullopt;
}

namespace {

std::string rule_name(int n, int q) {
    if (n < q) return "n < q forces 0";
    if (n == q) return "n = q forces Z";
    return "q = 1, n >= 2 forces 0";
}

std::string key_name(int n, int q) { return "pi_" + std::to_string(n) + "(S^" + std::to_string(q) + ")"; }

}  // namespace

void SphereGroupTable::insert(int n, int q, const FGAbelianGroup& group, std::string provenance) {
    if (auto forced = builtin(n, q); forced && *forced != group)
        throw ConsistencyError(key_name(n, q) + " = " + group.to_string() + " contradicts built-in rule (" +
                               rule_name(n, q) + ")");
    const Key key{n, q};
    if (auto it = entries_.find(key); it != entries_.end()) {
        if (it->second != group)
            throw ConsistencyError(key_name(n, q) + " given as both " + it->second.to_string() + " (" +
                                   provenance_[key] + ") and " + group.to_string() + " (" + provenance + ")");
        return;
    }
    entries_.emplace(key, group);
    provenance_.emplace(key, std::move(provenance));
}

std::optional<FGAbelianGroup> SphereGroupTable::lookup(int n, int q) const {
    if (auto forced = builtin(n, q)) return forced;
    if (auto it = entries_.find({n, q}); it != entries_.end()) return it->second;
    return std::nullopt;
}

const std::string& SphereGroupTable::provenance(int n, int q) const {
    auto it = provenance_.find({n, q});
    if (it == provenance_.end()) throw DomainError("no table entry for " + key_name(n, q));
    return it->second;
}

const SphereGroupTable& SphereGroupTable::seed() {
    static const SphereGroupTable table = [] {
        SphereGroupTable t;
        const std::string hopf = "seed: Hopf fibration, pi_3(S^2) = Z";
        t.insert(3, 2, FGAbelianGroup::integers(), hopf);
        t.insert(4, 2, FGAbelianGroup::cyclic(2), "seed: pi_4(S^2) = Z/2");
        for (int q = 3; q <= 6; ++q)
            t.insert(q + 1, q, FGAbelianGroup::cyclic(2),
                     "seed: first stable stem, pi_" + std::to_string(q + 1) + "(S^" + std::to_string(q) + ") = Z/2");
        return t;
    }();
    return table;
}

namespace {

int parse_index(std::string_view tok, std::size_t line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1)
        throw ParseError("expected a positive integer, got '" + std::string(tok) + "'", line);
    return v;
}

}  // namespace

SphereGroupTable SphereGroupTable::parse(std::string_view text, const std::string& source) {
    SphereGroupTable table;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        std::string head;
        if (!(in >> head)) continue;
        if (head != "pi") throw ParseError("expected 'pi <n> <q> = <group>'", line_no);
        std::string n_tok, q_tok, eq;
        if (!(in >> n_tok >> q_tok >> eq) || eq != "=")
            throw ParseError("expected 'pi <n> <q> = <group>'", line_no);
        const int n = parse_index(n_tok, line_no);
        const int q = parse_index(q_tok, line_no);
        std::string rest;
        std::getline(in, rest);
        FGAbelianGroup group;
        try {
            group = FGAbelianGroup::parse(rest);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        try {
            table.insert(n, q, group, source + ":" + std::to_string(line_no));
        } catch (const ConsistencyError& e) {
            throw ConsistencyError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return table;
}

SphereGroupTable SphereGroupTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open table file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

std::string SphereGroupTable::render() const {
    std::string out;
    for (const auto& [key, group] : entries_)
        out += "pi " + std::to_string(key.first) + " " + std::to_string(key.second) + " = " + group.to_string() + "\n";
    return out;
}

}  // namespace cechhom
