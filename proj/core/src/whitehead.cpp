#include "cechhom/whitehead.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cechhom/errors.hpp"
#include "cechhom/sphere_table.hpp"

namespace cechhom {

// ---------------------------------------------------------------------------
// Degrees and formal sums

LetterDegrees::LetterDegrees(std::vector<int> degrees, int tail) : degrees_(std::move(degrees)), tail_(tail) {
    // Whitehead relations are only available for spheres of dimension >= 2
    if (tail_ < 2 || std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 2; }))
        throw DomainError("generator degrees must be >= 2");
}

LetterDegrees LetterDegrees::from_grading(const GradingSequence& grading) {
    std::vector<int> d;
    for (int r : grading.prefix()) d.push_back(r + 1);
    return LetterDegrees(std::move(d), grading.tail() + 1);
}

int LetterDegrees::operator()(int letter) const {
    if (letter < 1) throw DomainError("letter index must be >= 1");
    auto idx = static_cast<std::size_t>(letter - 1);
    return idx < degrees_.size() ? degrees_[idx] : tail_;
}

int whitehead_degree(const HallWord& monomial, const LetterDegrees& degrees) {
    if (monomial.is_letter()) return degrees(monomial.letter_index());
    return whitehead_degree(monomial.left(), degrees) + whitehead_degree(monomial.right(), degrees) - 1;
}

FormalSum FormalSum::monomial(const HallWord& w, LetterDegrees degrees, std::int64_t coefficient) {
    FormalSum s(std::move(degrees));
    s.add(w, coefficient);
    return s;
}

std::int64_t FormalSum::coefficient(const HallWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<int> FormalSum::degree() const {
    if (terms_.empty()) return std::nullopt;
    return whitehead_degree(terms_.begin()->first, degrees_);
}

void FormalSum::add(const HallWord& w, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

FormalSum FormalSum::operator+(const FormalSum& other) const {
    if (!(degrees_ == other.degrees_)) throw DomainError("adding formal sums over different generator degrees");
    FormalSum out = *this;
    for (const auto& [w, c] : other.terms_) out.add(w, c);
    return out;
}

FormalSum FormalSum::scaled(std::int64_t factor) const {
    FormalSum out(degrees_);
    for (const auto& [w, c] : terms_) out.add(w, c * factor);
    return out;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += w.to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bracket expressions

struct BracketExpr::Node {
    Kind kind = Kind::Zero;
    int letter = 0;
    std::int64_t factor = 0;
    std::vector<BracketExpr> operands;
};

BracketExpr BracketExpr::zero() {
    static const auto node = std::make_shared<const Node>();
    return BracketExpr(node);
}

BracketExpr BracketExpr::letter(int index) {
    if (index < 1) throw DomainError("letter index must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Letter;
    node->letter = index;
    return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::scale(std::int64_t factor, BracketExpr e) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Scale;
    node->factor = factor;
    node->operands.push_back(std::move(e));
    return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> terms) {
    if (terms.empty()) return zero();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Sum;
    node->operands = std::move(terms);
    return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::bracket(BracketExpr x, BracketExpr y) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bracket;
    node->operands.push_back(std::move(x));
    node->operands.push_back(std::move(y));
    return BracketExpr(std::move(node));
}

BracketExpr::Kind BracketExpr::kind() const noexcept { return node_->kind; }

int BracketExpr::letter_index() const {
    if (kind() != Kind::Letter) throw DomainError("letter_index() on a non-letter expression");
    return node_->letter;
}

std::int64_t BracketExpr::factor() const {
    if (kind() != Kind::Scale) throw DomainError("factor() on a non-scaled expression");
    return node_->factor;
}

const std::vector<BracketExpr>& BracketExpr::operands() const { return node_->operands; }

std::string BracketExpr::to_string() const {
    switch (kind()) {
        case Kind::Zero:
            return "0";
        case Kind::Letter:
            return "a" + std::to_string(node_->letter);
        case Kind::Scale: {
            const auto& e = operands().front();
            bool atomic = e.kind() == Kind::Letter || e.kind() == Kind::Bracket || e.kind() == Kind::Zero;
            return std::to_string(node_->factor) + "*" + (atomic ? e.to_string() : "(" + e.to_string() + ")");
        }
        case Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < operands().size(); ++i) {
                if (i) out += " + ";
                out += operands()[i].to_string();
            }
            return out;
        }
        case Kind::Bracket:
            return "[" + operands()[0].to_string() + "," + operands()[1].to_string() + "]";
    }
    return {};
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    BracketExpr parse_all() {
        BracketExpr e = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return e;
    }

private:
    BracketExpr parse_sum() {
        std::vector<BracketExpr> terms;
        terms.push_back(parse_signed());
        while (true) {
            skip_space();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                terms.push_back(parse_signed());
            } else {
                break;
            }
        }
        return terms.size() == 1 ? terms.front() : BracketExpr::sum(std::move(terms));
    }

    BracketExpr parse_signed() {
        int sign = 1;
        while (true) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '-') {
                sign = -sign;
                ++pos_;
            } else if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
            } else {
                break;
            }
        }
        BracketExpr e = parse_product();
        return sign < 0 ? BracketExpr::scale(-1, e) : e;
    }

    BracketExpr parse_product() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::int64_t value = read_integer();
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                return BracketExpr::scale(value, parse_product());
            }
            if (value != 0) fail("bare integer " + std::to_string(value) + " (write it as a multiple, e.g. 2*a1)");
            return BracketExpr::zero();
        }
        return parse_atom();
    }

    BracketExpr parse_atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == 'a') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("missing letter index");
            auto index = read_integer();
            if (index < 1) fail("letter index must be >= 1");
            return BracketExpr::letter(static_cast<int>(index));
        }
        if (c == '[') {
            ++pos_;
            BracketExpr x = parse_sum();
            expect(',');
            BracketExpr y = parse_sum();
            expect(']');
            return BracketExpr::bracket(std::move(x), std::move(y));
        }
        if (c == '(') {
            ++pos_;
            BracketExpr e = parse_sum();
            expect(')');
            return e;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::int64_t read_integer() {
        std::int64_t v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (pos_ - start > 15) fail("integer too large");
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bracket expression '" + std::string(text_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BracketExpr BracketExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rewrite rules

FormalSum expand(const BracketExpr& e, const LetterDegrees& degrees) {
    using Kind = BracketExpr::Kind;
    switch (e.kind()) {
        case Kind::Zero:
            return FormalSum(degrees);
        case Kind::Letter:
            return FormalSum::monomial(HallWord::letter(e.letter_index()), degrees);
        case Kind::Scale:
            return expand(e.operands().front(), degrees).scaled(e.factor());
        case Kind::Sum: {
            FormalSum out(degrees);
            std::optional<int> deg;
            for (const auto& t : e.operands()) {
                FormalSum part = expand(t, degrees);
                if (auto d = part.degree()) {
                    if (deg && *deg != *d)
                        throw DomainError("sum mixes degrees " + std::to_string(*deg) + " and " + std::to_string(*d) +
                                          " in '" + e.to_string() + "'");
                    deg = d;
                }
                out = out + part;
            }
            return out;
        }
        case Kind::Bracket: {
            FormalSum x = expand(e.operands()[0], degrees);
            FormalSum y = expand(e.operands()[1], degrees);
            FormalSum out(degrees);
            // a zero slot contributes no terms, which is the identity [x,0] = [0,y] = 0
            for (const auto& [u, cu] : x.terms())
                for (const auto& [v, cv] : y.terms()) out.add(HallWord::bracket(u, v), cu * cv);
            return out;
        }
    }
    return FormalSum(degrees);
}

FormalSum substitute_zero(const HallWord& w, int letter, const LetterDegrees& degrees) {
    if (w.contains(letter)) return FormalSum(degrees);
    return FormalSum::monomial(w, degrees);
}

FormalSum substitute_zero(const FormalSum& s, int letter) {
    FormalSum out(s.degrees());
    for (const auto& [w, c] : s.terms())
        if (!w.contains(letter)) out.add(w, c);
    return out;
}

namespace {

int sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// (-1)^{deg x * deg y}
int swap_sign(const HallWord& x, const HallWord& y, const LetterDegrees& degrees) {
    return sign_of(static_cast<long>(whitehead_degree(x, degrees)) * whitehead_degree(y, degrees));
}

}  // namespace

std::pair<int, HallWord> graded_swap(const HallWord& monomial, const LetterDegrees& degrees) {
    if (monomial.is_letter()) throw DomainError("graded_swap needs a bracket, got " + monomial.to_string());
    const HallWord& x = monomial.left();
    const HallWord& y = monomial.right();
    return {swap_sign(x, y, degrees), HallWord::bracket(y, x)};
}

namespace {

void reduce_monomial(const HallWord& w, std::int64_t coeff, const LetterDegrees& degrees, HallNormalForm& out) {
    auto emit = [&](const HallWord& word, std::int64_t c) {
        if (c == 0) return;
        auto& slot = out.hall[word];
        slot += c;
        if (slot == 0) out.hall.erase(word);
    };

    if (w.length() == 1) {
        emit(w, coeff);
        return;
    }

    if (w.length() == 2) {
        const int i = w.left().letter_index();
        const int j = w.right().letter_index();
        if (i < j) {
            emit(w, coeff);
        } else if (i > j) {
            auto [s, swapped] = graded_swap(w, degrees);
            emit(swapped, s * coeff);
        } else {
            out.residual.add(w, coeff);
        }
        return;
    }

    // weight 3: bring to the shape [a, [b, c]] with a a letter
    HallWord outer = w;
    if (!outer.left().is_letter()) {
        auto [s, swapped] = graded_swap(outer, degrees);
        outer = swapped;
        coeff *= s;
    }
    const HallWord a = outer.left();
    HallWord inner = outer.right();
    if (inner.left() == inner.right()) {
        out.residual.add(HallWord::bracket(a, inner), coeff);
        return;
    }
    if (inner.left() > inner.right()) {
        auto [s, swapped] = graded_swap(inner, degrees);
        inner = swapped;
        coeff *= s;
    }
    const HallWord b = inner.left();
    const HallWord c = inner.right();
    if (b <= a) {
        emit(HallWord::bracket(a, inner), coeff);
        return;
    }

    // a < b < c. Graded Jacobi on (a, b, c) with p, q, r their degrees:
    //   (-1)^{pr}[[a,b],c] + (-1)^{pq}[[b,c],a] + (-1)^{rq}[[c,a],b] = 0,
    // each bracket swapped into the shape [letter, [x, y]] with x < y.
    const long p = degrees(a.letter_index());
    const long q = degrees(b.letter_index());
    const long r = degrees(c.letter_index());
    const int s_a = sign_of(p * q + (q + r - 1) * p);          // [[b,c],a] -> [a,[b,c]]
    const int s_c = sign_of(p * r + (p + q - 1) * r);          // [[a,b],c] -> [c,[a,b]]
    const int s_b = sign_of(r * q + (r + p - 1) * q + r * p);  // [[c,a],b] -> [b,[a,c]]
    emit(HallWord::bracket(c, HallWord::bracket(a, b)), -s_a * s_c * coeff);
    emit(HallWord::bracket(b, HallWord::bracket(a, c)), -s_a * s_b * coeff);
}

}  // namespace

HallNormalForm hall_normalize(const FormalSum& s, int letters) {
    HallNormalForm out{{}, FormalSum(s.degrees())};
    for (const auto& [w, c] : s.terms()) {
        if (w.length() > 3)
            throw DomainError("hall_normalize handles weight <= 3, got " + w.to_string());
        if (w.max_letter() > letters)
            throw DomainError(w.to_string() + " uses letters beyond a" + std::to_string(letters));
        reduce_monomial(w, c, s.degrees(), out);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor-algebra oracle

namespace {

TensorElement tensor_product(const TensorElement& x, const TensorElement& y) {
    TensorElement out;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) {
            std::vector<int> word = u;
            word.insert(word.end(), v.begin(), v.end());
            auto& slot = out[word];
            slot += cu * cv;
            if (slot == 0) out.erase(word);
        }
    return out;
}

void tensor_add(TensorElement& acc, const TensorElement& x, std::int64_t factor) {
    for (const auto& [word, c] : x) {
        auto& slot = acc[word];
        slot += factor * c;
        if (slot == 0) acc.erase(word);
    }
}

TensorElement embed(const HallWord& w, const LetterDegrees& degrees) {
    if (w.is_letter()) return {{{w.letter_index()}, 1}};
    const HallWord& x = w.left();
    const HallWord& y = w.right();
    const long gx = whitehead_degree(x, degrees) - 1;
    const long gy = whitehead_degree(y, degrees) - 1;
    TensorElement tx = embed(x, degrees);
    TensorElement ty = embed(y, degrees);
    TensorElement out;
    const int outer = sign_of(gx);
    tensor_add(out, tensor_product(tx, ty), outer);
    tensor_add(out, tensor_product(ty, tx), -outer * sign_of(gx * gy));
    return out;
}

}  // namespace

TensorElement tensor_oracle(const FormalSum& s) {
    TensorElement out;
    for (const auto& [w, c] : s.terms()) {
        std::set<int> distinct;
        for (std::size_t i = 0; i < w.multiplicities().size(); ++i)
            if (w.multiplicities()[i]) distinct.insert(static_cast<int>(i) + 1);
        if (w.length() > 4 || distinct.size() > 3)
            throw ResourceLimitError("tensor_oracle handles weight <= 4 on <= 3 letters, got " + w.to_string());
        tensor_add(out, embed(w, s.degrees()), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Epsilon matrices

EpsilonOracle EpsilonOracle::sparse(const std::vector<Entry>& entries) {
    EpsilonOracle eps;
    for (const auto& e : entries) {
        if (e.i < 1 || e.i >= e.j)
            throw DomainError("epsilon entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") needs 1 <= i < j");
        auto& slot = eps.sparse_[{e.i, e.j}];
        slot += e.value;
        if (slot == 0) eps.sparse_.erase({e.i, e.j});
    }
    return eps;
}

EpsilonOracle EpsilonOracle::band(int width, std::int64_t value) {
    if (width < 1) throw DomainError("epsilon band width must be >= 1");
    EpsilonOracle eps;
    if (value != 0) eps.bands_[width] = value;
    return eps;
}

std::int64_t EpsilonOracle::operator()(int i, int j) const {
    if (i < 1 || i >= j) throw DomainError("epsilon(i, j) needs 1 <= i < j");
    std::int64_t v = 0;
    if (auto it = sparse_.find({i, j}); it != sparse_.end()) v += it->second;
    for (auto it = bands_.lower_bound(j - i); it != bands_.end(); ++it) v += it->second;
    return v;
}

EpsilonOracle EpsilonOracle::operator+(const EpsilonOracle& other) const {
    EpsilonOracle out = *this;
    for (const auto& [key, v] : other.sparse_) {
        auto& slot = out.sparse_[key];
        slot += v;
        if (slot == 0) out.sparse_.erase(key);
    }
    for (const auto& [width, v] : other.bands_) {
        auto& slot = out.bands_[width];
        slot += v;
        if (slot == 0) out.bands_.erase(width);
    }
    return out;
}

EpsilonOracle EpsilonOracle::operator-() const {
    EpsilonOracle out = *this;
    for (auto& [key, v] : out.sparse_) v = -v;
    for (auto& [width, v] : out.bands_) v = -v;
    return out;
}

// ---------------------------------------------------------------------------
// Infinite sums

InfiniteSumExpr InfiniteSumExpr::edge(int m, EpsilonOracle epsilon) {
    if (m < 2) throw DomainError("edge shape needs m >= 2");
    InfiniteSumExpr e;
    e.terms_.emplace_back(EdgeShape{m, std::move(epsilon)});
    return e;
}

InfiniteSumExpr InfiniteSumExpr::theta(int m, int n, ThetaFamilies families) {
    if (m < 2 || n < 2) throw DomainError("theta shape needs m, n >= 2");
    for (auto& [i, list] : families) {
        for (const auto& [w, f] : list) {
            if (w.length() < 2) throw DomainError("theta: " + w.to_string() + " has weight 1");
            if (w.min_letter() != i)
                throw DomainError("theta: " + w.to_string() + " listed under a" + std::to_string(i) +
                                  " but its smallest letter is a" + std::to_string(w.min_letter()));
            if (!is_hall(w, w.max_letter())) throw DomainError("theta: " + w.to_string() + " is not a Hall word");
        }
    }
    InfiniteSumExpr e;
    e.terms_.emplace_back(ThetaShape{m, n, std::move(families)});
    return e;
}

InfiniteSumExpr InfiniteSumExpr::operator+(const InfiniteSumExpr& other) const {
    InfiniteSumExpr out = *this;
    out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
    return out;
}

InfiniteSumExpr InfiniteSumExpr::linearized() const {
    std::map<int, EpsilonOracle> edges;
    std::map<std::pair<int, int>, std::map<int, std::map<HallWord, GroupElement>>> thetas;
    for (const auto& term : terms_) {
        if (const auto* edge = std::get_if<EdgeShape>(&term)) {
            auto [it, fresh] = edges.try_emplace(edge->m, edge->epsilon);
            if (!fresh) it->second = it->second + edge->epsilon;
            continue;
        }
        const auto& theta = std::get<ThetaShape>(term);
        auto& per_letter = thetas[{theta.m, theta.n}];
        for (const auto& [i, list] : theta.families) {
            auto& merged = per_letter[i];
            for (const auto& [w, f] : list) {
                auto [it, fresh] = merged.try_emplace(w, f);
                if (!fresh) it->second += f;
            }
        }
    }
    InfiniteSumExpr out;
    for (auto& [m, eps] : edges) out.terms_.emplace_back(EdgeShape{m, std::move(eps)});
    for (auto& [key, per_letter] : thetas) {
        ThetaFamilies families;
        for (auto& [i, merged] : per_letter)
            for (auto& [w, f] : merged)
                if (!f.is_zero()) families[i].emplace_back(w, f);
        out.terms_.emplace_back(ThetaShape{key.first, key.second, std::move(families)});
    }
    return out;
}

namespace {

FGAbelianGroup require_group(const SphereGroupTable& table, int n, int q) {
    auto g = table.lookup(n, q);
    if (!g) throw UnresolvedGroupError(n, q);
    return *g;
}

void project_edge(const EdgeShape& edge, int k, int n, const SphereGroupTable& table, Coordinates& out) {
    if (n != 2 * edge.m - 1)
        throw DomainError("edge shape lives in dimension 2m-1 = " + std::to_string(2 * edge.m - 1) + ", asked for " +
                          std::to_string(n));
    // b_k sends l_j to the constant map for j > k, so only letters <= k survive
    std::vector<BracketExpr> outer;
    for (int i = 1; i <= k; ++i) {
        std::vector<BracketExpr> inner;
        for (int j = i + 1; j <= k; ++j)
            if (auto eps = edge.epsilon(i, j); eps != 0) inner.push_back(BracketExpr::scale(eps, BracketExpr::letter(j)));
        outer.push_back(BracketExpr::bracket(BracketExpr::letter(i), BracketExpr::sum(std::move(inner))));
    }
    const FormalSum expanded = expand(BracketExpr::sum(std::move(outer)), LetterDegrees::constant(edge.m));
    const HallNormalForm nf = hall_normalize(expanded, std::max(k, 1));
    if (!nf.residual.is_zero())
        throw ConsistencyError("Whitehead square left after normalization: " + nf.residual.to_string());
    const GradingSequence grading = GradingSequence::constant(edge.m - 1);
    for (const auto& [w, c] : nf.hall) {
        const int q = height(w, grading) + 1;
        const FGAbelianGroup g = require_group(table, n, q);
        if (g != FGAbelianGroup::integers())
            throw DomainError("coefficient of " + w.to_string() + " is a multiple of the identity of S^" +
                              std::to_string(q) + ", but pi_" + std::to_string(n) + "(S^" + std::to_string(q) +
                              ") = " + g.render());
        accumulate(out, w, GroupElement(g, {c}));
    }
}

void project_theta(const ThetaShape& theta, int k, int n, const SphereGroupTable& table, Coordinates& out) {
    if (theta.n != n)
        throw DomainError("theta shape lives in dimension " + std::to_string(theta.n) + ", asked for " +
                          std::to_string(n));
    const GradingSequence grading = GradingSequence::constant(theta.m - 1);
    for (const auto& [i, list] : theta.families) {
        for (const auto& [w, f] : list) {
            const int q = height(w, grading) + 1;
            const FGAbelianGroup g = require_group(table, n, q);
            if (f.ambient() != g)
                throw DomainError("value " + f.to_string() + " of " + w.to_string() + " lies in " +
                                  f.ambient().render() + ", expected pi_" + std::to_string(n) + "(S^" +
                                  std::to_string(q) + ") = " + g.render());
            if (w.max_letter() > k) continue;  // killed by b_k
            accumulate(out, w, f);
        }
    }
}

}  // namespace

Coordinates project_level(const InfiniteSumExpr& e, int k, int n, const SphereGroupTable& table) {
    if (k < 1) throw DomainError("project_level needs k >= 1");
    Coordinates out;
    for (const auto& term : e.terms()) {
        if (const auto* edge = std::get_if<EdgeShape>(&term))
            project_edge(*edge, k, n, table, out);
        else
            project_theta(std::get<ThetaShape>(term), k, n, table, out);
    }
    return out;
}

}  // namespace cechhom
