#include "cechhom/hall_basis.hpp"

#include <algorithm>
#include <cctype>

#include "cechhom/errors.hpp"

namespace cechhom {

struct HallWord::Node {
    int letter = 0;  // 0 marks a bracket
    HallWord left{nullptr};
    HallWord right{nullptr};
    int length = 1;
    int min_letter = 0;
    int max_letter = 0;
    std::vector<int> nu;
};

HallWord HallWord::letter(int index) {
    if (index < 1) throw DomainError("letter index must be >= 1");
    auto node = std::make_shared<Node>();
    node->letter = index;
    node->min_letter = node->max_letter = index;
    node->nu.assign(static_cast<std::size_t>(index), 0);
    node->nu.back() = 1;
    return HallWord(std::move(node));
}

HallWord HallWord::bracket(HallWord left, HallWord right) {
    if (!left.node_ || !right.node_) throw DomainError("bracket of an empty word");
    auto node = std::make_shared<Node>();
    node->length = left.length() + right.length();
    node->min_letter = std::min(left.min_letter(), right.min_letter());
    node->max_letter = std::max(left.max_letter(), right.max_letter());
    node->nu.assign(static_cast<std::size_t>(node->max_letter), 0);
    for (std::size_t i = 0; i < left.multiplicities().size(); ++i) node->nu[i] += left.multiplicities()[i];
    for (std::size_t i = 0; i < right.multiplicities().size(); ++i) node->nu[i] += right.multiplicities()[i];
    node->left = std::move(left);
    node->right = std::move(right);
    return HallWord(std::move(node));
}

namespace {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    HallWord parse_all() {
        HallWord w = parse_word();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return w;
    }

private:
    HallWord parse_word() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of word");
        if (text_[pos_] == '[') {
            ++pos_;
            HallWord x = parse_word();
            expect(',');
            HallWord y = parse_word();
            expect(']');
            return HallWord::bracket(std::move(x), std::move(y));
        }
        if (text_[pos_] != 'a') fail("expected 'a<i>' or '['");
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("missing letter index");
        int index = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (index < 1) fail("letter index must be >= 1");
        return HallWord::letter(index);
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
        throw ParseError("word '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

HallWord HallWord::parse(std::string_view text) { return WordParser(text).parse_all(); }

bool HallWord::is_letter() const noexcept { return node_->letter != 0; }

int HallWord::letter_index() const {
    if (!is_letter()) throw DomainError("letter_index() on a bracket");
    return node_->letter;
}

const HallWord& HallWord::left() const {
    if (is_letter()) throw DomainError("left() on a letter");
    return node_->left;
}

const HallWord& HallWord::right() const {
    if (is_letter()) throw DomainError("right() on a letter");
    return node_->right;
}

int HallWord::length() const noexcept { return node_->length; }

int HallWord::multiplicity(int letter) const noexcept {
    if (letter < 1 || letter > node_->max_letter) return 0;
    return node_->nu[static_cast<std::size_t>(letter - 1)];
}

const std::vector<int>& HallWord::multiplicities() const noexcept { return node_->nu; }
int HallWord::min_letter() const noexcept { return node_->min_letter; }
int HallWord::max_letter() const noexcept { return node_->max_letter; }

std::string HallWord::to_string() const {
    if (is_letter()) return "a" + std::to_string(node_->letter);
    return "[" + node_->left.to_string() + "," + node_->right.to_string() + "]";
}

bool operator==(const HallWord& a, const HallWord& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const HallWord& a, const HallWord& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (a.is_letter()) return a.node_->letter <=> b.node_->letter;
    if (auto c = a.max_letter() <=> b.max_letter(); c != 0) return c;
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
}

// ---------------------------------------------------------------------------

namespace {

bool hall_conditions(const HallWord& x, const HallWord& y) {
    if (!(x < y)) return false;
    return y.is_letter() || y.left() <= x;
}

}  // namespace

HallSet HallSet::generate(int letters, int max_weight, std::size_t stratum_cap) {
    if (letters < 1 || max_weight < 1) throw DomainError("generate: need k >= 1 and J >= 1");
    std::vector<std::vector<HallWord>> strata(static_cast<std::size_t>(max_weight));
    strata[0].push_back(HallWord::letter(1));
    HallSet set(1, std::move(strata));
    while (set.letters() < letters) set = set.with_next_letter(stratum_cap);
    return set;
}

HallSet HallSet::with_next_letter(std::size_t stratum_cap) const {
    const int next = letters_ + 1;
    const int top = max_weight();
    std::vector<std::size_t> old_size(strata_.size());
    for (std::size_t j = 0; j < strata_.size(); ++j) old_size[j] = strata_[j].size();

    auto strata = strata_;
    strata[0].push_back(HallWord::letter(next));

    for (int j = 2; j <= top; ++j) {
        std::vector<HallWord> fresh;
        for (int i = 1; 2 * i <= j; ++i) {
            const auto& xs = strata[static_cast<std::size_t>(i - 1)];
            const auto& ys = strata[static_cast<std::size_t>(j - i - 1)];
            const std::size_t x_old = old_size[static_cast<std::size_t>(i - 1)];
            const std::size_t y_old = old_size[static_cast<std::size_t>(j - i - 1)];
            for (std::size_t yi = 0; yi < ys.size(); ++yi) {
                // at least one factor must use the new letter
                const std::size_t x_from = yi >= y_old ? 0 : x_old;
                for (std::size_t xi = x_from; xi < xs.size(); ++xi) {
                    if (hall_conditions(xs[xi], ys[yi])) fresh.push_back(HallWord::bracket(xs[xi], ys[yi]));
                }
            }
            if (strata[static_cast<std::size_t>(j - 1)].size() + fresh.size() > stratum_cap)
                throw ResourceLimitError("Hall stratum of weight " + std::to_string(j) + " on " +
                                         std::to_string(next) + " letters exceeds " +
                                         std::to_string(stratum_cap) + " words");
        }
        std::sort(fresh.begin(), fresh.end());
        auto& stratum = strata[static_cast<std::size_t>(j - 1)];
        stratum.insert(stratum.end(), fresh.begin(), fresh.end());
    }
    return HallSet(next, std::move(strata));
}

const std::vector<HallWord>& HallSet::stratum(int weight) const {
    if (weight < 1 || weight > max_weight())
        throw DomainError("stratum " + std::to_string(weight) + " outside 1.." + std::to_string(max_weight()));
    return strata_[static_cast<std::size_t>(weight - 1)];
}

std::vector<HallWord> HallSet::words() const {
    std::vector<HallWord> out;
    out.reserve(size());
    for (const auto& s : strata_) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::size_t HallSet::size() const noexcept {
    std::size_t n = 0;
    for (const auto& s : strata_) n += s.size();
    return n;
}

bool is_hall(const HallWord& w, int letters) {
    if (w.max_letter() > letters) return false;
    if (w.is_letter()) return true;
    const HallWord& x = w.left();
    const HallWord& y = w.right();
    return is_hall(x, letters) && is_hall(y, letters) && hall_conditions(x, y);
}

int height(const HallWord& w, const GradingSequence& grading) {
    int h = 0;
    const auto& nu = w.multiplicities();
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i]) h += grading(static_cast<int>(i) + 1) * nu[i];
    return h;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw DomainError("moebius(0)");
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

__extension__ using Wide = __int128;

std::uint64_t necklace_count(std::uint64_t letters, std::uint64_t weight) {
    if (letters < 1 || weight < 1) throw DomainError("necklace_count: need k >= 1 and j >= 1");
    Wide total = 0;
    for (std::uint64_t d = 1; d <= weight; ++d) {
        if (weight % d) continue;
        const int mu = moebius(d);
        if (mu == 0) continue;
        Wide power = 1;
        for (std::uint64_t e = 0; e < weight / d; ++e) {
            if (__builtin_mul_overflow(power, static_cast<Wide>(letters), &power))
                throw ResourceLimitError("necklace_count: k^j overflows");
        }
        if (__builtin_add_overflow(total, mu * power, &total)) throw ResourceLimitError("necklace_count: sum overflows");
    }
    total /= static_cast<Wide>(weight);
    if (total > static_cast<Wide>(UINT64_MAX)) throw ResourceLimitError("necklace_count: result exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

std::vector<HallWord> dimension_truncation(int letters, int n, const GradingSequence& grading) {
    if (n < 2) throw DomainError("dimension_truncation: need n >= 2");
    if (letters < 1) return {};
    const int max_weight = (n - 1) / grading.first();
    if (max_weight < 1) return {};
    std::vector<HallWord> out;
    const HallSet set = HallSet::generate(letters, max_weight);
    for (const auto& w : set.words())
        if (height(w, grading) + 1 <= n) out.push_back(w);
    return out;
}

std::vector<HallWord> min_letter_partition(int letter, int weight, int letters) {
    if (weight < 2) throw DomainError("min_letter_partition: need j >= 2");
    std::vector<HallWord> out;
    const HallSet set = HallSet::generate(letters, weight);
    for (const auto& w : set.stratum(weight))
        if (w.min_letter() == letter) out.push_back(w);
    return out;
}

std::map<int, ClassSize> height_class_census(int n, const GradingSequence& grading) {
    if (n < 2) throw DomainError("height_class_census: need n >= 2");
    // Hall conditions only compare letters, so any order-preserving relabelling of
    // the tail letters maps Hall words to Hall words of the same height. A class is
    // therefore infinite exactly when some word in it uses a letter past the prefix,
    // and such a witness exists on at most (n - 1) / tail extra letters.
    const int prefix = static_cast<int>(grading.prefix().size());
    int letters = 0;
    if (grading.tail() <= n - 1) {
        letters = prefix + (n - 1) / grading.tail();
    } else {
        for (int r : grading.prefix())
            if (r <= n - 1) ++letters;
    }
    std::map<int, ClassSize> census;
    for (const auto& w : dimension_truncation(letters, n, grading)) {
        auto& cls = census[height(w, grading)];
        if (w.max_letter() > prefix)
            cls.countably_infinite = true;
        else
            ++cls.count;
    }
    for (auto& [h, cls] : census)
        if (cls.countably_infinite) cls.count = 0;
    return census;
}

std::map<int, std::uint64_t> height_census_at(int letters, int n, const GradingSequence& grading) {
    std::map<int, std::uint64_t> census;
    for (const auto& w : dimension_truncation(letters, n, grading)) ++census[height(w, grading)];
    return census;
}

}  // namespace cechhom

std::size_t std::hash<cechhom::HallWord>::operator()(const cechhom::HallWord& w) const noexcept {
    std::size_t h = std::hash<int>{}(w.length());
    if (w.is_letter()) return h ^ (static_cast<std::size_t>(w.letter_index()) * 0x9e3779b97f4a7c15ULL);
    std::size_t l = (*this)(w.left());
    std::size_t r = (*this)(w.right());
    return h ^ (l * 31 + r + 0x9e3779b97f4a7c15ULL + (h << 6));
}
