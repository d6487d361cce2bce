#include "cechhom/grading.hpp"

#include <algorithm>
#include <charconv>

#include "cechhom/errors.hpp"

namespace cechhom {

namespace {

int parse_positive(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("grading: expected an integer, got '" + std::string(text) + "'");
    return value;
}

}  // namespace

GradingSequence::GradingSequence(std::vector<int> prefix, int tail) : prefix_(std::move(prefix)), tail_(tail) {
    if (tail_ < 1) throw DomainError("grading: entries must be >= 1");
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (prefix_[i] < 1) throw DomainError("grading: entries must be >= 1");
        if (i > 0 && prefix_[i] < prefix_[i - 1]) throw DomainError("grading: prefix must be nondecreasing");
    }
    if (!prefix_.empty() && tail_ < prefix_.back())
        throw DomainError("grading: tail must be >= the last prefix entry");
}

GradingSequence GradingSequence::constant(int r) { return GradingSequence({}, r); }

GradingSequence GradingSequence::parse(std::string_view spec) {
    auto semi = spec.find(';');
    if (semi == std::string_view::npos) return constant(parse_positive(spec));
    std::vector<int> prefix;
    std::string_view head = spec.substr(0, semi);
    while (!head.empty()) {
        auto comma = head.find(',');
        prefix.push_back(parse_positive(head.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        head.remove_prefix(comma + 1);
        if (head.empty()) throw ParseError("grading: trailing ','");
    }
    return GradingSequence(std::move(prefix), parse_positive(spec.substr(semi + 1)));
}

int GradingSequence::operator()(int letter) const {
    if (letter < 1) throw DomainError("grading: letter index must be >= 1");
    auto idx = static_cast<std::size_t>(letter - 1);
    return idx < prefix_.size() ? prefix_[idx] : tail_;
}

bool GradingSequence::is_constant() const noexcept {
    return std::all_of(prefix_.begin(), prefix_.end(), [this](int r) { return r == tail_; });
}

std::string GradingSequence::to_string() const {
    if (prefix_.empty()) return std::to_string(tail_);
    std::string out;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(prefix_[i]);
    }
    return out + ';' + std::to_string(tail_);
}

}  // namespace cechhom
