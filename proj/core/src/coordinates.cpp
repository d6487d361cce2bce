#include "cechhom/coordinates.hpp"

namespace cechhom {

void accumulate(Coordinates& coords, const HallWord& w, const GroupElement& f) {
    auto it = coords.find(w);
    if (it == coords.end()) {
        if (!f.is_zero()) coords.emplace(w, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) coords.erase(it);
}

Coordinates operator+(const Coordinates& a, const Coordinates& b) {
    Coordinates out = a;
    for (const auto& [w, f] : b) accumulate(out, w, f);
    return out;
}

Coordinates operator-(const Coordinates& a) {
    Coordinates out;
    for (const auto& [w, f] : a) out.emplace(w, -f);
    return out;
}

std::string to_string(const Coordinates& coords) {
    std::string out = "{";
    bool first = true;
    for (const auto& [w, f] : coords) {
        if (!first) out += "; ";
        first = false;
        out += w.to_string() + " -> " + f.to_string();
    }
    return out + "}";
}

}  // namespace cechhom
