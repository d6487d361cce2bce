#pragma once

#include <map>
#include <string>

#include "cechhom/abelian_groups.hpp"
#include "cechhom/hall_basis.hpp"

namespace cechhom {

/// Hilton coordinates of an element of pi_n of a finite wedge: one entry per
/// Hall word w, valued in pi_n(S^{h(w)+1}). Zero coordinates are never stored.
using Coordinates = std::map<HallWord, GroupElement>;

/// Adds `f` at `w`, dropping the entry if the sum vanishes.
void accumulate(Coordinates& coords, const HallWord& w, const GroupElement& f);

Coordinates operator+(const Coordinates& a, const Coordinates& b);
Coordinates operator-(const Coordinates& a);

/// "{[a1,a2] -> 1; a3 -> 0,1}"
std::string to_string(const Coordinates& coords);

}  // namespace cechhom
