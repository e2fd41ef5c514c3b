/**
 * @file families.hpp
 * @brief Built-in map families: the full tent of height 1 swapped ends map,
 *        the plateau staircase family g_n, and the doubling operator that
 *        raises the entropy of a zero-fixed map by exactly one.
 */
#pragma once

#include <string>

#include "polyent/plmap.hpp"

namespace polyent {

/// f0(x) = 1 - x.
PLMap make_f0();

/// Breakpoints (0,0), (1/2,1), (1,1): one climb then a plateau at 1.
/// Equals make_gn(1). One essential interval, entropy 1.
PLMap make_plateau();

/// Staircase family g_n for n >= 0. g_0 is the identity; for n >= 1 the map
/// climbs n diagonal cells, each cell rising to the next cell's ceiling at its
/// midpoint and returning to the diagonal at its right edge. Entropy n.
PLMap make_gn(unsigned n);

PLMap make_identity();

/// Doubling operator. Squeezes f into the top of [0, 1/3] (x -> 2/3 + f(3x)/3),
/// drops linearly to 0 at 2/3 and rises with slope 1 to 1/3 at 1. The square of
/// the result restricted to [0, 1/3] is conjugate to f, so the power-of-two
/// type doubles and the entropy goes up by one.
PLMap double_map(const PLMap& f);

/// Applies double_map `times` times.
PLMap double_map(const PLMap& f, unsigned times);

/// Parses family names used by the CLI: "f0", "plateau", "identity", "gN"
/// (e.g. "g2"), optionally wrapped in "double^K(...)" such as "double^2(g1)".
PLMap make_family(const std::string& name);

} // namespace polyent
