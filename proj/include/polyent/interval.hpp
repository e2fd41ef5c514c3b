/**
 * @file interval.hpp
 * @brief Rational intervals with explicit endpoint openness, plus small
 *        set utilities on sorted disjoint interval lists.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyent/rational.hpp"

namespace polyent {

// Nonempty interval: lo < hi, or lo == hi with both ends closed (a point).
struct RInterval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    RInterval() = default;
    RInterval(Rational l, Rational h, bool lc, bool hc);

    static RInterval closed(const Rational& l, const Rational& h) { return {l, h, true, true}; }
    static RInterval open(const Rational& l, const Rational& h) { return {l, h, false, false}; }
    static RInterval point(const Rational& p) { return {p, p, true, true}; }

    bool is_point() const { return lo == hi; }
    Rational length() const { return hi - lo; }
    Rational mid() const { return midpoint(lo, hi); }

    bool contains(const Rational& x) const;
    std::string str() const;

    friend bool operator==(const RInterval& a, const RInterval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
               a.hi_closed == b.hi_closed;
    }
};

/// I subseteq J, endpoint openness respected exactly.
bool interval_subset(const RInterval& I, const RInterval& J);

std::optional<RInterval> interval_intersect(const RInterval& I, const RInterval& J);

/// Smallest interval containing both (hull).
RInterval interval_hull(const RInterval& I, const RInterval& J);

bool intervals_overlap(const RInterval& I, const RInterval& J);

// --- operations on finite unions, kept as sorted pairwise-disjoint lists ---

/// Sorts and merges overlapping or touching pieces into maximal components.
std::vector<RInterval> normalize_components(std::vector<RInterval> parts);

/// Set difference A \ B, both sorted disjoint; openness handled exactly.
std::vector<RInterval> subtract_components(const std::vector<RInterval>& A,
                                           const std::vector<RInterval>& B);

bool components_contain(const std::vector<RInterval>& A, const Rational& x);

} // namespace polyent
