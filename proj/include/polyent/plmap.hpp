/**
 * @file plmap.hpp
 * @brief Continuous piecewise-linear self-maps of [0,1] with exact rational
 *        breakpoints, and the exact operations the entropy pipeline needs:
 *        evaluation, composition, interval images, fixed and periodic sets,
 *        lap counts of iterates.
 */
#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "polyent/interval.hpp"
#include "polyent/rational.hpp"

namespace polyent {

struct Breakpoint {
    Rational x, y;
    friend bool operator==(const Breakpoint& a, const Breakpoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Resource caps for exact computations. Exceeding one throws BudgetExceeded;
// callers that expose UNKNOWN verdicts catch it there.
struct Budget {
    std::size_t max_pieces = 200000;      // breakpoints of any composed map
    std::size_t max_hull_iters = 100000;  // orbit-closure hull iterations
    unsigned max_covering_iterate = 4096;   // doubling search cap for horseshoe k
};

class PLMap {
public:
    /// Validates: >= 2 breakpoints, x strictly increasing from 0 to 1,
    /// all y within [0,1]. Collinear interior breakpoints are merged.
    explicit PLMap(std::vector<Breakpoint> pts);

    static PLMap identity();

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    std::size_t piece_count() const { return pts_.size() - 1; }

    /// Exact evaluation; throws DomainError outside [0,1].
    Rational operator()(const Rational& t) const;

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }

private:
    std::vector<Breakpoint> pts_;
};

/// f(g(.)) on the minimal breakpoint refinement.
PLMap compose(const PLMap& f, const PLMap& g, const Budget& budget = {});

/// f^n by binary exponentiation; iterate(f, 0) is the identity.
PLMap iterate(const PLMap& f, unsigned n, const Budget& budget = {});

/// Exact image of an interval, endpoint openness tracked through extrema.
RInterval image(const PLMap& f, const RInterval& J);

/// Maximal components of {t : f(t) = t}, sorted; closed (possibly points).
std::vector<RInterval> fixed_set(const PLMap& f);

/// Components of points of exact period p (fixed set of f^p minus every
/// proper-divisor fixed set, which may split components into half-open parts).
std::vector<RInterval> periodic_points(const PLMap& f, unsigned p, const Budget& budget = {});

/// Lap counts c_1..c_n of the iterates: size of the minimal partition of
/// [0,1] into weak-monotone laps, plateaus merged into an adjacent lap.
struct LapProfile {
    unsigned n_max = 0;
    std::vector<long long> counts; // counts[i] = c_{i+1}
};
LapProfile lap_numbers(const PLMap& f, unsigned n_max, const Budget& budget = {});

/// Memoizes powers f^(2^j) so repeated period queries share compositions.
class PowerCache {
public:
    PowerCache(PLMap base, Budget budget = {});
    const PLMap& power(unsigned n); // f^n, n >= 1; f^0 = identity
private:
    Budget budget_;
    // deques keep references returned by power() stable as the cache grows
    std::deque<PLMap> squares_; // squares_[j] = f^(2^j)
    std::deque<std::pair<unsigned, PLMap>> memo_;
};

} // namespace polyent
