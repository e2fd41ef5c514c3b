/**
 * @file fixstruct.hpp
 * @brief Fixed-point structure of a type-1 map: essential intervals of the
 *        complement of Fix(f), exact orbit closures with attainment flags,
 *        and the covering DAG whose longest chain carries the entropy value.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyent/plmap.hpp"

namespace polyent {

enum class Orientation { UP, DOWN };

// Open component (a,b) of [0,1] \ Fix(f) with both endpoints fixed.
// The source is the endpoint trajectories move away from: a for UP, b for DOWN.
struct EssentialInterval {
    RInterval I; // open
    Orientation dir = Orientation::UP;
    Rational source;
    Rational a() const { return I.lo; }
    Rational b() const { return I.hi; }
};

struct EssentialDecomposition {
    std::vector<EssentialInterval> essential;   // sorted left to right
    std::vector<RInterval> boundary_excluded;   // complement pieces touching a non-fixed 0 or 1
    std::vector<RInterval> fixed_components;    // Fix(f), sorted
};

enum class Tri { YES, NO, UNKNOWN };

struct Type1Result {
    Tri verdict = Tri::UNKNOWN;
    std::optional<Rational> witness; // a point of exact period > 1 when NO
    unsigned witness_period = 0;
};

/// Decides Per(f) = Fix(f). Period 2 is decisive (any higher period forces a
/// 2-cycle); periods 3, 4, 6 are kept as redundant budgeted probes.
Type1Result is_type1(const PLMap& f, const Budget& budget = {});

EssentialDecomposition essential_intervals(const PLMap& f);

// Orb(I) = union of forward images, an interval pinned at the source.
// far_end z is the moving endpoint; attained tells whether z is in Orb(I).
struct OrbitClosure {
    RInterval orbit;
    Rational far_end;
    bool attained = false;
};

/// Exact hull iteration with a finite-escape analysis so limits that are
/// approached but never reached terminate with attained = false.
OrbitClosure orbit_closure(const PLMap& f, const EssentialInterval& I,
                           const Budget& budget = {});

struct CoverDAG {
    std::vector<EssentialInterval> nodes; // sorted left to right
    std::vector<OrbitClosure> orbits;     // parallel to nodes
    std::vector<std::pair<int, int>> edges; // i covers j (Orb(I_i) contains I_j), i != j
};

/// Builds nodes, orbit closures and covering edges; throws NotType1 when the
/// precondition fails and InternalInvariantViolation if a cycle shows up.
CoverDAG cover_dag(const PLMap& f, const Budget& budget = {});

struct ChainResult {
    int length = 0;
    std::vector<int> chain; // node indices; leftmost chain among the longest
};

ChainResult max_chain(const CoverDAG& dag);

} // namespace polyent
