#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyent/plmap.hpp"

namespace polyent {

// Floating-point separated-set estimator. Counts (n,eps)-separated sets under
// the Bowen metric d_n(x,y) = max_{0<=t<n} |f^t x - f^t y| and fits the
// log-log growth of the counts in n. Advisory only: the exact side of the
// library never consumes these numbers.

struct OracleConfig {
    std::vector<double> epsilons{0.05, 0.02, 0.01, 0.005};  // strictly decreasing
    std::vector<unsigned> horizons{8, 16, 32, 64};          // strictly increasing
    unsigned grid_size = 8;
    std::uint64_t seed = 1;
    unsigned fan_anchors = 6;
    unsigned fan_budget = 16000;
    unsigned threads = 1;
};

// A map lowered to doubles plus seed points worth including in the candidate
// pool (essential-interval midpoints, backward-orbit fans, ...).
struct OracleProblem {
    std::function<double(double)> eval;
    std::vector<double> seeds;
    std::string label;
};

// Lower a piecewise-linear map and harvest structural seeds for the pool.
// Seeds come from essential-interval midpoints and a backward-orbit fan over
// the longest covering chain; for maps with higher periods the fan is built
// from the reduced iterate. Any failure on the exact side just means fewer
// seeds.
OracleProblem oracle_problem(const PLMap& f, const OracleConfig& cfg,
                             const Budget& budget = Budget{});

// Same for the logistic family x -> lambda*x*(1-x); seeds are backward fans
// anchored at the detected attractor and the repelling fixed point.
OracleProblem oracle_problem_logistic(double lambda, const OracleConfig& cfg);

struct SepTable {
    std::vector<double> epsilons;    // as configured, decreasing
    std::vector<unsigned> horizons;  // as configured, increasing
    // counts[i][j] = admitted separated-set size at (epsilons[i], horizons[j])
    std::vector<std::vector<std::size_t>> counts;
};

// Greedy separated-set counts over the full (eps, horizon) grid. For each
// epsilon the candidate pool (uniform grid, eps-spaced ladder, problem seeds)
// is scanned in a seeded shuffled order and a point is admitted iff it is
// (n,eps)-separated from everything admitted so far; the admitted set is kept
// and re-scanned as the horizon grows, so rows are nondecreasing in n.
// Columns are made nonincreasing in eps by cascading: a set separated at a
// coarser epsilon is also separated at a finer one.
SepTable sep_table(const OracleProblem& problem, const OracleConfig& cfg);

// Single cell, computed as a restriction of the same chains (horizons <= n,
// epsilons >= eps) so that the monotonicity of sep_table carries over to
// pointwise queries with ad-hoc (n, eps).
std::size_t sep_count(const OracleProblem& problem, unsigned n, double eps,
                      const OracleConfig& cfg);

struct SlopeEstimate {
    struct PerEps {
        double epsilon = 0.0;
        double slope = 0.0;     // log count vs log n least squares
        double residual = 0.0;  // rms residual of the fit
    };
    std::vector<PerEps> per_epsilon;
    double headline = 0.0;  // slope at the finest epsilon
};

SlopeEstimate slope_from_table(const SepTable& table);

// Convenience: table + fit. Throws InsufficientData with fewer than 4
// horizons.
SlopeEstimate slope_estimate(const OracleProblem& problem,
                             const OracleConfig& cfg);

}  // namespace polyent
