/**
 * @file logistic.hpp
 * @brief Numerical attractor detection for the quadratic family
 *        f(x) = lambda x (1 - x) and the entropy verdict table over the
 *        period-doubling cascade, plus the lap-count upper bound check.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyent/classify.hpp"
#include "polyent/plmap.hpp"

namespace polyent {

struct LogisticConfig {
    double tol = 1e-7;
    std::uint32_t burn_in = 200000;
    std::uint32_t window = 2048;
    unsigned max_period_exp = 8;
    double lambda_infinity = 3.5699456; // INFINITE at and beyond this cutoff
};

enum class AttractorKind { FIXED_AT_ZERO, CYCLE, UNDETECTED };

struct Attractor {
    AttractorKind kind = AttractorKind::UNDETECTED;
    unsigned period_exp = 0;          // period 2^period_exp when CYCLE
    std::vector<double> orbit;        // one period of the detected cycle
    double residual = 0.0;            // worst |f^p(x) - x| over the window
};

/// Tracks the critical point 1/2 past burn-in, then reports the smallest
/// power-of-two period whose return residual stays below tol over a window.
Attractor detect_attracting_cycle(double lambda, const LogisticConfig& cfg = {});

struct LogisticVerdict {
    double lambda = 0.0;
    Attractor attractor;
    EntropyValue kind = EntropyValue::UNKNOWN;
    int value = 0; // when FINITE
    std::string note;
};

/// Verdict table: lambda <= 1 gives 0, an attracting 2^n-cycle gives n + 1,
/// lambda at or past the cascade limit gives INFINITE, otherwise UNKNOWN.
LogisticVerdict logistic_hpol(double lambda, const LogisticConfig& cfg = {});

struct LapBoundCheck {
    double slope = 0.0;       // fitted exponent of lap counts of iterates
    EntropyReport report;     // the exact entropy the bound is checked against
    bool ok = false;          // value <= 1 + slope + 0.3
};

/// Checks the proven upper bound (entropy at most one plus the lap-count
/// growth exponent) against the exact finite value of a piecewise-linear map.
LapBoundCheck lap_bound_check(const PLMap& f, unsigned n_max,
                              const Budget& budget = {});

} // namespace polyent
