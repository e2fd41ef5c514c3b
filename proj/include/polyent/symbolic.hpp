/**
 * @file symbolic.hpp
 * @brief Word complexity of symbol sequences and the estimators built on it:
 *        a polynomial-growth exponent fit for subshifts and the summed-count
 *        lower bound used for dendrite-style systems.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyent/rational.hpp"

namespace polyent {

/// Fibonacci substitution word (0 -> 01, 1 -> 0), first `len` symbols.
/// Its complexity is exactly n + 1 distinct factors of each length n.
std::string sturmian_fibonacci(std::size_t len);

/// pattern repeated up to `len` symbols
std::string periodic_sequence(const std::string& pattern, std::size_t len);

struct ComplexityProfile {
    unsigned n_max = 0;
    std::vector<std::uint64_t> counts; // counts[n] = distinct factors of length n, n = 0..n_max
    unsigned reliable_n = 0;           // largest n with 50n symbols of input behind it
    bool low_confidence = false;       // input shorter than 50 * n_max
};

/// Distinct-factor counts for n = 0..n_max via sliding windows. Requires the
/// sequence be at least 2 * n_max long, throws PrefixTooShort otherwise.
ComplexityProfile complexity(const std::string& seq, unsigned n_max);

struct GrowthEstimate {
    double slope = 0.0;     // fitted exponent of counts ~ n^slope
    double residual = 0.0;  // rms residual of the log-log fit
    bool superpolynomial = false;
    unsigned fit_lo = 0, fit_hi = 0; // window of n used
};

/// Log-log least squares over the top dyadic window of reliable lengths.
/// Flagged superpolynomial when the fit residual exceeds 0.08.
GrowthEstimate subshift_hpol_estimate(const ComplexityProfile& profile);

/// S(n) = sum of counts[0..2n]: the separated-set size at horizon n for the
/// arc-chain system driven by the sequence. Requires 2n <= n_max.
BigInt dendrite_sep_lower(const ComplexityProfile& profile, unsigned n);

// Exponent bracket for the arc-chain extension: S(n) growth from below, word
// complexity plus one from above. In the polynomial regime the two must agree
// up to a 0.25 tolerance or the estimators are broken.
struct DendriteBracket {
    double lower_slope = 0.0; // growth exponent of S(n)
    double upper_value = 0.0; // word-complexity exponent + 1
};

DendriteBracket dendrite_hpol_bracket(const ComplexityProfile& profile);

} // namespace polyent
