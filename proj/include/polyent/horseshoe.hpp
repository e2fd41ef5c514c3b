/**
 * @file horseshoe.hpp
 * @brief One-way horseshoe certificates and everything around them: building
 *        them from covering chains or from simple power-of-two cycles,
 *        independent verification, explicit separated witness sets, and the
 *        exact combinatorial counts they are measured against.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyent/fixstruct.hpp"
#include "polyent/plmap.hpp"
#include "polyent/rational.hpp"

namespace polyent {

// Witness orbits that leave the interval stack land on an eventually periodic
// tail; steps + period describe that tail under f^k.
struct EscapeData {
    unsigned steps = 0;
    unsigned period = 1;
};

// Disjoint closed intervals A_1..A_l with f^k(A_i) containing A_j for i <= j
// (list order), plus a non-recurrent witness in A_l.
struct HorseshoeCertificate {
    std::vector<RInterval> intervals; // closed, in certificate order
    unsigned k = 1;                   // iterate the covering holds for
    Rational witness;
    std::optional<EscapeData> escape; // required when the map is not type 1
};

enum class VerifyFailure {
    NONE,
    MALFORMED,
    DISJOINTNESS,
    COVERING,
    COVERING_2K,
    WITNESS,
    BUDGET,
};

struct VerifyResult {
    bool ok = false;
    VerifyFailure failure = VerifyFailure::NONE;
    std::string detail;
};

/// Re-derives every certificate property from scratch: shape, pairwise
/// disjointness, the one-way covering at k and at 2k, and witness
/// non-recurrence (via type 1, or via the escape data when supplied).
VerifyResult verify_horseshoe(const PLMap& f, const HorseshoeCertificate& cert,
                              const Budget& budget = {});

/// Builds an l-horseshoe from a covering chain of essential intervals, taking
/// the source-to-midpoint half of each. The iterate k is found by doubling
/// until the covering holds. Requires the map to be type 1.
HorseshoeCertificate horseshoe_from_chain(const PLMap& f,
                                          const std::vector<EssentialInterval>& chain,
                                          const Budget& budget = {});

/// Finds a simple 2^n-cycle (n >= 2) and stacks the middle intervals of its
/// halving levels into an (n-1)-horseshoe for f^(2^n). The witness maps onto
/// the cycle in one step of f^(2^n), so its escape tail is {1, 1}.
HorseshoeCertificate horseshoe_from_simple_cycle(const PLMap& f, unsigned n,
                                                 const Budget& budget = {});

struct SeparatedWitness {
    unsigned n = 0;   // time horizon
    Rational eps;     // exact separation threshold
    std::vector<Rational> points;
};

/// Materializes the separated set E_n behind a certificate: one point per
/// nondecreasing word of length < n, built by leftmost exact preimages of the
/// witness, separated by an explicitly computed eps. Every pair is rechecked.
SeparatedWitness separated_witness_from_horseshoe(const PLMap& f,
                                                  const HorseshoeCertificate& cert,
                                                  unsigned n,
                                                  const Budget& budget = {});

/// Leftmost t in box with g(t) = v, if any.
std::optional<Rational> leftmost_preimage(const PLMap& g, const Rational& v,
                                          const RInterval& box);

BigInt binomial(const BigInt& n, unsigned k);
BigInt factorial(unsigned n);

/// Number of nondecreasing words of length k over l symbols.
BigInt ndw_count(unsigned k, unsigned l);

/// Number of ways to write s as an ordered sum of m parts, each part >= 2:
/// C(s-m-1, m-1) when s >= 2m, else 0 (and 1 for the empty sum of 0).
BigInt parts_at_least_two(unsigned m, long long s);

/// |E_n| for an l-horseshoe: all words of length < n. Computed two ways
/// (closed form and summation) and cross-checked.
BigInt en_count(unsigned n, unsigned l);

/// Upper bound on the number of allowable n-words for a type-1 map with
/// `pieces` monotone pieces and longest chain `l`; valid for n > pieces.
BigInt allowable_word_bound(unsigned n, unsigned pieces, unsigned l);

} // namespace polyent
