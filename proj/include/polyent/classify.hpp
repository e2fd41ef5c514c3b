/**
 * @file classify.hpp
 * @brief Top-level classification: which power-of-two type a map has, and the
 *        exact polynomial entropy obtained by reducing to an iterate whose
 *        periodic points are all fixed and measuring its longest covering chain.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyent/fixstruct.hpp"
#include "polyent/plmap.hpp"

namespace polyent {

enum class TypeClass { POWER_OF_TWO, A2I, UNKNOWN };

struct SharkovskiiType {
    TypeClass cls = TypeClass::UNKNOWN;
    unsigned n = 0;                      // type 2^n when cls == POWER_OF_TWO
    std::optional<unsigned> violating_period; // a non power-of-two period found
    bool powers_exhausted = false;       // every tested power of two was present
    std::string note;
};

/// Tests exact periods 2^0 .. 2^(n_budget+1) and the non-power probes
/// {3, 5, 6, 12}. A probe hit, or presence of every tested power, yields A2I.
/// POWER_OF_TWO(n) needs 2^n present, 2^(n+1) empty and all probes clean.
SharkovskiiType sharkovskii_type(const PLMap& f, unsigned n_budget = 5,
                                 const Budget& budget = {});

enum class EntropyValue { FINITE, INFINITE, UNKNOWN };

struct EntropyReport {
    EntropyValue kind = EntropyValue::UNKNOWN;
    int value = 0;                 // when FINITE
    SharkovskiiType type;
    unsigned reduction_power = 1;  // entropy measured on f^reduction_power
    std::vector<EssentialInterval> chain; // longest chain of the reduced map
    std::string note;
};

/// Exact polynomial entropy. Type 2^n maps reduce to g = f^(2^n); the value is
/// the length of the longest covering chain of g's essential intervals.
/// Maps beyond all powers of two report INFINITE.
EntropyReport polynomial_entropy(const PLMap& f, unsigned n_budget = 5,
                                 const Budget& budget = {});

/// Zero entropy test: Fix(f o f) connected. YES/NO/UNKNOWN (budget).
Tri zero_entropy_check(const PLMap& f, const Budget& budget = {});

/// Entropy of a weakly monotone map, always 0 or 1. Throws NotMonotone.
int monotone_entropy(const PLMap& f, const Budget& budget = {});

} // namespace polyent
