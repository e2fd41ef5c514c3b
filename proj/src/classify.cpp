#include "polyent/classify.hpp"

#include <algorithm>

#include "polyent/errors.hpp"

namespace polyent {

SharkovskiiType sharkovskii_type(const PLMap& f, unsigned n_budget,
                                 const Budget& budget) {
    SharkovskiiType out;

    // Non power-of-two probes first; any hit is decisive. A budget failure
    // here is harmless: absence of a power of two below rules these out anyway.
    for (unsigned p : {3u, 5u, 6u, 12u}) {
        try {
            if (!periodic_points(f, p, budget).empty()) {
                out.cls = TypeClass::A2I;
                out.violating_period = p;
                out.note = "exact period " + std::to_string(p) + " present";
                return out;
            }
        } catch (const BudgetExceeded&) {
        }
    }

    // Powers of two, ascending. Stop at the first absent one.
    for (unsigned j = 0; j <= n_budget + 1; ++j) {
        bool present = false;
        try {
            present = !periodic_points(f, 1u << j, budget).empty();
        } catch (const BudgetExceeded&) {
            out.cls = TypeClass::UNKNOWN;
            out.note = "piece budget exhausted at period 2^" + std::to_string(j);
            return out;
        }
        if (!present) {
            if (j == 0)
                throw InternalInvariantViolation("map without fixed points");
            out.cls = TypeClass::POWER_OF_TWO;
            out.n = j - 1;
            return out;
        }
    }
    out.cls = TypeClass::A2I;
    out.powers_exhausted = true;
    out.note = "all tested powers of two present up to 2^" +
               std::to_string(n_budget + 1);
    return out;
}

EntropyReport polynomial_entropy(const PLMap& f, unsigned n_budget,
                                 const Budget& budget) {
    EntropyReport rep;
    rep.type = sharkovskii_type(f, n_budget, budget);
    switch (rep.type.cls) {
    case TypeClass::A2I:
        rep.kind = EntropyValue::INFINITE;
        rep.note = rep.type.note;
        return rep;
    case TypeClass::UNKNOWN:
        rep.kind = EntropyValue::UNKNOWN;
        rep.note = rep.type.note;
        return rep;
    case TypeClass::POWER_OF_TWO:
        break;
    }

    const unsigned n = rep.type.n;
    PowerCache cache(f, budget);
    const PLMap& g = cache.power(1u << n);
    rep.reduction_power = 1u << n;

    const Type1Result t1 = is_type1(g, budget);
    if (t1.verdict == Tri::NO)
        throw InternalInvariantViolation(
            "reduced iterate still has periodic points of period > 1");
    if (t1.verdict == Tri::UNKNOWN) {
        rep.kind = EntropyValue::UNKNOWN;
        rep.note = "could not certify the reduced iterate within budget";
        return rep;
    }

    const CoverDAG dag = cover_dag(g, budget);
    const ChainResult chain = max_chain(dag);
    rep.kind = EntropyValue::FINITE;
    rep.value = chain.length;
    for (int idx : chain.chain)
        rep.chain.push_back(dag.nodes[static_cast<std::size_t>(idx)]);
    if (n >= 1 && rep.value < static_cast<int>(n) - 1)
        throw InternalInvariantViolation(
            "entropy below the structural floor for this type");
    return rep;
}

Tri zero_entropy_check(const PLMap& f, const Budget& budget) {
    try {
        const PLMap f2 = compose(f, f, budget);
        return fixed_set(f2).size() <= 1 ? Tri::YES : Tri::NO;
    } catch (const BudgetExceeded&) {
        return Tri::UNKNOWN;
    }
}

int monotone_entropy(const PLMap& f, const Budget& budget) {
    const auto& pts = f.breakpoints();
    int dir = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const int s = rat_cmp(pts[i + 1].y, pts[i].y);
        if (s == 0) continue;
        if (dir == 0) dir = s;
        else if (dir != s) throw NotMonotone("map is not weakly monotone");
    }
    const PLMap f2 = compose(f, f, budget);
    return fixed_set(f2).size() <= 1 ? 0 : 1;
}

} // namespace polyent
