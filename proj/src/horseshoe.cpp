#include "polyent/horseshoe.hpp"

#include <algorithm>
#include <set>

#include "polyent/errors.hpp"

namespace polyent {

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw DomainError("binomial with negative upper index");
    if (BigInt(k) > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: product of i+1 consecutive integers
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt ndw_count(unsigned k, unsigned l) {
    if (l == 0) throw DomainError("need at least one symbol");
    return binomial(BigInt(k) + l - 1, l - 1);
}

BigInt en_count(unsigned n, unsigned l) {
    if (n == 0 || l == 0) throw DomainError("need n >= 1 and l >= 1");
    const BigInt closed = binomial(BigInt(n) + l - 1, l);
    BigInt summed = 0;
    for (unsigned k = 0; k < n; ++k) summed += ndw_count(k, l);
    if (closed != summed)
        throw InternalInvariantViolation("word count identity failed");
    return closed;
}

BigInt parts_at_least_two(unsigned m, long long s) {
    if (m == 0) return s == 0 ? 1 : 0;
    if (s < 2LL * m) return 0;
    return binomial(BigInt(s) - m - 1, m - 1);
}

BigInt allowable_word_bound(unsigned n, unsigned pieces, unsigned l) {
    if (pieces == 0 || l == 0) throw DomainError("need pieces >= 1 and l >= 1");
    if (n <= pieces) throw DomainError("bound only valid for n > pieces");
    BigInt total = 0;
    for (unsigned i = 1; i <= pieces; ++i) {
        BigInt inner = 0;
        for (unsigned m = 1; m <= std::min(i, l); ++m) {
            inner += binomial(BigInt(i), m) *
                     parts_at_least_two(m, static_cast<long long>(n) - (i - m));
        }
        total += binomial(BigInt(pieces), i) * factorial(i) * inner;
    }
    return total;
}

std::optional<Rational> leftmost_preimage(const PLMap& g, const Rational& v,
                                          const RInterval& box) {
    const auto& pts = g.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational x0 = max(pts[i].x, box.lo);
        const Rational x1 = min(pts[i + 1].x, box.hi);
        if (x0 > x1) continue;
        const Rational y0 = g(x0);
        const Rational y1 = g(x1);
        if (v < min(y0, y1) || v > max(y0, y1)) continue;
        Rational t;
        if (y0 == y1) {
            t = x0;
            if (!box.contains(t)) t = x1 == x0 ? x0 : midpoint(x0, x1);
        } else {
            t = x0 + (x1 - x0) * (v - y0) / (y1 - y0);
        }
        if (box.contains(t)) return t;
    }
    return std::nullopt;
}

namespace {

bool covers_all(const PLMap& F, const std::vector<RInterval>& A) {
    for (std::size_t i = 0; i < A.size(); ++i) {
        const RInterval img = image(F, A[i]);
        for (std::size_t j = i; j < A.size(); ++j)
            if (!interval_subset(A[j], img)) return false;
    }
    return true;
}

// doubling search for an iterate k with f^k(A_i) covering A_j for all i <= j;
// sound because each A_i covers itself at k0, making growth monotone
unsigned find_covering_iterate(PowerCache& cache, const std::vector<RInterval>& A,
                               unsigned k0, const Budget& budget) {
    for (unsigned k = k0;; k *= 2) {
        if (k > budget.max_covering_iterate)
            throw BudgetExceeded("covering iterate cap reached");
        if (covers_all(cache.power(k), A)) return k;
    }
}

} // namespace

HorseshoeCertificate horseshoe_from_chain(const PLMap& f,
                                          const std::vector<EssentialInterval>& chain,
                                          const Budget& budget) {
    if (chain.empty()) throw EmptyChain("cannot build a horseshoe from an empty chain");
    const Type1Result t1 = is_type1(f, budget);
    if (t1.verdict == Tri::NO) throw NotType1("map has a periodic point of period > 1");
    if (t1.verdict == Tri::UNKNOWN)
        throw BudgetExceeded("could not certify Per(f) = Fix(f) within budget");

    // each element must genuinely be an essential interval of f
    for (const auto& e : chain) {
        const Rational a = e.a(), b = e.b();
        if (f(a) != a || f(b) != b)
            throw DomainError("chain interval endpoints are not fixed");
        const Rational m = midpoint(a, b);
        const Rational fm = f(m);
        if (fm == m ||
            (e.dir == Orientation::UP) != (fm > m))
            throw DomainError("chain interval orientation is wrong");
        if (e.source != (e.dir == Orientation::UP ? a : b))
            throw DomainError("chain interval source mismatch");
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const OrbitClosure oc = orbit_closure(f, chain[i], budget);
        if (!(oc.orbit.lo <= chain[i + 1].a() && chain[i + 1].b() <= oc.orbit.hi))
            throw DomainError("consecutive intervals do not form a covering chain");
    }

    HorseshoeCertificate cert;
    for (const auto& e : chain) {
        const Rational m = midpoint(e.a(), e.b());
        cert.intervals.push_back(e.dir == Orientation::UP
                                     ? RInterval::closed(e.a(), m)
                                     : RInterval::closed(m, e.b()));
    }
    PowerCache cache(f, budget);
    cert.k = find_covering_iterate(cache, cert.intervals, 1, budget);
    cert.witness = midpoint(chain.back().a(), chain.back().b());
    if (f(cert.witness) == cert.witness)
        throw InternalInvariantViolation("witness inside an essential interval is fixed");
    return cert;
}

namespace {

// simple cycles split into halves swapped by the map, recursively under its square
bool cycle_is_simple(const std::vector<Rational>& cycle, PowerCache& cache,
                     unsigned level_exp) {
    const std::size_t m = cycle.size();
    if (m <= 1) return true;
    const PLMap& g = cache.power(1u << level_exp);
    if (m == 2) return g(cycle[0]) == cycle[1] && g(cycle[1]) == cycle[0];
    const std::size_t h = m / 2;
    std::set<Rational> left(cycle.begin(), cycle.begin() + h);
    std::set<Rational> right(cycle.begin() + h, cycle.end());
    for (const auto& x : left)
        if (right.find(g(x)) == right.end()) return false;
    for (const auto& x : right)
        if (left.find(g(x)) == left.end()) return false;
    std::vector<Rational> L(left.begin(), left.end());
    std::vector<Rational> R(right.begin(), right.end());
    return cycle_is_simple(L, cache, level_exp + 1) &&
           cycle_is_simple(R, cache, level_exp + 1);
}

// middle intervals of the nested right halves: the tower behind the horseshoe
void middle_tower(const std::vector<Rational>& cycle, std::vector<RInterval>& out) {
    const std::size_t m = cycle.size();
    if (m < 4) return;
    const std::size_t h = m / 2;
    out.push_back(RInterval::closed(cycle[h - 1], cycle[h]));
    middle_tower(std::vector<Rational>(cycle.begin() + h, cycle.end()), out);
}

} // namespace

HorseshoeCertificate horseshoe_from_simple_cycle(const PLMap& f, unsigned n,
                                                 const Budget& budget) {
    if (n < 2) throw DomainError("need a cycle of period at least 4");
    const unsigned p = 1u << n;
    const auto comps = periodic_points(f, p, budget);
    if (comps.empty())
        throw NoSimpleCycleFound("no points of exact period 2^" + std::to_string(n));

    PowerCache cache(f, budget);
    std::vector<Rational> candidates;
    for (const auto& c : comps) {
        candidates.push_back(c.is_point() ? c.lo : c.mid());
        if (!c.is_point()) {
            candidates.push_back(c.lo + (c.hi - c.lo) / 4);
            candidates.push_back(c.lo + (c.hi - c.lo) * 3 / 4);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    std::set<std::vector<Rational>> seen;
    for (const auto& x0 : candidates) {
        std::vector<Rational> orbit;
        orbit.reserve(p);
        Rational x = x0;
        for (unsigned i = 0; i < p; ++i) {
            orbit.push_back(x);
            x = f(x);
        }
        std::sort(orbit.begin(), orbit.end());
        if (!seen.insert(orbit).second) continue;
        if (!cycle_is_simple(orbit, cache, 0)) continue;

        HorseshoeCertificate cert;
        middle_tower(orbit, cert.intervals);
        if (cert.intervals.size() != n - 1)
            throw InternalInvariantViolation("tower depth mismatch");
        cert.k = p;

        // innermost 4-cycle is the top four points; the witness maps onto its
        // minimum in one step of f^p
        const Rational target = orbit[p - 4];
        const RInterval& last = cert.intervals.back();
        const auto w = leftmost_preimage(cache.power(p), target, last);
        if (!w)
            throw PreimageSelectionFailure(
                "middle interval has no preimage of the cycle minimum");
        cert.witness = *w;
        cert.escape = EscapeData{1, 1};

        const VerifyResult vr = verify_horseshoe(f, cert, budget);
        if (!vr.ok)
            throw InternalInvariantViolation(
                "constructed certificate failed verification: " + vr.detail);
        return cert;
    }
    throw NoSimpleCycleFound("no simple cycle of period 2^" + std::to_string(n) +
                             " among the sampled orbits");
}

VerifyResult verify_horseshoe(const PLMap& f, const HorseshoeCertificate& cert,
                              const Budget& budget) {
    VerifyResult res;
    auto fail = [&](VerifyFailure why, std::string detail) {
        res.ok = false;
        res.failure = why;
        res.detail = std::move(detail);
        return res;
    };

    const std::size_t l = cert.intervals.size();
    if (l == 0) return fail(VerifyFailure::MALFORMED, "certificate has no intervals");
    if (cert.k == 0) return fail(VerifyFailure::MALFORMED, "iterate k must be positive");
    const Rational zero(0), one(1);
    for (const auto& A : cert.intervals)
        if (A.lo < zero || A.hi > one || !A.lo_closed || !A.hi_closed)
            return fail(VerifyFailure::MALFORMED,
                        "intervals must be closed subintervals of [0,1]");
    if (cert.witness < zero || cert.witness > one)
        return fail(VerifyFailure::MALFORMED, "witness outside [0,1]");

    // pairwise disjointness of closed intervals
    {
        auto sorted = cert.intervals;
        std::sort(sorted.begin(), sorted.end(),
                  [](const RInterval& a, const RInterval& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i].hi >= sorted[i + 1].lo)
                return fail(VerifyFailure::DISJOINTNESS,
                            "intervals " + sorted[i].str() + " and " +
                                sorted[i + 1].str() + " touch");
    }

    try {
        PowerCache cache(f, budget);
        const PLMap& F = cache.power(cert.k);
        for (std::size_t i = 0; i < l; ++i) {
            const RInterval img = image(F, cert.intervals[i]);
            for (std::size_t j = i; j < l; ++j)
                if (!interval_subset(cert.intervals[j], img))
                    return fail(VerifyFailure::COVERING,
                                "f^" + std::to_string(cert.k) + " image of interval " +
                                    std::to_string(i + 1) + " misses interval " +
                                    std::to_string(j + 1));
        }
        const PLMap& F2 = cache.power(2 * cert.k);
        for (std::size_t i = 0; i < l; ++i) {
            const RInterval img = image(F2, cert.intervals[i]);
            for (std::size_t j = i; j < l; ++j)
                if (!interval_subset(cert.intervals[j], img))
                    return fail(VerifyFailure::COVERING_2K,
                                "covering does not persist at iterate " +
                                    std::to_string(2 * cert.k));
        }

        if (!cert.intervals.back().contains(cert.witness))
            return fail(VerifyFailure::WITNESS, "witness not in the last interval");
        if (f(cert.witness) == cert.witness)
            return fail(VerifyFailure::WITNESS, "witness is a fixed point");

        const Type1Result t1 = is_type1(f, budget);
        if (t1.verdict == Tri::YES) {
            // all periodic points fixed: every non-fixed point is non-recurrent
            res.ok = true;
            return res;
        }
        if (!cert.escape)
            return fail(VerifyFailure::WITNESS,
                        "map not certified type 1 and certificate lacks escape data");
        const unsigned t = cert.escape->steps, per = cert.escape->period;
        if (per == 0)
            return fail(VerifyFailure::MALFORMED, "escape period must be positive");
        std::vector<Rational> traj{cert.witness};
        for (unsigned m = 1; m <= t + per; ++m) traj.push_back(F(traj.back()));
        if (traj[t + per] != traj[t])
            return fail(VerifyFailure::WITNESS,
                        "escape data does not describe an eventually periodic tail");
        for (unsigned m = 1; m <= t + per; ++m)
            if (traj[m] == cert.witness)
                return fail(VerifyFailure::WITNESS, "witness orbit returns to itself");
    } catch (const BudgetExceeded& e) {
        return fail(VerifyFailure::BUDGET, e.what());
    }
    res.ok = true;
    return res;
}

SeparatedWitness separated_witness_from_horseshoe(const PLMap& f,
                                                  const HorseshoeCertificate& cert,
                                                  unsigned n, const Budget& budget) {
    if (n == 0) throw DomainError("horizon must be positive");
    const VerifyResult vr = verify_horseshoe(f, cert, budget);
    if (!vr.ok) throw DomainError("certificate fails verification: " + vr.detail);

    const std::size_t l = cert.intervals.size();
    PowerCache cache(f, budget);
    const PLMap& F = cache.power(cert.k);

    // eps below half the interval gaps and half the witness self-distance
    std::optional<Rational> m;
    auto lower = [&](const Rational& d) {
        if (!m || d < *m) m = d;
    };
    {
        auto sorted = cert.intervals;
        std::sort(sorted.begin(), sorted.end(),
                  [](const RInterval& a, const RInterval& b) { return a.lo < b.lo; });
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            lower(sorted[i + 1].lo - sorted[i].hi);
        Rational w = cert.witness;
        for (unsigned t = 1; t < n; ++t) {
            w = F(w);
            const Rational d = abs(w - cert.witness);
            if (d == 0)
                throw InternalInvariantViolation("witness is recurrent at the horizon");
            lower(d);
        }
    }
    SeparatedWitness out;
    out.n = n;
    out.eps = m ? *m / 2 : Rational(1, 4);

    // one point per nondecreasing word of length < n, by leftmost preimages
    std::vector<std::vector<unsigned>> words{{}};
    for (unsigned len = 1; len < n; ++len) {
        std::vector<unsigned> w(len, 0);
        while (true) {
            words.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] == l - 1) --i;
            if (i == 0) break;
            const unsigned v = ++w[i - 1];
            for (std::size_t j = i; j < len; ++j) w[j] = v;
        }
    }
    for (const auto& w : words) {
        Rational y = cert.witness;
        for (std::size_t i = w.size(); i > 0; --i) {
            const auto pre = leftmost_preimage(F, y, cert.intervals[w[i - 1]]);
            if (!pre)
                throw PreimageSelectionFailure("no preimage inside interval " +
                                               std::to_string(w[i - 1] + 1));
            y = *pre;
        }
        out.points.push_back(y);
    }
    if (BigInt(static_cast<long long>(out.points.size())) !=
        en_count(n, static_cast<unsigned>(l)))
        throw InternalInvariantViolation("separated set has the wrong cardinality");

    // recheck every pair against eps on the full horizon
    std::vector<std::vector<Rational>> traj;
    traj.reserve(out.points.size());
    for (const auto& x : out.points) {
        std::vector<Rational> t{x};
        for (unsigned s = 1; s < n; ++s) t.push_back(F(t.back()));
        traj.push_back(std::move(t));
    }
    for (std::size_t p = 0; p < traj.size(); ++p)
        for (std::size_t q = p + 1; q < traj.size(); ++q) {
            bool sep = false;
            for (unsigned t = 0; t < n && !sep; ++t)
                sep = abs(traj[p][t] - traj[q][t]) > out.eps;
            if (!sep)
                throw InternalInvariantViolation("two witness points fail separation");
        }
    return out;
}

} // namespace polyent
