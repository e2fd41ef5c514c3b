#include "polyent/fixstruct.hpp"

#include <algorithm>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

Rational representative(const RInterval& comp) {
    return comp.is_point() ? comp.lo : comp.mid();
}

// Does f attain the value v somewhere on [lo, hi] minus the excluded endpoint?
// exclude_hi drops t == hi as a solution (mirror for exclude_lo).
bool attains_value_on(const PLMap& f, const Rational& v, const Rational& lo,
                      const Rational& hi, bool exclude_lo, bool exclude_hi) {
    const auto& pts = f.breakpoints();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Rational x0 = max(pts[i].x, lo);
        const Rational x1 = min(pts[i + 1].x, hi);
        if (x0 > x1) continue;
        // segment values at the clipped ends
        const Rational y0 = f(x0);
        const Rational y1 = f(x1);
        if (v < min(y0, y1) || v > max(y0, y1)) continue;
        Rational t;
        if (y0 == y1) {
            t = x0; // flat at v, leftmost point of the clip
        } else {
            t = x0 + (x1 - x0) * (v - y0) / (y1 - y0);
        }
        if (exclude_lo && t == lo) {
            // try the other end of a flat stretch
            if (y0 == y1 && x1 > lo && !(exclude_hi && x1 == hi)) return true;
            continue;
        }
        if (exclude_hi && t == hi) continue;
        return true;
    }
    return false;
}

} // namespace

Type1Result is_type1(const PLMap& f, const Budget& budget) {
    Type1Result r;
    bool p2_known = false;
    std::vector<RInterval> p2;
    try {
        p2 = periodic_points(f, 2, budget);
        p2_known = true;
    } catch (const BudgetExceeded&) {
    }
    if (p2_known && !p2.empty()) {
        r.verdict = Tri::NO;
        r.witness = representative(p2.front());
        r.witness_period = 2;
        return r;
    }
    // Redundant probes. With period 2 absent these must all come back empty;
    // with period 2 undecided any hit still settles the question.
    for (unsigned p : {3u, 4u, 6u}) {
        try {
            auto comps = periodic_points(f, p, budget);
            if (!comps.empty()) {
                if (p2_known)
                    throw InternalInvariantViolation(
                        "period " + std::to_string(p) +
                        " orbit found although period 2 is empty");
                r.verdict = Tri::NO;
                r.witness = representative(comps.front());
                r.witness_period = p;
                return r;
            }
        } catch (const BudgetExceeded&) {
        }
    }
    r.verdict = p2_known ? Tri::YES : Tri::UNKNOWN;
    return r;
}

EssentialDecomposition essential_intervals(const PLMap& f) {
    EssentialDecomposition out;
    out.fixed_components = fixed_set(f);
    if (out.fixed_components.empty())
        throw InternalInvariantViolation("continuous self-map with empty fixed set");

    const Rational zero(0), one(1);
    auto orientation_at = [&](const Rational& lo, const Rational& hi) {
        const Rational m = midpoint(lo, hi);
        const Rational fm = f(m);
        if (fm == m)
            throw InternalInvariantViolation("fixed point inside a complement gap");
        return fm > m ? Orientation::UP : Orientation::DOWN;
    };
    auto push_gap = [&](const Rational& lo, const Rational& hi, bool lo_fixed,
                        bool hi_fixed) {
        if (lo >= hi) return;
        if (lo_fixed && hi_fixed) {
            EssentialInterval e;
            e.I = RInterval::open(lo, hi);
            e.dir = orientation_at(lo, hi);
            e.source = (e.dir == Orientation::UP) ? lo : hi;
            out.essential.push_back(std::move(e));
        } else {
            out.boundary_excluded.push_back(
                RInterval(lo, hi, !lo_fixed, !hi_fixed));
        }
    };

    const auto& fc = out.fixed_components;
    push_gap(zero, fc.front().lo, /*lo_fixed=*/false, /*hi_fixed=*/true);
    for (std::size_t i = 0; i + 1 < fc.size(); ++i)
        push_gap(fc[i].hi, fc[i + 1].lo, true, true);
    push_gap(fc.back().hi, one, true, /*hi_fixed=*/false);
    return out;
}

OrbitClosure orbit_closure(const PLMap& f, const EssentialInterval& I,
                           const Budget& budget) {
    const bool up = (I.dir == Orientation::UP);
    const Rational a = I.a();
    const Rational b = I.b();
    const auto fixed = fixed_set(f);
    auto is_fixed_point = [&](const Rational& t) { return f(t) == t; };

    // moving endpoint (far end) and whether the hull contains it
    Rational far = up ? b : a;
    bool attained = false;

    auto make_hull = [&]() {
        return up ? RInterval(a, far, false, attained)
                  : RInterval(far, b, attained, false);
    };
    auto result = [&]() {
        OrbitClosure oc;
        oc.orbit = make_hull();
        oc.far_end = far;
        oc.attained = attained;
        return oc;
    };

    for (std::size_t iter = 0; iter < budget.max_hull_iters; ++iter) {
        const RInterval H = make_hull();
        const RInterval J = image(f, H);
        Rational nfar = far;
        bool natt = attained;
        if (up) {
            if (J.lo < a)
                throw InternalInvariantViolation("orbit hull escaped below its source");
            if (J.hi > far) {
                nfar = J.hi;
                natt = J.hi_closed;
            } else if (J.hi == far) {
                natt = attained || J.hi_closed;
            }
        } else {
            if (J.hi > b)
                throw InternalInvariantViolation("orbit hull escaped above its source");
            if (J.lo < far) {
                nfar = J.lo;
                natt = J.lo_closed;
            } else if (J.lo == far) {
                natt = attained || J.lo_closed;
            }
        }
        if (nfar == far && natt == attained) return result(); // stable
        far = nfar;
        attained = natt;

        // Escape analysis: if the far end sits in a gap of Fix(f) where the
        // map pushes outward, the hull creeps toward the gap's far boundary p.
        // When f never exceeds p on the hull side and never takes the value p
        // there, p is a limit that is approached but not reached.
        if (is_fixed_point(far)) continue;
        if (up) {
            auto it = std::find_if(fixed.begin(), fixed.end(), [&](const RInterval& c) {
                return c.lo > far;
            });
            if (it == fixed.end()) continue; // nothing fixed above, finite stabilization
            const Rational p = it->lo;
            if (f(midpoint(far, p)) <= midpoint(far, p)) continue; // inward gap
            const RInterval K = RInterval::closed(a, p);
            if (image(f, K).hi > p) continue; // hull will clear p in finitely many steps
            if (attains_value_on(f, p, a, p, false, /*exclude_hi=*/true))
                continue; // p itself gets hit eventually
            far = p;
            attained = false;
            return result();
        } else {
            auto it = std::find_if(fixed.rbegin(), fixed.rend(), [&](const RInterval& c) {
                return c.hi < far;
            });
            if (it == fixed.rend()) continue;
            const Rational p = it->hi;
            if (f(midpoint(p, far)) >= midpoint(p, far)) continue;
            const RInterval K = RInterval::closed(p, b);
            if (image(f, K).lo < p) continue;
            if (attains_value_on(f, p, p, b, /*exclude_lo=*/true, false))
                continue;
            far = p;
            attained = false;
            return result();
        }
    }
    throw BudgetExceeded("orbit closure hull iteration budget exhausted");
}

CoverDAG cover_dag(const PLMap& f, const Budget& budget) {
    const Type1Result t1 = is_type1(f, budget);
    if (t1.verdict == Tri::NO) throw NotType1("map has a periodic point of period > 1");
    if (t1.verdict == Tri::UNKNOWN)
        throw BudgetExceeded("could not certify Per(f) = Fix(f) within budget");

    CoverDAG dag;
    dag.nodes = essential_intervals(f).essential;
    dag.orbits.reserve(dag.nodes.size());
    for (const auto& e : dag.nodes) dag.orbits.push_back(orbit_closure(f, e, budget));

    const int n = static_cast<int>(dag.nodes.size());
    for (int i = 0; i < n; ++i) {
        const auto& oi = dag.orbits[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& ej = dag.nodes[static_cast<std::size_t>(j)];
            // open I_j inside the half-open orbit hull: endpoint comparisons suffice
            const bool covers =
                oi.orbit.lo <= ej.a() && ej.b() <= oi.orbit.hi;
            if (covers) dag.edges.emplace_back(i, j);
        }
    }

    // acyclicity check (three-color DFS)
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : dag.edges) adj[static_cast<std::size_t>(u)].push_back(v);
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != 0) continue;
        stack.clear();
        stack.emplace_back(s, 0);
        color[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next < adj[static_cast<std::size_t>(u)].size()) {
                const int v = adj[static_cast<std::size_t>(u)][next++];
                if (color[static_cast<std::size_t>(v)] == 1)
                    throw InternalInvariantViolation("covering relation has a cycle");
                if (color[static_cast<std::size_t>(v)] == 0) {
                    color[static_cast<std::size_t>(v)] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                color[static_cast<std::size_t>(u)] = 2;
                stack.pop_back();
            }
        }
    }
    return dag;
}

ChainResult max_chain(const CoverDAG& dag) {
    ChainResult res;
    const int n = static_cast<int>(dag.nodes.size());
    if (n == 0) return res;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : dag.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        ++indeg[static_cast<std::size_t>(v)];
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    // topological order (Kahn)
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
    while (!queue.empty()) {
        std::sort(queue.begin(), queue.end(), std::greater<int>());
        const int u = queue.back();
        queue.pop_back();
        order.push_back(u);
        for (int v : adj[static_cast<std::size_t>(u)])
            if (--indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    }
    if (static_cast<int>(order.size()) != n)
        throw InternalInvariantViolation("covering relation has a cycle");

    // longest path ending rule: len[u] = 1 + max len over successors
    std::vector<int> len(static_cast<std::size_t>(n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int u = *it;
        for (int v : adj[static_cast<std::size_t>(u)])
            len[static_cast<std::size_t>(u)] =
                std::max(len[static_cast<std::size_t>(u)],
                         1 + len[static_cast<std::size_t>(v)]);
    }
    int best = 0;
    for (int i = 0; i < n; ++i)
        best = std::max(best, len[static_cast<std::size_t>(i)]);

    // reconstruct, preferring the smallest node index at every step
    int cur = -1;
    for (int i = 0; i < n; ++i)
        if (len[static_cast<std::size_t>(i)] == best) { cur = i; break; }
    res.length = best;
    res.chain.push_back(cur);
    while (static_cast<int>(res.chain.size()) < best) {
        int next = -1;
        for (int v : adj[static_cast<std::size_t>(cur)]) {
            if (len[static_cast<std::size_t>(v)] ==
                len[static_cast<std::size_t>(cur)] - 1) { next = v; break; }
        }
        if (next < 0) throw InternalInvariantViolation("chain reconstruction failed");
        res.chain.push_back(next);
        cur = next;
    }
    return res;
}

} // namespace polyent
