#include "polyent/plmap.hpp"

#include <algorithm>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

} // namespace

PLMap::PLMap(std::vector<Breakpoint> pts) {
    if (pts.size() < 2) throw DomainError("piecewise-linear map needs at least 2 breakpoints");
    const Rational zero(0), one(1);
    if (pts.front().x != zero || pts.back().x != one)
        throw DomainError("breakpoint grid must span exactly [0,1]");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0 && !(pts[i - 1].x < pts[i].x))
            throw DomainError("breakpoint x-coordinates must be strictly increasing");
        if (pts[i].y < zero || pts[i].y > one)
            throw DomainError("breakpoint value " + pts[i].y.str() + " outside [0,1]");
    }
    pts_.reserve(pts.size());
    for (auto& p : pts) {
        pts_.push_back(std::move(p));
        while (pts_.size() >= 3 &&
               collinear(pts_[pts_.size() - 3], pts_[pts_.size() - 2], pts_.back())) {
            pts_.erase(pts_.end() - 2);
        }
    }
}

PLMap PLMap::identity() {
    return PLMap({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

Rational PLMap::operator()(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1))
        throw DomainError("evaluation outside [0,1] at t = " + t.str());
    // last segment whose left endpoint is <= t
    std::size_t lo = 0, hi = pts_.size() - 1;
    while (lo + 1 < hi) {
        std::size_t m = (lo + hi) / 2;
        if (pts_[m].x <= t) lo = m;
        else hi = m;
    }
    const Breakpoint& a = pts_[lo];
    const Breakpoint& b = pts_[lo + 1];
    if (t == a.x) return a.y;
    if (t == b.x) return b.y;
    return a.y + (b.y - a.y) * (t - a.x) / (b.x - a.x);
}

PLMap compose(const PLMap& f, const PLMap& g, const Budget& budget) {
    const auto& gp = g.breakpoints();
    const auto& fp = f.breakpoints();

    std::vector<Rational> xs;
    xs.reserve(gp.size() + fp.size());
    for (const auto& p : gp) xs.push_back(p.x);

    // preimages under g of f's breakpoints, segment by segment
    for (std::size_t i = 0; i + 1 < gp.size(); ++i) {
        const Rational &x0 = gp[i].x, &x1 = gp[i + 1].x;
        const Rational &y0 = gp[i].y, &y1 = gp[i + 1].y;
        if (y0 == y1) continue;
        const Rational& vlo = y0 < y1 ? y0 : y1;
        const Rational& vhi = y0 < y1 ? y1 : y0;
        for (const auto& b : fp) {
            if (b.x <= vlo || b.x >= vhi) continue;
            xs.push_back(x0 + (x1 - x0) * (b.x - y0) / (y1 - y0));
        }
        if (xs.size() > budget.max_pieces)
            throw BudgetExceeded("composition breakpoint refinement exceeds piece budget");
    }

    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() > budget.max_pieces)
        throw BudgetExceeded("composition breakpoint refinement exceeds piece budget");

    std::vector<Breakpoint> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back({x, f(g(x))});
    return PLMap(std::move(out));
}

PLMap iterate(const PLMap& f, unsigned n, const Budget& budget) {
    PowerCache cache(f, budget);
    return cache.power(n);
}

PowerCache::PowerCache(PLMap base, Budget budget) : budget_(budget) {
    squares_.push_back(std::move(base));
}

const PLMap& PowerCache::power(unsigned n) {
    if (n == 0) {
        for (auto& m : memo_)
            if (m.first == 0) return m.second;
        memo_.emplace_back(0u, PLMap::identity());
        return memo_.back().second;
    }
    if (n == 1) return squares_[0];
    for (auto& m : memo_)
        if (m.first == n) return m.second;

    unsigned top = 0;
    while ((1u << (top + 1)) <= n) ++top;
    while (squares_.size() <= top)
        squares_.push_back(compose(squares_.back(), squares_.back(), budget_));

    if ((n & (n - 1)) == 0) return squares_[top];

    PLMap acc = squares_[top];
    unsigned rest = n - (1u << top);
    for (unsigned j = 0; (1u << j) <= rest; ++j)
        if (rest & (1u << j)) acc = compose(acc, squares_[j], budget_);
    memo_.emplace_back(n, std::move(acc));
    return memo_.back().second;
}

RInterval image(const PLMap& f, const RInterval& J) {
    struct Cand {
        Rational v;
        bool attained;
    };
    std::vector<Cand> cands;
    cands.push_back({f(J.lo), J.lo_closed});
    if (!J.is_point()) {
        cands.push_back({f(J.hi), J.hi_closed});
        const auto& pts = f.breakpoints();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (pts[i].x > J.lo && pts[i].x < J.hi) cands.push_back({pts[i].y, true});
            // constant segment meeting the interior of J attains its value
            if (i + 1 < pts.size() && pts[i].y == pts[i + 1].y) {
                const Rational& a = pts[i].x > J.lo ? pts[i].x : J.lo;
                const Rational& b = pts[i + 1].x < J.hi ? pts[i + 1].x : J.hi;
                if (a < b) cands.push_back({pts[i].y, true});
            }
        }
    }
    Rational lo = cands[0].v, hi = cands[0].v;
    for (const auto& c : cands) {
        if (c.v < lo) lo = c.v;
        if (c.v > hi) hi = c.v;
    }
    bool lo_att = false, hi_att = false;
    for (const auto& c : cands) {
        if (c.v == lo) lo_att = lo_att || c.attained;
        if (c.v == hi) hi_att = hi_att || c.attained;
    }
    return RInterval(lo, hi, lo_att, hi_att);
}

std::vector<RInterval> fixed_set(const PLMap& f) {
    const auto& pts = f.breakpoints();
    std::vector<RInterval> parts;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Rational d0 = pts[i].y - pts[i].x;
        Rational d1 = pts[i + 1].y - pts[i + 1].x;
        int s0 = d0.sign(), s1 = d1.sign();
        if (s0 == 0 && s1 == 0) {
            parts.push_back(RInterval::closed(pts[i].x, pts[i + 1].x));
        } else if (s0 == 0) {
            parts.push_back(RInterval::point(pts[i].x));
        } else if (s1 == 0) {
            parts.push_back(RInterval::point(pts[i + 1].x));
        } else if (s0 != s1) {
            Rational t = pts[i].x + (pts[i + 1].x - pts[i].x) * d0 / (d0 - d1);
            parts.push_back(RInterval::point(t));
        }
    }
    return normalize_components(std::move(parts));
}

std::vector<RInterval> periodic_points(const PLMap& f, unsigned p, const Budget& budget) {
    if (p == 0) throw DomainError("period must be positive");
    PowerCache cache(f, budget);
    std::vector<RInterval> S = fixed_set(cache.power(p));
    for (unsigned q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        S = subtract_components(S, fixed_set(cache.power(q)));
        if (S.empty()) break;
    }
    return S;
}

namespace {

long long lap_count(const PLMap& f) {
    const auto& pts = f.breakpoints();
    long long laps = 1;
    int prev = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        int s = (pts[i + 1].y - pts[i].y).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++laps;
        prev = s;
    }
    return laps;
}

} // namespace

LapProfile lap_numbers(const PLMap& f, unsigned n_max, const Budget& budget) {
    if (n_max == 0) throw DomainError("lap profile needs n_max >= 1");
    LapProfile profile;
    profile.n_max = n_max;
    PLMap fn = f;
    profile.counts.push_back(lap_count(fn));
    for (unsigned n = 2; n <= n_max; ++n) {
        fn = compose(f, fn, budget);
        profile.counts.push_back(lap_count(fn));
    }
    return profile;
}

} // namespace polyent
