#include "polyent/interval.hpp"

#include <algorithm>

namespace polyent {

RInterval::RInterval(Rational l, Rational h, bool lc, bool hc)
    : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
    if (lo > hi || (lo == hi && !(lo_closed && hi_closed)))
        throw DomainError("empty or inverted interval [" + lo.str() + "," + hi.str() + "]");
}

bool RInterval::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::string RInterval::str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str();
    s += ',';
    s += hi.str();
    s += hi_closed ? ']' : ')';
    return s;
}

bool interval_subset(const RInterval& I, const RInterval& J) {
    bool lo_ok = J.lo < I.lo || (J.lo == I.lo && (J.lo_closed || !I.lo_closed));
    bool hi_ok = I.hi < J.hi || (I.hi == J.hi && (J.hi_closed || !I.hi_closed));
    return lo_ok && hi_ok;
}

std::optional<RInterval> interval_intersect(const RInterval& I, const RInterval& J) {
    Rational lo;
    bool lc;
    if (I.lo > J.lo) { lo = I.lo; lc = I.lo_closed; }
    else if (J.lo > I.lo) { lo = J.lo; lc = J.lo_closed; }
    else { lo = I.lo; lc = I.lo_closed && J.lo_closed; }

    Rational hi;
    bool hc;
    if (I.hi < J.hi) { hi = I.hi; hc = I.hi_closed; }
    else if (J.hi < I.hi) { hi = J.hi; hc = J.hi_closed; }
    else { hi = I.hi; hc = I.hi_closed && J.hi_closed; }

    if (lo > hi || (lo == hi && !(lc && hc))) return std::nullopt;
    return RInterval(lo, hi, lc, hc);
}

RInterval interval_hull(const RInterval& I, const RInterval& J) {
    Rational lo;
    bool lc;
    if (I.lo < J.lo) { lo = I.lo; lc = I.lo_closed; }
    else if (J.lo < I.lo) { lo = J.lo; lc = J.lo_closed; }
    else { lo = I.lo; lc = I.lo_closed || J.lo_closed; }

    Rational hi;
    bool hc;
    if (I.hi > J.hi) { hi = I.hi; hc = I.hi_closed; }
    else if (J.hi > I.hi) { hi = J.hi; hc = J.hi_closed; }
    else { hi = I.hi; hc = I.hi_closed || J.hi_closed; }

    return RInterval(lo, hi, lc, hc);
}

bool intervals_overlap(const RInterval& I, const RInterval& J) {
    return interval_intersect(I, J).has_value();
}

std::vector<RInterval> normalize_components(std::vector<RInterval> parts) {
    if (parts.empty()) return parts;
    std::sort(parts.begin(), parts.end(), [](const RInterval& a, const RInterval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<RInterval> out;
    out.push_back(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        RInterval& prev = out.back();
        const RInterval& cur = parts[i];
        bool mergeable = cur.lo < prev.hi ||
                         (cur.lo == prev.hi && (prev.hi_closed || cur.lo_closed));
        if (mergeable) {
            if (cur.hi > prev.hi) {
                prev.hi = cur.hi;
                prev.hi_closed = cur.hi_closed;
            } else if (cur.hi == prev.hi) {
                prev.hi_closed = prev.hi_closed || cur.hi_closed;
            }
        } else {
            out.push_back(cur);
        }
    }
    return out;
}

namespace {

// P \ B, appended to out; at most two remainders.
void subtract_one(const RInterval& P, const RInterval& B, std::vector<RInterval>& out) {
    if (!intervals_overlap(P, B)) {
        out.push_back(P);
        return;
    }
    // left remainder
    if (P.lo < B.lo) {
        out.emplace_back(P.lo, B.lo, P.lo_closed, !B.lo_closed);
    } else if (P.lo == B.lo && P.lo_closed && !B.lo_closed) {
        out.push_back(RInterval::point(P.lo));
    }
    // right remainder
    if (P.hi > B.hi) {
        out.emplace_back(B.hi, P.hi, !B.hi_closed, P.hi_closed);
    } else if (P.hi == B.hi && P.hi_closed && !B.hi_closed) {
        out.push_back(RInterval::point(P.hi));
    }
}

} // namespace

std::vector<RInterval> subtract_components(const std::vector<RInterval>& A,
                                           const std::vector<RInterval>& B) {
    std::vector<RInterval> cur(A.begin(), A.end());
    for (const RInterval& b : B) {
        std::vector<RInterval> next;
        next.reserve(cur.size() + 1);
        for (const RInterval& a : cur) subtract_one(a, b, next);
        cur = std::move(next);
    }
    return cur;
}

bool components_contain(const std::vector<RInterval>& A, const Rational& x) {
    for (const RInterval& a : A)
        if (a.contains(x)) return true;
    return false;
}

} // namespace polyent
