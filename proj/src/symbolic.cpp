#include "polyent/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_set>

#include "polyent/errors.hpp"
#include "polyent/rational.hpp"

namespace polyent {

std::string sturmian_fibonacci(std::size_t len) {
    if (len == 0) return {};
    std::string a = "0", b = "01"; // b is always a prefix of the next word
    while (b.size() < len) {
        std::string c = b + a;
        a = std::move(b);
        b = std::move(c);
    }
    return b.substr(0, len);
}

std::string periodic_sequence(const std::string& pattern, std::size_t len) {
    if (pattern.empty()) throw DomainError("empty pattern");
    std::string s;
    s.reserve(len);
    while (s.size() < len) s += pattern;
    return s.substr(0, len);
}

ComplexityProfile complexity(const std::string& seq, unsigned n_max) {
    if (n_max == 0) throw DomainError("need n_max >= 1");
    if (seq.size() < 2ull * n_max)
        throw PrefixTooShort("sequence of length " + std::to_string(seq.size()) +
                             " too short for factors of length " +
                             std::to_string(n_max));
    ComplexityProfile p;
    p.n_max = n_max;
    p.low_confidence = seq.size() < 50ull * n_max;
    p.reliable_n = static_cast<unsigned>(std::min<std::uint64_t>(seq.size() / 50, n_max));
    p.counts.resize(n_max + 1);
    p.counts[0] = 1;
    const std::string_view sv(seq);
    for (unsigned n = 1; n <= n_max; ++n) {
        std::unordered_set<std::string_view> seen;
        seen.reserve(seq.size());
        for (std::size_t i = 0; i + n <= sv.size(); ++i) seen.insert(sv.substr(i, n));
        p.counts[n] = seen.size();
    }
    return p;
}

namespace {

struct Fit {
    double slope, residual;
};

// least squares y = a + b x with rms residual
Fit loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return {0.0, 0.0};
    const double b = (n * sxy - sx * sy) / denom;
    const double a = (sy - b * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (a + b * xs[i]);
        rss += r * r;
    }
    return {b, std::sqrt(rss / n)};
}

constexpr double kSuperpolyResidual = 0.08;

} // namespace

GrowthEstimate subshift_hpol_estimate(const ComplexityProfile& profile) {
    const unsigned hi = std::min(profile.reliable_n, profile.n_max);
    const unsigned lo = std::max(1u, hi / 2);
    if (hi < lo || hi - lo + 1 < 4)
        throw InsufficientData("need at least 4 reliable lengths in the fit window");
    std::vector<double> xs, ys;
    for (unsigned n = lo; n <= hi; ++n) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(profile.counts[n])));
    }
    const Fit fit = loglog_fit(xs, ys);
    GrowthEstimate g;
    g.slope = fit.slope;
    g.residual = fit.residual;
    g.superpolynomial = fit.residual > kSuperpolyResidual;
    g.fit_lo = lo;
    g.fit_hi = hi;
    return g;
}

BigInt dendrite_sep_lower(const ComplexityProfile& profile, unsigned n) {
    if (2ull * n > profile.n_max)
        throw DomainError("horizon needs counts up to 2n <= n_max");
    BigInt s = 0;
    for (unsigned i = 0; i <= 2 * n; ++i) s += profile.counts[i];
    return s;
}

DendriteBracket dendrite_hpol_bracket(const ComplexityProfile& profile) {
    const GrowthEstimate word = subshift_hpol_estimate(profile);

    const unsigned hi = std::min(profile.reliable_n, profile.n_max) / 2;
    const unsigned lo = std::max(1u, hi / 2);
    if (hi < lo || hi - lo + 1 < 4)
        throw InsufficientData("need at least 4 horizons for the summed counts");
    std::vector<double> xs, ys;
    for (unsigned n = lo; n <= hi; ++n) {
        xs.push_back(std::log(2.0 * n));
        ys.push_back(std::log(dendrite_sep_lower(profile, n).convert_to<double>()));
    }
    DendriteBracket br;
    br.lower_slope = loglog_fit(xs, ys).slope;
    br.upper_value = word.slope + 1.0;
    if (!word.superpolynomial && br.lower_slope > br.upper_value + 0.25)
        throw InternalInvariantViolation(
            "summed-count exponent exceeds the word-complexity bound");
    return br;
}

} // namespace polyent
