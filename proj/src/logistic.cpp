#include "polyent/logistic.hpp"

#include <cmath>

#include "polyent/errors.hpp"

namespace polyent {

Attractor detect_attracting_cycle(double lambda, const LogisticConfig& cfg) {
    if (lambda < 0.0 || lambda > 4.0)
        throw DomainError("lambda outside [0, 4]");
    auto f = [lambda](double x) { return lambda * x * (1.0 - x); };

    double x = 0.5;
    for (std::uint32_t i = 0; i < cfg.burn_in; ++i) x = f(x);

    // one stretch of trajectory long enough for the largest period test
    const unsigned max_p = 1u << cfg.max_period_exp;
    std::vector<double> traj(cfg.window + max_p);
    traj[0] = x;
    for (std::size_t i = 1; i < traj.size(); ++i) traj[i] = f(traj[i - 1]);

    Attractor a;
    for (unsigned n = 0; n <= cfg.max_period_exp; ++n) {
        const unsigned p = 1u << n;
        double worst = 0.0;
        for (std::uint32_t t = 0; t < cfg.window; ++t)
            worst = std::max(worst, std::fabs(traj[t + p] - traj[t]));
        if (worst < cfg.tol) {
            a.kind = (lambda <= 1.0) ? AttractorKind::FIXED_AT_ZERO
                                     : AttractorKind::CYCLE;
            a.period_exp = n;
            a.residual = worst;
            a.orbit.assign(traj.begin(), traj.begin() + p);
            return a;
        }
    }
    a.kind = AttractorKind::UNDETECTED;
    return a;
}

LogisticVerdict logistic_hpol(double lambda, const LogisticConfig& cfg) {
    LogisticVerdict v;
    v.lambda = lambda;
    if (lambda >= cfg.lambda_infinity) {
        v.kind = EntropyValue::INFINITE;
        v.note = "at or beyond the period-doubling limit";
        return v;
    }
    v.attractor = detect_attracting_cycle(lambda, cfg);
    switch (v.attractor.kind) {
    case AttractorKind::FIXED_AT_ZERO:
        v.kind = EntropyValue::FINITE;
        v.value = 0;
        return v;
    case AttractorKind::CYCLE:
        v.kind = EntropyValue::FINITE;
        v.value = static_cast<int>(v.attractor.period_exp) + 1;
        return v;
    case AttractorKind::UNDETECTED:
        v.kind = EntropyValue::UNKNOWN;
        v.note = "no attracting power-of-two cycle detected within limits";
        return v;
    }
    return v;
}

LapBoundCheck lap_bound_check(const PLMap& f, unsigned n_max, const Budget& budget) {
    if (n_max < 2) throw DomainError("need n_max >= 2");
    LapBoundCheck out;
    out.report = polynomial_entropy(f, 5, budget);
    if (out.report.kind != EntropyValue::FINITE)
        throw DomainError("lap bound check needs a finite decided entropy");

    const LapProfile laps = lap_numbers(f, n_max, budget);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (unsigned n = 1; n <= n_max; ++n) {
        const double xl = std::log(static_cast<double>(n));
        const double yl = std::log(static_cast<double>(laps.counts[n - 1]));
        sx += xl;
        sy += yl;
        sxx += xl * xl;
        sxy += xl * yl;
    }
    const double num = n_max * sxy - sx * sy;
    const double den = n_max * sxx - sx * sx;
    out.slope = den == 0.0 ? 0.0 : num / den;
    out.ok = out.report.value <= 1.0 + out.slope + 0.3;
    return out;
}

} // namespace polyent
