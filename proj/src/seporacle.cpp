#include "polyent/seporacle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <thread>

#include "polyent/classify.hpp"
#include "polyent/errors.hpp"
#include "polyent/fixstruct.hpp"
#include "polyent/horseshoe.hpp"
#include "polyent/logistic.hpp"

namespace polyent {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Fisher-Yates with our own generator so the scan order is identical across
// platforms and standard libraries.
std::vector<std::uint32_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::uint32_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
    std::uint64_t state = seed;
    for (std::size_t i = n; i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

void validate_config(const OracleConfig& cfg) {
    if (cfg.epsilons.empty()) throw DomainError("oracle config needs at least one epsilon");
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
        if (!(cfg.epsilons[i] > 0.0))
            throw DomainError("oracle epsilons must be positive");
        if (i > 0 && !(cfg.epsilons[i] < cfg.epsilons[i - 1]))
            throw DomainError("oracle epsilons must be strictly decreasing");
    }
    if (cfg.horizons.empty()) throw DomainError("oracle config needs at least one horizon");
    for (std::size_t i = 0; i < cfg.horizons.size(); ++i) {
        if (cfg.horizons[i] == 0) throw DomainError("oracle horizons must be positive");
        if (i > 0 && cfg.horizons[i] <= cfg.horizons[i - 1])
            throw DomainError("oracle horizons must be strictly increasing");
    }
    if (cfg.grid_size == 0) throw DomainError("oracle grid size must be positive");
}

// Candidate pool for one epsilon. When eps is coarse enough that an
// eps-spaced ladder fits inside twice the grid resolution, the ladder
// replaces the uniform grid: its points are pairwise separated at every
// horizon, so greedy admission recovers the full spatial packing ~1/eps
// instead of the ~0.75/eps a random scan order parks at. At fine epsilons the
// uniform grid plus the problem seeds carry the estimate and the ladder would
// only add a flat spatial floor that drowns the growth fit.
std::vector<double> build_pool(const OracleProblem& problem, const OracleConfig& cfg,
                               double eps) {
    std::vector<double> pool;
    const double ladder_cells = std::ceil(1.0 / eps);
    if (ladder_cells <= 2.0 * static_cast<double>(cfg.grid_size)) {
        const double step = eps * (1.0 + 0x1p-10);
        for (double x = 0.0; x <= 1.0; x += step) pool.push_back(x);
    } else if (cfg.grid_size == 1) {
        pool.push_back(0.5);
    } else {
        for (unsigned i = 0; i < cfg.grid_size; ++i)
            pool.push_back(static_cast<double>(i) / static_cast<double>(cfg.grid_size - 1));
    }
    for (double s : problem.seeds) pool.push_back(clamp01(s));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

// traj is row-major: point i occupies [i*h_max, (i+1)*h_max).
void fill_trajectories(const OracleProblem& problem, const std::vector<double>& pool,
                       unsigned h_max, unsigned threads, std::vector<double>& traj) {
    traj.assign(pool.size() * h_max, 0.0);
    auto fill_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double x = pool[i];
            double* row = traj.data() + i * h_max;
            for (unsigned t = 0; t < h_max; ++t) {
                row[t] = x;
                x = problem.eval(x);
            }
        }
    };
    if (threads <= 1 || pool.size() < 256) {
        fill_range(0, pool.size());
        return;
    }
    std::vector<std::thread> workers;
    std::size_t chunk = (pool.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        std::size_t lo = std::min(pool.size(), static_cast<std::size_t>(w) * chunk);
        std::size_t hi = std::min(pool.size(), lo + chunk);
        if (lo < hi) workers.emplace_back(fill_range, lo, hi);
    }
    for (auto& w : workers) w.join();
}

bool separated(const double* a, const double* b, unsigned h, double eps) {
    for (unsigned t = 0; t < h; ++t) {
        if (std::abs(a[t] - b[t]) > eps) return true;
    }
    return false;
}

// Cumulative greedy chain for one epsilon: the admitted set survives as the
// horizon grows (separation only improves with n), so the counts row is
// nondecreasing by construction and each cell is backed by a genuine
// (n,eps)-separated set.
std::vector<std::size_t> run_chain(const std::vector<double>& traj, unsigned h_max,
                                   std::size_t pool_size,
                                   const std::vector<std::uint32_t>& perm,
                                   const std::vector<unsigned>& horizons, double eps) {
    std::vector<std::size_t> row;
    std::vector<std::uint32_t> admitted;
    std::vector<char> in(pool_size, 0);
    for (unsigned h : horizons) {
        for (std::uint32_t idx : perm) {
            if (in[idx]) continue;
            const double* cand = traj.data() + static_cast<std::size_t>(idx) * h_max;
            bool ok = true;
            for (std::uint32_t a : admitted) {
                if (!separated(cand, traj.data() + static_cast<std::size_t>(a) * h_max, h,
                               eps)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                admitted.push_back(idx);
                in[idx] = 1;
            }
        }
        row.push_back(admitted.size());
    }
    return row;
}

struct FitResult {
    double slope = 0.0;
    double residual = 0.0;
};

FitResult loglog_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t m = xs.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < m; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    FitResult r;
    if (den == 0.0) return r;
    r.slope = num / den;
    const double b = my - r.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = ys[i] - (r.slope * xs[i] + b);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / static_cast<double>(m));
    return r;
}

// Backward fan discipline shared by both map families: walk preimages of a
// few anchor points in the top covering interval, at each step prepending a
// symbol no larger than the current first symbol. The emitted points realize
// the nondecreasing-word separated families, which is where polynomial
// growth actually lives; an unshaped preimage tree would blow the budget on
// exponentially many redundant branches.
void fan_from_covering(const PLMap& g, const std::vector<RInterval>& boxes,
                       const OracleConfig& cfg, std::vector<double>& out) {
    const std::size_t l = boxes.size();
    std::vector<std::vector<char>> covers(l, std::vector<char>(l, 0));
    for (std::size_t s = 0; s < l; ++s) {
        RInterval img = image(g, boxes[s]);
        for (std::size_t t = 0; t < l; ++t)
            covers[s][t] = interval_subset(boxes[t], img) ? 1 : 0;
    }

    struct Node {
        Rational y;
        std::size_t sym;
    };
    std::vector<Node> level;
    const RInterval& top = boxes.back();
    const Rational width = top.hi - top.lo;
    for (unsigned j = 1; j <= cfg.fan_anchors; ++j) {
        Rational a = top.lo + width * Rational(j, static_cast<long long>(cfg.fan_anchors) + 1);
        out.push_back(a.to_double());
        level.push_back({a, l - 1});
    }

    std::size_t emitted = level.size();
    for (unsigned depth = 1; depth < cfg.horizons.back() && emitted < cfg.fan_budget;
         ++depth) {
        std::vector<Node> next;
        for (const Node& node : level) {
            for (std::size_t s = 0; s <= node.sym && emitted < cfg.fan_budget; ++s) {
                if (!covers[s][node.sym]) continue;
                auto x = leftmost_preimage(g, node.y, boxes[s]);
                if (!x) continue;
                out.push_back(x->to_double());
                next.push_back({*x, s});
                ++emitted;
            }
        }
        if (next.empty()) break;
        level = std::move(next);
    }
}

void plmap_fan_seeds(const PLMap& f, const OracleConfig& cfg, const Budget& budget,
                     std::vector<double>& out) {
    SharkovskiiType ty = sharkovskii_type(f, 5, budget);
    if (ty.cls != TypeClass::POWER_OF_TWO) return;
    PLMap g = ty.n == 0 ? f : iterate(f, 1u << ty.n, budget);
    CoverDAG dag = cover_dag(g, budget);
    ChainResult ch = max_chain(dag);
    if (ch.length == 0) return;
    std::vector<EssentialInterval> chain;
    chain.reserve(ch.chain.size());
    for (int idx : ch.chain) chain.push_back(dag.nodes[static_cast<std::size_t>(idx)]);
    HorseshoeCertificate cert = horseshoe_from_chain(g, chain, budget);
    fan_from_covering(g, cert.intervals, cfg, out);
}

}  // namespace

OracleProblem oracle_problem(const PLMap& f, const OracleConfig& cfg,
                             const Budget& budget) {
    validate_config(cfg);
    OracleProblem p;
    p.label = "plmap";

    auto xs = std::make_shared<std::vector<double>>();
    auto ys = std::make_shared<std::vector<double>>();
    for (const Breakpoint& b : f.breakpoints()) {
        xs->push_back(b.x.to_double());
        ys->push_back(b.y.to_double());
    }
    p.eval = [xs, ys](double x) {
        x = clamp01(x);
        std::size_t hi = static_cast<std::size_t>(
            std::upper_bound(xs->begin() + 1, xs->end(), x) - xs->begin());
        if (hi >= xs->size()) hi = xs->size() - 1;
        const double x0 = (*xs)[hi - 1], x1 = (*xs)[hi];
        const double y0 = (*ys)[hi - 1], y1 = (*ys)[hi];
        const double y = x1 == x0 ? y0 : y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
        return clamp01(y);
    };

    // Structural seeds are best effort: budget or verdict failures on the
    // exact side mean fewer seeds, never an oracle error.
    try {
        for (const EssentialInterval& e : essential_intervals(f).essential)
            p.seeds.push_back(clamp01(e.I.mid().to_double()));
    } catch (const std::runtime_error&) {
    }
    try {
        plmap_fan_seeds(f, cfg, budget, p.seeds);
    } catch (const std::runtime_error&) {
    }
    for (double& s : p.seeds) s = clamp01(s);
    return p;
}

OracleProblem oracle_problem_logistic(double lambda, const OracleConfig& cfg) {
    validate_config(cfg);
    if (!(lambda >= 0.0 && lambda <= 4.0))
        throw DomainError("logistic parameter must lie in [0,4]");
    OracleProblem p;
    p.label = "logistic";
    p.eval = [lambda](double x) { return clamp01(lambda * clamp01(x) * (1.0 - clamp01(x))); };

    Attractor att = detect_attracting_cycle(lambda);
    for (double v : att.orbit) p.seeds.push_back(clamp01(v));
    if (lambda <= 1.0) return p;

    // Backward fan over the two inverse branches, anchored just left of the
    // repelling fixed point. Symbol 1 is the branch that stays near the
    // repeller, symbol 0 the branch through the left half; nondecreasing
    // words 0^a 1^b are exactly the slow-passage orbits.
    const double rep = 1.0 - 1.0 / lambda;
    p.seeds.push_back(rep);
    struct Node {
        double y;
        int sym;
    };
    std::vector<Node> level;
    for (unsigned j = 1; j <= cfg.fan_anchors; ++j) {
        double a = rep * (1.0 - static_cast<double>(j) * 0x1p-10);
        p.seeds.push_back(a);
        level.push_back({a, 1});
    }
    std::size_t emitted = level.size();
    for (unsigned depth = 1; depth < cfg.horizons.back() && emitted < cfg.fan_budget;
         ++depth) {
        std::vector<Node> next;
        for (const Node& node : level) {
            const double disc = 1.0 - 4.0 * node.y / lambda;
            if (disc < 0.0) continue;
            const double r = std::sqrt(disc);
            const double x_minus = 0.5 * (1.0 - r);
            if (emitted < cfg.fan_budget && x_minus >= 0.0 && x_minus <= 1.0) {
                p.seeds.push_back(x_minus);
                next.push_back({x_minus, 0});
                ++emitted;
            }
            if (node.sym == 1) {
                const double x_plus = 0.5 * (1.0 + r);
                if (emitted < cfg.fan_budget && x_plus >= 0.0 && x_plus <= 1.0) {
                    p.seeds.push_back(x_plus);
                    next.push_back({x_plus, 1});
                    ++emitted;
                }
            }
        }
        if (next.empty()) break;
        level = std::move(next);
    }
    for (double& s : p.seeds) s = clamp01(s);
    return p;
}

SepTable sep_table(const OracleProblem& problem, const OracleConfig& cfg) {
    validate_config(cfg);
    if (!problem.eval) throw DomainError("oracle problem has no map");
    SepTable table;
    table.epsilons = cfg.epsilons;
    table.horizons = cfg.horizons;
    const unsigned h_max = cfg.horizons.back();
    std::vector<double> traj;
    for (std::size_t ei = 0; ei < cfg.epsilons.size(); ++ei) {
        const double eps = cfg.epsilons[ei];
        std::vector<double> pool = build_pool(problem, cfg, eps);
        std::uint64_t stream = cfg.seed ^ (0x9E3779B97F4A7C15ull * (ei + 1));
        std::vector<std::uint32_t> perm = shuffled_indices(pool.size(), stream);
        fill_trajectories(problem, pool, h_max, cfg.threads, traj);
        table.counts.push_back(
            run_chain(traj, h_max, pool.size(), perm, cfg.horizons, eps));
    }
    // A set separated at a coarser epsilon is separated at every finer one,
    // so each cell may inherit the best coarser count.
    for (std::size_t ei = 1; ei < table.counts.size(); ++ei) {
        for (std::size_t j = 0; j < table.counts[ei].size(); ++j) {
            table.counts[ei][j] =
                std::max(table.counts[ei][j], table.counts[ei - 1][j]);
        }
    }
    return table;
}

std::size_t sep_count(const OracleProblem& problem, unsigned n, double eps,
                      const OracleConfig& cfg) {
    if (n == 0) throw DomainError("separated-set horizon must be positive");
    if (!(eps > 0.0)) throw DomainError("separation threshold must be positive");
    OracleConfig restricted = cfg;
    restricted.epsilons.clear();
    for (double e : cfg.epsilons) {
        if (e > eps) restricted.epsilons.push_back(e);
    }
    restricted.epsilons.push_back(eps);
    restricted.horizons.clear();
    for (unsigned h : cfg.horizons) {
        if (h < n) restricted.horizons.push_back(h);
    }
    restricted.horizons.push_back(n);
    SepTable table = sep_table(problem, restricted);
    return table.counts.back().back();
}

SlopeEstimate slope_from_table(const SepTable& table) {
    if (table.horizons.size() < 4)
        throw InsufficientData("slope fit needs at least four horizons");
    if (table.counts.size() != table.epsilons.size())
        throw DomainError("separated-set table is malformed");
    std::vector<double> xs;
    xs.reserve(table.horizons.size());
    for (unsigned h : table.horizons) xs.push_back(std::log(static_cast<double>(h)));
    SlopeEstimate est;
    for (std::size_t ei = 0; ei < table.counts.size(); ++ei) {
        if (table.counts[ei].size() != table.horizons.size())
            throw DomainError("separated-set table is malformed");
        std::vector<double> ys;
        ys.reserve(xs.size());
        for (std::size_t c : table.counts[ei])
            ys.push_back(std::log(static_cast<double>(std::max<std::size_t>(c, 1))));
        FitResult fit = loglog_fit(xs, ys);
        est.per_epsilon.push_back({table.epsilons[ei], fit.slope, fit.residual});
    }
    est.headline = est.per_epsilon.back().slope;
    return est;
}

SlopeEstimate slope_estimate(const OracleProblem& problem, const OracleConfig& cfg) {
    return slope_from_table(sep_table(problem, cfg));
}

}  // namespace polyent
