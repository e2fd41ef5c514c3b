// polyent: exact polynomial entropy of piecewise-linear interval maps, with
// horseshoe certificates, a floating separated-set estimator, subshift
// complexity tools and the logistic verdict table.
//
// Exit codes: 0 decided, 2 undecided within budget, 1 any error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyent/classify.hpp"
#include "polyent/errors.hpp"
#include "polyent/families.hpp"
#include "polyent/horseshoe.hpp"
#include "polyent/json_io.hpp"
#include "polyent/logistic.hpp"
#include "polyent/seporacle.hpp"
#include "polyent/symbolic.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct GlobalOpts {
    std::string out;
    std::uint64_t seed = 1;
    int n_budget = 5;
    unsigned threads = 1;
    std::string format = "json";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw polyent::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// FNV-1a, enough to tie a report to its input bytes.
std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json parse_json_text(const std::string& text, const std::string& name) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw polyent::ParseError(name + ": " + e.what());
    }
}

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw polyent::ParseError("cannot write " + g.out);
    out << text;
}

struct ReportBuilder {
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<std::string> command;

    void add_input(const std::string& path, const std::string& bytes) {
        inputs[path] = digest(bytes);
    }
    nlohmann::json wrap(nlohmann::json payload, const GlobalOpts& g) const {
        return {{"tool", "polyent"}, {"version", kVersion}, {"command", command},
                {"seed", g.seed},    {"inputs", inputs},    {"report", std::move(payload)}};
    }
};

polyent::PLMap map_from_file(const std::string& path, ReportBuilder& rb) {
    std::string bytes = read_file(path);
    rb.add_input(path, bytes);
    return polyent::plmap_from_json(parse_json_text(bytes, path));
}

std::string sequence_from_file(const std::string& path, ReportBuilder& rb) {
    std::string bytes = read_file(path);
    rb.add_input(path, bytes);
    std::string seq;
    for (char c : bytes) {
        if (c == '\n' || c == '\r') break;
        if (c < '0' || c > '9')
            throw polyent::ParseError(path + ": sequence symbols must be digits");
        seq.push_back(c);
    }
    if (seq.empty()) throw polyent::ParseError(path + ": empty sequence");
    return seq;
}

const char* failure_name(polyent::VerifyFailure f) {
    using polyent::VerifyFailure;
    switch (f) {
        case VerifyFailure::NONE: return "None";
        case VerifyFailure::MALFORMED: return "Malformed";
        case VerifyFailure::DISJOINTNESS: return "DisjointnessFailure";
        case VerifyFailure::COVERING: return "CoveringFailure";
        case VerifyFailure::COVERING_2K: return "DoubledIterateCoveringFailure";
        case VerifyFailure::WITNESS: return "WitnessFailure";
        case VerifyFailure::BUDGET: return "BudgetExceeded";
    }
    return "Unknown";
}

void require_json_format(const GlobalOpts& g, const std::string& cmd) {
    if (g.format != "json")
        throw CLI::ValidationError(cmd + " only emits json; drop --format " + g.format);
}

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

int run_hpol(const GlobalOpts& g, const std::string& map_path) {
    ReportBuilder rb;
    rb.command = {"hpol", map_path};
    require_json_format(g, "hpol");
    polyent::PLMap f = map_from_file(map_path, rb);
    polyent::EntropyReport rep =
        polyent::polynomial_entropy(f, static_cast<unsigned>(g.n_budget));
    write_output(g, rb.wrap(polyent::entropy_report_to_json(rep), g).dump(2));
    return rep.kind == polyent::EntropyValue::UNKNOWN ? kExitUnknown : kExitOk;
}

int run_structure(const GlobalOpts& g, const std::string& map_path, unsigned power) {
    ReportBuilder rb;
    rb.command = {"structure", map_path, "--power", std::to_string(power)};
    require_json_format(g, "structure");
    polyent::PLMap f = map_from_file(map_path, rb);
    polyent::PLMap target = power == 1 ? f : polyent::iterate(f, power);
    write_output(g, rb.wrap(polyent::structure_to_json(target), g).dump(2));
    return kExitOk;
}

// Emits the bare certificate document (no report envelope) so the output
// feeds straight back into `verify`, like `family` and `double` artifacts.
int run_horseshoe(const GlobalOpts& g, const std::string& map_path, unsigned power,
                  int cycle) {
    ReportBuilder rb;
    require_json_format(g, "horseshoe");
    polyent::PLMap f = map_from_file(map_path, rb);
    polyent::HorseshoeCertificate cert = [&] {
        if (cycle >= 0)
            return polyent::horseshoe_from_simple_cycle(f, static_cast<unsigned>(cycle));
        polyent::PLMap target = power == 1 ? f : polyent::iterate(f, power);
        polyent::CoverDAG dag = polyent::cover_dag(target);
        polyent::ChainResult chain = polyent::max_chain(dag);
        std::vector<polyent::EssentialInterval> nodes;
        for (int idx : chain.chain) nodes.push_back(dag.nodes[static_cast<std::size_t>(idx)]);
        return polyent::horseshoe_from_chain(target, nodes);
    }();
    write_output(g, polyent::certificate_to_json(cert).dump(2));
    return kExitOk;
}

int run_verify(const GlobalOpts& g, const std::string& map_path,
               const std::string& cert_path, unsigned power) {
    ReportBuilder rb;
    rb.command = {"verify", map_path, cert_path, "--power", std::to_string(power)};
    require_json_format(g, "verify");
    polyent::PLMap f = map_from_file(map_path, rb);
    std::string cert_bytes = read_file(cert_path);
    rb.add_input(cert_path, cert_bytes);
    polyent::HorseshoeCertificate cert =
        polyent::certificate_from_json(parse_json_text(cert_bytes, cert_path));
    polyent::PLMap target = power == 1 ? f : polyent::iterate(f, power);
    polyent::VerifyResult res = polyent::verify_horseshoe(target, cert);
    nlohmann::json payload = {{"ok", res.ok},
                              {"failure", failure_name(res.failure)},
                              {"detail", res.detail},
                              {"size", cert.intervals.size()}};
    write_output(g, rb.wrap(std::move(payload), g).dump(2));
    return res.ok ? kExitOk : kExitError;
}

int run_family(const GlobalOpts& g, const std::string& kind, int n) {
    require_json_format(g, "family");
    polyent::PLMap f = [&] {
        if (kind == "f0") return polyent::make_f0();
        if (kind == "plateau") return polyent::make_plateau();
        if (kind == "identity") return polyent::PLMap::identity();
        if (kind == "gn") {
            if (n < 0) throw CLI::ValidationError("--kind gn needs --n");
            return polyent::make_gn(static_cast<unsigned>(n));
        }
        throw CLI::ValidationError("unknown family kind: " + kind);
    }();
    write_output(g, polyent::plmap_to_json(f).dump(2));
    return kExitOk;
}

int run_double(const GlobalOpts& g, const std::string& map_path, unsigned times) {
    require_json_format(g, "double");
    ReportBuilder rb;
    polyent::PLMap f = map_from_file(map_path, rb);
    write_output(g, polyent::plmap_to_json(polyent::double_map(f, times)).dump(2));
    return kExitOk;
}

int run_sep_estimate(const GlobalOpts& g, const std::string& map_path,
                     double logistic_lambda, bool have_lambda,
                     polyent::OracleConfig cfg, unsigned n_max) {
    ReportBuilder rb;
    rb.command = {"sep-estimate"};
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    if (n_max > 0) {
        cfg.horizons.clear();
        for (unsigned h = n_max / 16; h <= n_max && cfg.horizons.size() < 5; h *= 2) {
            if (h >= 2) cfg.horizons.push_back(h);
        }
        if (cfg.horizons.empty() || cfg.horizons.back() != n_max)
            cfg.horizons.push_back(std::max(2u, n_max));
    }

    polyent::OracleProblem problem = [&] {
        if (have_lambda) {
            rb.command.push_back("--logistic");
            rb.command.push_back(format_double(logistic_lambda));
            return polyent::oracle_problem_logistic(logistic_lambda, cfg);
        }
        rb.command.push_back(map_path);
        polyent::PLMap f = map_from_file(map_path, rb);
        return polyent::oracle_problem(f, cfg);
    }();

    polyent::SepTable table = polyent::sep_table(problem, cfg);
    if (g.format == "csv") {
        write_output(g, polyent::sep_table_csv(table));
        return kExitOk;
    }
    nlohmann::json payload = {{"label", problem.label},
                              {"grid_size", cfg.grid_size},
                              {"table", polyent::sep_table_to_json(table)}};
    if (cfg.horizons.size() >= 4)
        payload["slopes"] = polyent::slope_to_json(polyent::slope_from_table(table));
    write_output(g, rb.wrap(std::move(payload), g).dump(2));
    return kExitOk;
}

int run_subshift(const GlobalOpts& g, const std::string& input, unsigned n_max) {
    ReportBuilder rb;
    rb.command = {"subshift", "--input", input, "--n-max", std::to_string(n_max)};
    require_json_format(g, "subshift");
    std::string seq = sequence_from_file(input, rb);
    polyent::ComplexityProfile prof = polyent::complexity(seq, n_max);
    polyent::GrowthEstimate est = polyent::subshift_hpol_estimate(prof);
    nlohmann::json payload = {{"n_max", prof.n_max},
                              {"reliable_n", prof.reliable_n},
                              {"low_confidence", prof.low_confidence},
                              {"counts", prof.counts},
                              {"estimate",
                               {{"slope", est.slope},
                                {"residual", est.residual},
                                {"superpolynomial", est.superpolynomial},
                                {"fit_lo", est.fit_lo},
                                {"fit_hi", est.fit_hi}}}};
    write_output(g, rb.wrap(std::move(payload), g).dump(2));
    return kExitOk;
}

int run_dendrite(const GlobalOpts& g, const std::string& input, unsigned n_max) {
    ReportBuilder rb;
    rb.command = {"dendrite-bound", "--input", input, "--n-max", std::to_string(n_max)};
    require_json_format(g, "dendrite-bound");
    std::string seq = sequence_from_file(input, rb);
    polyent::ComplexityProfile prof = polyent::complexity(seq, n_max);
    polyent::DendriteBracket br = polyent::dendrite_hpol_bracket(prof);
    nlohmann::json payload = {{"lower_slope", br.lower_slope},
                              {"upper_value", br.upper_value}};
    write_output(g, rb.wrap(std::move(payload), g).dump(2));
    return kExitOk;
}

int run_logistic(const GlobalOpts& g, double lambda, bool have_lambda,
                 const std::string& sweep) {
    if (!sweep.empty()) {
        double a = 0, b = 0, step = 0;
        if (std::sscanf(sweep.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0)
            throw CLI::ValidationError("--sweep expects a:b:step with step > 0");
        std::ostringstream csv;
        csv << "lambda,period,h_pol\n";
        for (double lam = a; lam <= b + step * 0.5; lam += step) {
            polyent::LogisticVerdict v = polyent::logistic_hpol(lam);
            unsigned period = 0;
            if (v.attractor.kind == polyent::AttractorKind::FIXED_AT_ZERO) period = 1;
            if (v.attractor.kind == polyent::AttractorKind::CYCLE)
                period = 1u << v.attractor.period_exp;
            csv << format_double(lam) << ',' << period << ',';
            if (v.kind == polyent::EntropyValue::FINITE)
                csv << v.value;
            else
                csv << (v.kind == polyent::EntropyValue::INFINITE ? "inf" : "unknown");
            csv << '\n';
        }
        write_output(g, csv.str());
        return kExitOk;
    }
    if (!have_lambda) throw CLI::ValidationError("logistic needs --lambda or --sweep");
    require_json_format(g, "logistic");
    ReportBuilder rb;
    rb.command = {"logistic", "--lambda", format_double(lambda)};
    polyent::LogisticVerdict v = polyent::logistic_hpol(lambda);
    const char* kind = v.kind == polyent::EntropyValue::FINITE     ? "finite"
                       : v.kind == polyent::EntropyValue::INFINITE ? "infinite"
                                                                   : "unknown";
    nlohmann::json payload = {{"lambda", v.lambda},
                              {"kind", kind},
                              {"attractor",
                               {{"detected", v.attractor.kind != polyent::AttractorKind::UNDETECTED},
                                {"period_exp", v.attractor.period_exp},
                                {"residual", v.attractor.residual}}}};
    if (v.kind == polyent::EntropyValue::FINITE) payload["value"] = v.value;
    if (!v.note.empty()) payload["note"] = v.note;
    write_output(g, rb.wrap(std::move(payload), g).dump(2));
    return v.kind == polyent::EntropyValue::UNKNOWN ? kExitUnknown : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial entropy of piecewise-linear interval maps"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    GlobalOpts g;
    app.add_option("--out,-o", g.out, "write output to a file instead of stdout");
    app.add_option("--seed", g.seed, "oracle RNG seed");
    app.add_option("--budget", g.n_budget, "power-of-two depth budget for type detection")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", g.threads, "worker threads for trajectory evaluation");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string map_path, cert_path, kind, input, sweep;
    unsigned power = 1, times = 1, n_max_seq = 64, n_max_oracle = 0;
    int gn_n = -1, cycle = -1;
    double lambda = 0.0;
    polyent::OracleConfig oracle_defaults;

    auto* hpol = app.add_subcommand("hpol", "exact polynomial entropy of a map file");
    hpol->add_option("map", map_path, "PL map JSON file")->required();

    auto* structure =
        app.add_subcommand("structure", "fixed-point structure, covering DAG, longest chain");
    structure->add_option("map", map_path)->required();
    structure->add_option("--power", power, "analyze this iterate of the map");

    auto* horseshoe =
        app.add_subcommand("horseshoe", "build a one-way horseshoe certificate");
    horseshoe->add_option("map", map_path)->required();
    horseshoe->add_option("--power", power, "build from this iterate's chain");
    horseshoe->add_option("--cycle", cycle,
                          "build from a simple 2^n cycle instead (value is n)");

    auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
    verify->add_option("map", map_path)->required();
    verify->add_option("cert", cert_path)->required();
    verify->add_option("--power", power, "verify against this iterate of the map");

    auto* family = app.add_subcommand("family", "emit a named family map as JSON");
    family->add_option("--kind", kind, "f0 | gn | plateau | identity")->required();
    family->add_option("--n", gn_n, "index for gn");

    auto* dbl = app.add_subcommand("double", "apply the period-doubling operator");
    dbl->add_option("map", map_path)->required();
    dbl->add_option("-k,--times", times, "how many times to apply");

    auto* sep = app.add_subcommand("sep-estimate",
                                   "greedy separated-set counts and growth slopes");
    auto* sep_map = sep->add_option("map", map_path, "PL map JSON file");
    auto* sep_lam = sep->add_option("--logistic", lambda, "logistic parameter instead");
    sep->add_option("--eps", oracle_defaults.epsilons, "epsilon schedule, decreasing");
    sep->add_option("--horizons", oracle_defaults.horizons, "horizon schedule, increasing");
    sep->add_option("--n-max", n_max_oracle, "replace horizons by a dyadic ladder up to n");
    sep->add_option("--grid", oracle_defaults.grid_size, "candidate grid size");
    sep->add_option("--anchors", oracle_defaults.fan_anchors, "backward-fan anchor count");
    sep->add_option("--fan-budget", oracle_defaults.fan_budget, "backward-fan node budget");
    sep_map->excludes(sep_lam);

    auto* subshift = app.add_subcommand("subshift", "word complexity of a symbol sequence");
    subshift->add_option("--input", input, "sequence file, one line of digits")->required();
    subshift->add_option("--n-max", n_max_seq, "largest factor length");

    auto* dendrite = app.add_subcommand(
        "dendrite-bound", "entropy bracket for the arc-chain extension of a sequence");
    dendrite->add_option("--input", input)->required();
    dendrite->add_option("--n-max", n_max_seq, "largest factor length");

    auto* logistic = app.add_subcommand("logistic", "verdict table for the quadratic family");
    auto* log_lam = logistic->add_option("--lambda", lambda, "single parameter verdict");
    logistic->add_option("--sweep", sweep, "a:b:step sweep, CSV output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hpol->parsed()) return run_hpol(g, map_path);
        if (structure->parsed()) return run_structure(g, map_path, power);
        if (horseshoe->parsed()) return run_horseshoe(g, map_path, power, cycle);
        if (verify->parsed()) return run_verify(g, map_path, cert_path, power);
        if (family->parsed()) return run_family(g, kind, gn_n);
        if (dbl->parsed()) return run_double(g, map_path, times);
        if (sep->parsed()) {
            if (sep_map->count() == 0 && sep_lam->count() == 0)
                throw CLI::ValidationError("sep-estimate needs a map file or --logistic");
            return run_sep_estimate(g, map_path, lambda, sep_lam->count() > 0,
                                    oracle_defaults, n_max_oracle);
        }
        if (subshift->parsed()) return run_subshift(g, input, n_max_seq);
        if (dendrite->parsed()) return run_dendrite(g, input, n_max_seq);
        if (logistic->parsed())
            return run_logistic(g, lambda, log_lam->count() > 0, sweep);
        std::cerr << "no subcommand\n";
        return kExitError;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
