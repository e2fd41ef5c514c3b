#include "polyent/json_io.hpp"

#include <fstream>
#include <sstream>

#include "polyent/errors.hpp"

namespace polyent {

namespace {

Rational rat_field(const nlohmann::json& j, const char* what) {
    if (!j.is_string())
        throw ParseError(std::string(what) + " must be a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

nlohmann::json interval_pair(const RInterval& I) {
    return nlohmann::json::array({I.lo.str(), I.hi.str()});
}

const char* orientation_name(Orientation o) {
    return o == Orientation::UP ? "up" : "down";
}

nlohmann::json essential_to_json(const EssentialInterval& e) {
    return {{"a", e.a().str()},
            {"b", e.b().str()},
            {"orientation", orientation_name(e.dir)},
            {"source", e.source.str()}};
}

}  // namespace

nlohmann::json plmap_to_json(const PLMap& f) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Breakpoint& b : f.breakpoints())
        pts.push_back({{"x", b.x.str()}, {"y", b.y.str()}});
    return {{"breakpoints", std::move(pts)}};
}

PLMap plmap_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j["breakpoints"].is_array())
        throw ParseError("map document needs a breakpoints array");
    std::vector<Breakpoint> pts;
    for (const auto& p : j["breakpoints"]) {
        if (!p.is_object() || !p.contains("x") || !p.contains("y"))
            throw ParseError("each breakpoint needs x and y");
        pts.push_back({rat_field(p["x"], "breakpoint x"), rat_field(p["y"], "breakpoint y")});
    }
    return PLMap(std::move(pts));
}

nlohmann::json certificate_to_json(const HorseshoeCertificate& cert) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const RInterval& I : cert.intervals) intervals.push_back(interval_pair(I));
    nlohmann::json j = {{"iterate", cert.k},
                        {"intervals", std::move(intervals)},
                        {"witness", cert.witness.str()}};
    if (cert.escape)
        j["escape"] = {{"steps", cert.escape->steps}, {"period", cert.escape->period}};
    return j;
}

HorseshoeCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("iterate") || !j.contains("intervals") ||
        !j.contains("witness"))
        throw ParseError("certificate needs iterate, intervals and witness");
    if (!j["iterate"].is_number_unsigned())
        throw ParseError("certificate iterate must be a nonnegative integer");
    HorseshoeCertificate cert;
    cert.k = j["iterate"].get<unsigned>();
    if (!j["intervals"].is_array())
        throw ParseError("certificate intervals must be an array");
    for (const auto& p : j["intervals"]) {
        if (!p.is_array() || p.size() != 2)
            throw ParseError("each certificate interval is a pair of rationals");
        Rational lo = rat_field(p[0], "interval endpoint");
        Rational hi = rat_field(p[1], "interval endpoint");
        cert.intervals.push_back(RInterval{lo, hi, true, true});
    }
    cert.witness = rat_field(j["witness"], "witness");
    if (j.contains("escape")) {
        const auto& e = j["escape"];
        if (!e.is_object() || !e.contains("steps") || !e.contains("period") ||
            !e["steps"].is_number_unsigned() || !e["period"].is_number_unsigned())
            throw ParseError("escape block needs unsigned steps and period");
        cert.escape = EscapeData{e["steps"].get<unsigned>(), e["period"].get<unsigned>()};
    }
    return cert;
}

nlohmann::json structure_to_json(const PLMap& f, const Budget& budget) {
    CoverDAG dag = cover_dag(f, budget);
    ChainResult chain = max_chain(dag);
    EssentialDecomposition dec = essential_intervals(f);

    nlohmann::json fixed = nlohmann::json::array();
    for (const RInterval& c : dec.fixed_components) fixed.push_back(interval_pair(c));

    nlohmann::json essential = nlohmann::json::array();
    for (const EssentialInterval& e : dag.nodes) essential.push_back(essential_to_json(e));

    nlohmann::json orbits = nlohmann::json::array();
    for (const OrbitClosure& o : dag.orbits)
        orbits.push_back({{"far_end", o.far_end.str()}, {"attained", o.attained}});

    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [i, j] : dag.edges) edges.push_back(nlohmann::json::array({i, j}));

    return {{"fixed_components", std::move(fixed)},
            {"essential_intervals", std::move(essential)},
            {"orbit_closures", std::move(orbits)},
            {"edges", std::move(edges)},
            {"max_chain", {{"length", chain.length}, {"nodes", chain.chain}}}};
}

nlohmann::json entropy_report_to_json(const EntropyReport& rep) {
    const char* kind = rep.kind == EntropyValue::FINITE     ? "finite"
                       : rep.kind == EntropyValue::INFINITE ? "infinite"
                                                            : "unknown";
    const char* cls = rep.type.cls == TypeClass::POWER_OF_TWO ? "power_of_two"
                      : rep.type.cls == TypeClass::A2I        ? "beyond_all_powers"
                                                              : "unknown";
    nlohmann::json type = {{"class", cls},
                           {"n", rep.type.n},
                           {"powers_exhausted", rep.type.powers_exhausted}};
    if (rep.type.violating_period) type["violating_period"] = *rep.type.violating_period;
    if (!rep.type.note.empty()) type["note"] = rep.type.note;

    nlohmann::json chain = nlohmann::json::array();
    for (const EssentialInterval& e : rep.chain) chain.push_back(essential_to_json(e));

    nlohmann::json j = {{"kind", kind},
                        {"type", std::move(type)},
                        {"reduction_power", rep.reduction_power},
                        {"chain", std::move(chain)}};
    if (rep.kind == EntropyValue::FINITE) j["value"] = rep.value;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

nlohmann::json slope_to_json(const SlopeEstimate& est) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& e : est.per_epsilon)
        per.push_back(
            {{"epsilon", e.epsilon}, {"slope", e.slope}, {"residual", e.residual}});
    return {{"headline", est.headline}, {"per_epsilon", std::move(per)}};
}

nlohmann::json sep_table_to_json(const SepTable& table) {
    return {{"epsilons", table.epsilons},
            {"horizons", table.horizons},
            {"counts", table.counts}};
}

std::string sep_table_csv(const SepTable& table) {
    std::ostringstream out;
    out << "epsilon,n,count\n";
    for (std::size_t ei = 0; ei < table.epsilons.size(); ++ei) {
        for (std::size_t j = 0; j < table.horizons.size(); ++j) {
            out << table.epsilons[ei] << ',' << table.horizons[j] << ','
                << table.counts[ei][j] << '\n';
        }
    }
    return out.str();
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

PLMap load_plmap(const std::string& path) { return plmap_from_json(load_json(path)); }

HorseshoeCertificate load_certificate(const std::string& path) {
    return certificate_from_json(load_json(path));
}

}  // namespace polyent
