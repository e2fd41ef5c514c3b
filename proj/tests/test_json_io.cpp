// Serialization round trips: maps, certificates, structure and report
// documents, table exports, file loading.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "polyent/classify.hpp"
#include "polyent/errors.hpp"
#include "polyent/families.hpp"
#include "polyent/fixstruct.hpp"
#include "polyent/horseshoe.hpp"
#include "polyent/json_io.hpp"

using namespace polyent;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path;
}

HorseshoeCertificate g2_certificate() {
    const PLMap g2 = make_gn(2);
    const auto dag = cover_dag(g2);
    const auto ch = max_chain(dag);
    std::vector<EssentialInterval> chain;
    for (int idx : ch.chain) chain.push_back(dag.nodes[static_cast<std::size_t>(idx)]);
    return horseshoe_from_chain(g2, chain);
}

} // namespace

TEST_CASE("maps round trip through json exactly") {
    const PLMap g2 = make_gn(2);
    const auto j = plmap_to_json(g2);
    REQUIRE(j.contains("breakpoints"));
    CHECK(j["breakpoints"].size() == 5);
    CHECK(j["breakpoints"][1]["x"] == "1/4");
    CHECK(j["breakpoints"][1]["y"] == "1");
    CHECK(plmap_from_json(j) == g2);

    CHECK(plmap_from_json(plmap_to_json(make_f0())) == make_f0());
    CHECK(plmap_from_json(plmap_to_json(PLMap::identity())) == PLMap::identity());
}

TEST_CASE("malformed map documents are rejected") {
    auto doc = [](const char* text) { return nlohmann::json::parse(text); };
    CHECK_THROWS_AS(plmap_from_json(doc("{}")), ParseError);
    CHECK_THROWS_AS(plmap_from_json(doc(R"({"breakpoints": 7})")), ParseError);
    CHECK_THROWS_AS(plmap_from_json(doc(R"({"breakpoints": [{"x": "0"}]})")),
                    ParseError); // missing y
    CHECK_THROWS_AS(
        plmap_from_json(doc(
            R"({"breakpoints": [{"x": "zero", "y": "0"}, {"x": "1", "y": "1"}]})")),
        ParseError); // bad rational
    CHECK_THROWS_AS(
        plmap_from_json(doc(
            R"({"breakpoints": [{"x": "0", "y": "3"}, {"x": "1", "y": "1"}]})")),
        DomainError); // value outside [0,1]
}

TEST_CASE("certificates round trip, with and without escape data") {
    const auto cert = g2_certificate();
    const auto j = certificate_to_json(cert);
    CHECK(j["iterate"] == 1);
    CHECK(j["witness"] == "3/4");
    REQUIRE(j["intervals"].size() == 2);
    CHECK(j["intervals"][0][0] == "0");
    CHECK(j["intervals"][0][1] == "1/4");
    CHECK_FALSE(j.contains("escape"));

    const auto back = certificate_from_json(j);
    CHECK(back.intervals == cert.intervals);
    CHECK(back.k == cert.k);
    CHECK(back.witness == cert.witness);
    CHECK_FALSE(back.escape.has_value());

    HorseshoeCertificate tail = cert;
    tail.escape = EscapeData{3, 2};
    const auto jt = certificate_to_json(tail);
    CHECK(jt["escape"]["steps"] == 3);
    CHECK(jt["escape"]["period"] == 2);
    const auto back2 = certificate_from_json(jt);
    REQUIRE(back2.escape.has_value());
    CHECK(back2.escape->steps == 3);
    CHECK(back2.escape->period == 2);
}

TEST_CASE("malformed certificates are rejected") {
    const auto good = certificate_to_json(g2_certificate());

    auto no_witness = good;
    no_witness.erase("witness");
    CHECK_THROWS_AS(certificate_from_json(no_witness), ParseError);

    auto bad_iterate = good;
    bad_iterate["iterate"] = -2;
    CHECK_THROWS_AS(certificate_from_json(bad_iterate), ParseError);

    auto bad_interval = good;
    bad_interval["intervals"][0] = "oops";
    CHECK_THROWS_AS(certificate_from_json(bad_interval), ParseError);

    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::array()), ParseError);
}

TEST_CASE("structure documents carry the full decomposition") {
    const auto j = structure_to_json(make_gn(2));
    CHECK(j["fixed_components"].size() == 3);
    REQUIRE(j["essential_intervals"].size() == 2);
    CHECK(j["essential_intervals"][0]["orientation"] == "up");
    CHECK(j["essential_intervals"][0]["source"] == "0");
    CHECK(j["essential_intervals"][1]["source"] == "1/2");
    CHECK(j["orbit_closures"].size() == 2);
    CHECK(j["orbit_closures"][0]["far_end"] == "1");
    CHECK(j["orbit_closures"][0]["attained"] == true);
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0][0] == 0);
    CHECK(j["edges"][0][1] == 1);
    CHECK(j["max_chain"]["length"] == 2);
    CHECK(j["max_chain"]["nodes"].size() == 2);
}

TEST_CASE("entropy reports serialize by kind") {
    const auto fin = entropy_report_to_json(polynomial_entropy(make_gn(2)));
    CHECK(fin["kind"] == "finite");
    CHECK(fin["value"] == 2);
    CHECK(fin["type"]["class"] == "power_of_two");
    CHECK(fin["type"]["n"] == 0);
    CHECK(fin["reduction_power"] == 1);
    CHECK(fin["chain"].size() == 2);

    const PLMap tent({{Rational(0), Rational(0)},
                      {Rational(1, 2), Rational(1)},
                      {Rational(1), Rational(0)}});
    const auto inf = entropy_report_to_json(polynomial_entropy(tent));
    CHECK(inf["kind"] == "infinite");
    CHECK_FALSE(inf.contains("value"));
    CHECK(inf["type"]["class"] == "beyond_all_powers");
    CHECK(inf["type"]["violating_period"] == 3);
}

TEST_CASE("table exports") {
    SepTable t;
    t.epsilons = {0.05, 0.01};
    t.horizons = {4, 8, 16};
    t.counts = {{3, 4, 5}, {6, 7, 8}};

    const auto j = sep_table_to_json(t);
    CHECK(j["epsilons"].size() == 2);
    CHECK(j["horizons"].size() == 3);
    CHECK(j["counts"][1][2] == 8);

    const auto csv = sep_table_csv(t);
    CHECK(csv.rfind("epsilon,n,count\n", 0) == 0);
    CHECK(csv.find("0.05,4,3\n") != std::string::npos);
    CHECK(csv.find("0.01,16,8\n") != std::string::npos);
    // header plus one line per cell
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);

    SlopeEstimate est;
    est.headline = 1.5;
    est.per_epsilon = {{0.05, 1.2, 0.01}, {0.01, 1.5, 0.02}};
    const auto js = slope_to_json(est);
    CHECK(js["headline"] == 1.5);
    REQUIRE(js["per_epsilon"].size() == 2);
    CHECK(js["per_epsilon"][1]["slope"] == 1.5);
}

TEST_CASE("documents load from disk") {
    const auto map_path =
        write_temp("roundtrip_map.json", plmap_to_json(make_gn(2)).dump());
    CHECK(load_plmap(map_path.string()) == make_gn(2));

    const auto cert = g2_certificate();
    const auto cert_path =
        write_temp("roundtrip_cert.json", certificate_to_json(cert).dump());
    const auto loaded = load_certificate(cert_path.string());
    CHECK(loaded.intervals == cert.intervals);
    CHECK(loaded.witness == cert.witness);

    const auto garbage_path = write_temp("garbage.json", "not json at all {{{");
    CHECK_THROWS_AS(load_json(garbage_path.string()), ParseError);
    CHECK_THROWS_AS(load_plmap("/nonexistent/nowhere.json"), ParseError);

    std::remove(map_path.string().c_str());
    std::remove(cert_path.string().c_str());
    std::remove(garbage_path.string().c_str());
}
