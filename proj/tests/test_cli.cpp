// End-to-end checks of the command-line binary: artifact round trips,
// report envelopes, exit codes, and determinism of the estimator runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "polyent/families.hpp"
#include "polyent/json_io.hpp"
#include "polyent/plmap.hpp"

using namespace polyent;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("polyent_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_fixture(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = scratch_dir() / ("out_" + std::to_string(counter) + ".txt");
    fs::path err = scratch_dir() / ("err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd = std::string("\"") + POLYENT_CLI_PATH + "\" " + args + " > " +
                      out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

fs::path map_fixture(const std::string& name, const PLMap& f) {
    return write_fixture(name, plmap_to_json(f).dump(2));
}

// Fibonacci word prefix (0 -> 01, 1 -> 0), the standard aperiodic
// low-complexity input.
std::string fibonacci_word(std::size_t len) {
    std::string w = "0";
    while (w.size() < len) {
        std::string next;
        for (char c : w) next += (c == '0') ? "01" : "0";
        w = std::move(next);
    }
    return w.substr(0, len);
}

} // namespace

TEST_CASE("family subcommand emits the named maps verbatim") {
    auto r = run_cli("family --kind gn --n 2");
    CHECK(r.exit_code == 0);
    CHECK(parse(r.out) == plmap_to_json(make_gn(2)));

    auto id = run_cli("family --kind identity");
    CHECK(id.exit_code == 0);
    CHECK(parse(id.out) == plmap_to_json(PLMap::identity()));

    CHECK(run_cli("family --kind gn").exit_code == 1);
    CHECK(run_cli("family --kind bogus").exit_code == 1);
}

TEST_CASE("hpol reports exact entropy with a full envelope") {
    fs::path g2 = map_fixture("g2.json", make_gn(2));
    auto r = run_cli("hpol " + g2.string());
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse(r.out);
    CHECK(j["tool"] == "polyent");
    CHECK(j["seed"] == 1);
    CHECK(j["inputs"].contains(g2.string()));
    CHECK(j["report"]["kind"] == "finite");
    CHECK(j["report"]["value"] == 2);
    CHECK(j["report"]["type"]["class"] == "power_of_two");
}

TEST_CASE("hpol detects the tent horseshoe even with budget zero") {
    fs::path tent = map_fixture(
        "tent.json", PLMap({{Rational(0), Rational(0)},
                            {Rational(1, 2), Rational(1)},
                            {Rational(1), Rational(0)}}));
    auto r = run_cli("hpol --budget 0 " + tent.string());
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = parse(r.out);
    CHECK(j["report"]["kind"] == "infinite");
    CHECK_FALSE(j["report"].contains("value"));
    CHECK(j["report"]["type"]["class"] == "beyond_all_powers");
}

TEST_CASE("horseshoe artifact feeds straight back into verify") {
    fs::path g2 = map_fixture("g2_hs.json", make_gn(2));
    auto built = run_cli("horseshoe " + g2.string());
    REQUIRE(built.exit_code == 0);
    nlohmann::json cert = parse(built.out);
    CHECK_FALSE(cert.contains("report")); // bare artifact, no envelope
    CHECK(cert["intervals"].size() == 2);

    fs::path cert_path = write_fixture("g2_cert.json", built.out);
    auto ok = run_cli("verify " + g2.string() + " " + cert_path.string());
    CHECK(ok.exit_code == 0);
    nlohmann::json rep = parse(ok.out);
    CHECK(rep["report"]["ok"] == true);
    CHECK(rep["report"]["failure"] == "None");
    CHECK(rep["report"]["size"] == 2);

    cert["witness"] = "7/8";
    fs::path bad_path = write_fixture("g2_cert_bad.json", cert.dump());
    auto bad = run_cli("verify " + g2.string() + " " + bad_path.string());
    CHECK(bad.exit_code == 1);
    CHECK(parse(bad.out)["report"]["failure"] == "WitnessFailure");
}

TEST_CASE("double subcommand matches the library operator") {
    fs::path f0 = map_fixture("f0.json", make_f0());
    auto r = run_cli("double " + f0.string() + " --times 2");
    CHECK(r.exit_code == 0);
    CHECK(parse(r.out) == plmap_to_json(double_map(make_f0(), 2)));
}

TEST_CASE("structure reports the chain skeleton and honors --power") {
    fs::path g2 = map_fixture("g2_struct.json", make_gn(2));
    auto r = run_cli("structure " + g2.string());
    REQUIRE(r.exit_code == 0);
    nlohmann::json rep = parse(r.out)["report"];
    CHECK(rep["fixed_components"].size() == 3);
    CHECK(rep["essential_intervals"].size() == 2);
    CHECK(rep["max_chain"]["length"] == 2);

    // f0 squared is the identity: one fixed component, no chain.
    fs::path f0 = map_fixture("f0_struct.json", make_f0());
    auto sq = run_cli("structure " + f0.string() + " --power 2");
    REQUIRE(sq.exit_code == 0);
    nlohmann::json rep2 = parse(sq.out)["report"];
    CHECK(rep2["fixed_components"].size() == 1);
    CHECK(rep2["max_chain"]["length"] == 0);
}

TEST_CASE("sep-estimate runs are byte-identical and csv has the fixed header") {
    fs::path g1 = map_fixture("g1_sep.json", make_gn(1));
    std::string args = "sep-estimate " + g1.string() +
                       " --eps 0.05 0.02 --grid 6 --anchors 4 --fan-budget 4000"
                       " --seed 7";
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    nlohmann::json j = parse(a.out);
    CHECK(j["report"].contains("slopes"));
    CHECK(j["report"]["table"]["counts"].size() == 2);

    auto csv = run_cli("--format csv " + args);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.substr(0, csv.out.find('\n')) == "epsilon,n,count");
}

TEST_CASE("logistic single-parameter verdict and sweep csv") {
    auto r = run_cli("logistic --lambda 3.2");
    REQUIRE(r.exit_code == 0);
    nlohmann::json rep = parse(r.out)["report"];
    CHECK(rep["kind"] == "finite");
    CHECK(rep["value"] == 2);
    CHECK(rep["attractor"]["detected"] == true);
    CHECK(rep["attractor"]["period_exp"] == 1);

    auto sweep = run_cli("logistic --sweep 2.5:3.2:0.35");
    REQUIRE(sweep.exit_code == 0);
    std::istringstream lines(sweep.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lambda,period,h_pol");
    long long last_h = -1;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto second = line.find(',');
        auto third = line.find(',', second + 1);
        REQUIRE(third != std::string::npos);
        long long h = std::stoll(line.substr(third + 1));
        CHECK(h >= last_h);
        last_h = h;
        ++rows;
    }
    CHECK(rows == 3);
    CHECK(last_h == 2);
}

TEST_CASE("subshift command measures word complexity of a sequence file") {
    fs::path seq = write_fixture("fib.txt", fibonacci_word(1024) + "\n");
    auto r = run_cli("subshift --input " + seq.string() + " --n-max 12");
    REQUIRE(r.exit_code == 0);
    nlohmann::json rep = parse(r.out)["report"];
    CHECK(rep["counts"][6] == 7);
    CHECK(rep["counts"][12] == 13);
    CHECK(rep["estimate"]["superpolynomial"] == false);
    double slope = rep["estimate"]["slope"].get<double>();
    CHECK(slope == doctest::Approx(1.0).epsilon(0.3));

    auto bracket = run_cli("dendrite-bound --input " + seq.string() + " --n-max 12");
    REQUIRE(bracket.exit_code == 0);
    nlohmann::json br = parse(bracket.out)["report"];
    CHECK(br["lower_slope"].get<double>() > 0.5);
    CHECK(br["upper_value"].get<double>() > 0.5);
}

TEST_CASE("--out writes the artifact to a file instead of stdout") {
    fs::path dest = scratch_dir() / "family_out.json";
    auto r = run_cli("--out " + dest.string() + " family --kind f0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(parse(slurp(dest)) == plmap_to_json(make_f0()));
}

TEST_CASE("error paths exit 1 with a diagnostic on stderr") {
    auto missing = run_cli("hpol /nonexistent/map.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("error:") != std::string::npos);

    fs::path junk = write_fixture("junk.json", "not json at all");
    CHECK(run_cli("hpol " + junk.string()).exit_code == 1);

    CHECK(run_cli("sep-estimate --grid 4").exit_code == 1);

    fs::path g2 = map_fixture("g2_fmt.json", make_gn(2));
    CHECK(run_cli("--format csv hpol " + g2.string()).exit_code == 1);

    fs::path seq = write_fixture("short.txt", "0101\n");
    CHECK(run_cli("subshift --input " + seq.string() + " --n-max 12").exit_code == 1);
}
