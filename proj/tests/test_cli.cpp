#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "olg/cli.hpp"
#include "olg/scenario_io.hpp"

using namespace olg;
using nlohmann::json;

namespace {

const std::string kScenarios = OLG_SCENARIO_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("olg_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("stability on the reference scenario") {
    const auto r = run({"stability", "--scenario", kScenarios + "/reference.json"});
    REQUIRE(r.code == kExitOk);
    const auto doc = json::parse(r.out);
    CHECK(doc["classification"] == "Unstable");
    CHECK(doc["criterion"].get<double>() == doctest::Approx(-10.0).epsilon(1e-12));
    CHECK(doc["scenario"] == "reference");
    CHECK(stability_report_from_json(doc) == stability_classification(parse_scenario(kScenarios + "/reference.json").params));
}

TEST_CASE("calibrate on the reference scenario") {
    const auto dir = scratch("calibrate");
    const auto r = run({"calibrate", "--scenario", kScenarios + "/reference.json", "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    const auto doc = json::parse(slurp(dir / "steady_state.json"));
    CHECK(doc["p_star"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(doc["l_star"].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(doc["m_star"].get<double>() == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(json::parse(r.out) == doc);
}

TEST_CASE("simulate the stable variant") {
    const auto dir = scratch("simulate");
    const auto r = run({"simulate", "--scenario", kScenarios + "/stable.json", "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    const auto summary = json::parse(slurp(dir / "summary.json"));
    CHECK(summary["termination"] == "Converged");

    std::ifstream csv(dir / "trajectory.csv");
    std::string line, last;
    std::getline(csv, line);
    CHECK(line == kTrajectoryHeader);
    while (std::getline(csv, line)) last = line;
    const double p = std::stod(last.substr(last.find(',') + 1));
    CHECK(std::abs(p - 2.0) / 2.0 <= 1e-8);

    const auto first = slurp(dir / "trajectory.csv");
    REQUIRE(run({"simulate", "--scenario", kScenarios + "/stable.json", "--out", dir.string()}).code == kExitOk);
    CHECK(slurp(dir / "trajectory.csv") == first);

    const auto to_stdout = run({"simulate", "--scenario", kScenarios + "/stable.json"});
    CHECK(to_stdout.out == first);
}

TEST_CASE("command-line overrides") {
    const auto r = run({"simulate", "--scenario", kScenarios + "/stable.json", "--horizon", "3", "--mode", "static"});
    REQUIRE(r.code == kExitOk);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);  // header + t = 0..3
    CHECK(run({"simulate", "--scenario", kScenarios + "/stable.json", "--mode", "clairvoyant"}).code ==
          kExitValidation);
    CHECK(run({"simulate", "--scenario", kScenarios + "/stable.json", "--carry", "generational"}).code == kExitOk);
}

TEST_CASE("sweep and verify") {
    const auto dir = scratch("sweep");
    auto r = run({"sweep", "--scenario", kScenarios + "/sweep_debt.json", "--out", dir.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(slurp(dir / "sweep.csv").rfind("value,criterion,fprime,classification,simulated\n", 0) == 0);
    CHECK(run({"sweep", "--scenario", kScenarios + "/stable.json"}).code == kExitValidation);

    r = run({"verify", "--scenario", kScenarios + "/stable.json"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS fprime_finite_difference") != std::string::npos);
    r = run({"verify", "--scenario", kScenarios + "/reference.json", "--seed-free"});
    CHECK(r.code == kExitOk);
}

TEST_CASE("exit codes for bad input") {
    const auto dir = scratch("errors");
    auto write = [&dir](const std::string& name, const std::string& text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const std::string bad_sigma = write("bad_sigma.json", R"({"name":"x","params":{"sigma":0.5,"theta":0.5,
        "eta":1,"gamma0":1,"y":1,"W":1,"L_f":100,"g":5,"d":0.1,"q":0.05,"gamma_adj":0.05}})");
    auto r = run({"calibrate", "--scenario", bad_sigma});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("params.sigma") != std::string::npos);

    CHECK(run({"calibrate", "--scenario", (dir / "missing.json").string()}).code == kExitValidation);
    CHECK(run({"calibrate", "--scenario", write("broken.json", "{")}).code == kExitValidation);
    CHECK(run({"calibrate"}).code == kExitValidation);
    CHECK(run({"explode", "--scenario", bad_sigma}).code == kExitValidation);
    CHECK(run({}).code == kExitValidation);

    const std::string singular = write("singular.json", R"({"name":"x","params":{"sigma":2,"theta":0.5,
        "eta":1,"gamma0":1,"y":1,"W":1,"L_f":100,"g":5,"d":0.1,"q":0.05,"gamma_adj":0.5}})");
    r = run({"simulate", "--scenario", singular});
    CHECK(r.code == kExitNumerical);
    CHECK(r.err.find("numerical") != std::string::npos);
    r = run({"stability", "--scenario", singular});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["classification"] == "Uncertified");
}
