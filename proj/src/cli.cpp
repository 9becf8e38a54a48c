#include "olg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "olg/errors.hpp"
#include "olg/scenario_io.hpp"
#include "olg/verification.hpp"

namespace olg {

namespace {

struct Options {
    std::string scenario_path;
    std::string out_dir;
    std::string mode;
    std::string carry;
    std::optional<long> horizon;
    bool seed_free = false;
};

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

Scenario load(const Options& opts) {
    Scenario scenario = parse_scenario(opts.scenario_path);
    if (!opts.mode.empty()) {
        auto mode = expectations_from_string(opts.mode);
        if (!mode) throw ValidationError("--mode", "expected foresight or static");
        scenario.mode = *mode;
    }
    if (!opts.carry.empty()) {
        auto carry = carry_from_string(opts.carry);
        if (!carry) throw ValidationError("--carry", "expected predetermined or generational");
        scenario.carry = *carry;
    }
    if (opts.horizon) {
        if (*opts.horizon < 1) throw ValidationError("--horizon", "must be >= 1");
        scenario.horizon = *opts.horizon;
    }
    return scenario;
}

std::optional<std::filesystem::path> out_dir(const Options& opts) {
    if (opts.out_dir.empty()) return std::nullopt;
    std::filesystem::create_directories(opts.out_dir);
    return std::filesystem::path(opts.out_dir);
}

int emit_json(const Options& opts, const char* file, const nlohmann::json& doc, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (auto dir = out_dir(opts)) write_file(*dir / file, text);
    out << text;
    return kExitOk;
}

int cmd_calibrate(const Options& opts, std::ostream& out) {
    const auto scenario = load(opts);
    auto doc = to_json(full_employment_steady_state(scenario.params));
    doc["scenario"] = scenario.name;
    return emit_json(opts, "steady_state.json", doc, out);
}

int cmd_stability(const Options& opts, std::ostream& out) {
    const auto scenario = load(opts);
    auto doc = to_json(stability_classification(scenario.params));
    doc["scenario"] = scenario.name;
    return emit_json(opts, "stability.json", doc, out);
}

int cmd_simulate(const Options& opts, std::ostream& out) {
    const auto scenario = load(opts);
    const auto trajectory = simulate_scenario(scenario);
    if (auto dir = out_dir(opts)) {
        emit_trajectory_csv(trajectory, *dir / "trajectory.csv");
        const std::string summary = trajectory_summary(scenario, trajectory).dump(2) + "\n";
        write_file(*dir / "summary.json", summary);
        out << summary;
    } else {
        write_trajectory_csv(trajectory, out);
    }
    return kExitOk;
}

int cmd_sweep(const Options& opts, std::ostream& out) {
    const auto scenario = load(opts);
    const auto rows = run_sweep(scenario);
    if (auto dir = out_dir(opts)) {
        std::ofstream file(*dir / "sweep.csv", std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + (*dir / "sweep.csv").string());
        write_sweep_csv(rows, file);
        out << "wrote " << rows.size() << " rows to " << (*dir / "sweep.csv").string() << '\n';
    } else {
        write_sweep_csv(rows, out);
    }
    return kExitOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
    const auto scenario = load(opts);
    const auto checks = run_oracle_suite(scenario, opts.seed_free);
    bool all_passed = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& check : checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
        all_passed = all_passed && check.passed;
        doc.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    }
    if (auto dir = out_dir(opts)) write_file(*dir / "verify.json", doc.dump(2) + "\n");
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-generation OLG economy: steady state, stability and price dynamics", "olg"};
    app.require_subcommand(1);
    Options opts;

    auto add_common = [&opts](CLI::App* sub) {
        sub->add_option("--scenario", opts.scenario_path, "Scenario JSON file")->required();
        sub->add_option("--out", opts.out_dir, "Directory for emitted files");
        sub->add_option("--mode", opts.mode, "Expectations: foresight | static");
        sub->add_option("--carry", opts.carry, "State carry: predetermined | generational");
        sub->add_option("--horizon", opts.horizon, "Simulation horizon (periods)");
        sub->add_flag("--seed-free", opts.seed_free, "verify: deterministic lattice instead of seeded draws");
    };
    auto* calibrate = app.add_subcommand("calibrate", "Full-employment steady state as JSON");
    auto* stability = app.add_subcommand("stability", "Stability report as JSON");
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate the price-adjustment path");
    auto* sweep = app.add_subcommand("sweep", "Stability over a one-parameter grid");
    auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks");
    for (auto* sub : {calibrate, stability, simulate_cmd, sweep, verify}) add_common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "olg: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        if (calibrate->parsed()) return cmd_calibrate(opts, out);
        if (stability->parsed()) return cmd_stability(opts, out);
        if (simulate_cmd->parsed()) return cmd_simulate(opts, out);
        if (sweep->parsed()) return cmd_sweep(opts, out);
        return cmd_verify(opts, out);
    } catch (const ValidationError& e) {
        err << "olg: validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        err << "olg: numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const DomainError& e) {
        err << "olg: numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "olg: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace olg
