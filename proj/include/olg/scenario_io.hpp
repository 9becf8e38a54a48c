#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "olg/dynamics.hpp"

namespace olg {

struct SweepSpec {
    std::string param;  // one of q, d, g, gamma_adj, theta, sigma
    double lo = 0.0;
    double hi = 0.0;
    int count = 2;

    bool operator==(const SweepSpec&) const = default;
};

struct Scenario {
    std::string name;
    EconomyParams params;
    Expectations mode = Expectations::PerfectForesight;
    StateCarry carry = StateCarry::Predetermined;
    Shock shock{1.01, 0.0, 1.0};
    long horizon = 2000;
    double tol = 1e-8;
    double divergence_bound = 10.0;
    std::optional<SweepSpec> sweep;

    StepOptions step_options() const { return {mode, carry, 1e-9}; }
    StopRule stop_rule() const { return {tol, divergence_bound}; }

    bool operator==(const Scenario&) const = default;
};

/// Validates every field; errors carry the JSON path of the offending field.
Scenario scenario_from_json(const nlohmann::json& doc);
Scenario parse_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const Scenario& scenario);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

nlohmann::json to_json(const SteadyState& steady);
nlohmann::json to_json(const StabilityReport& report);
SteadyState steady_state_from_json(const nlohmann::json& doc);
StabilityReport stability_report_from_json(const nlohmann::json& doc);

inline constexpr const char* kTrajectoryHeader =
    "t,p,p_next,ll_notional,ll_actual,employment,unemployment_rate,regime,y_nominal,m,m_tilde,d_bar";

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);
void emit_trajectory_csv(const Trajectory& trajectory, const std::filesystem::path& path);

nlohmann::json trajectory_summary(const Scenario& scenario, const Trajectory& trajectory);

/// Simulation starting point of a scenario: its shock applied to the steady state.
Trajectory simulate_scenario(const Scenario& scenario);

/// Sets one sweepable parameter by name; throws ValidationError for unknown names.
void set_parameter(EconomyParams& params, const std::string& name, double value);

struct SweepRow {
    double value;
    std::optional<double> criterion;
    std::optional<double> fprime;
    std::string classification;  // analytic, or "Infeasible"
    std::string simulated;       // path verdict, or "Error"
};

/// Rows ordered by parameter value.
std::vector<SweepRow> run_sweep(const Scenario& scenario);
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace olg
