#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "olg/equilibrium.hpp"

namespace olg {

/// How the young form the price that sets their expected pension P' q.
enum class Expectations { PerfectForesight, Static };

/// How predetermined state moves between periods.
///  - Predetermined: net savings M~ and nominal debt D_bar stay at their initial
///    values, so the price follows the one-dimensional map P' = f(P).
///  - Generational: each period's young savings and new childhood debt become
///    the next period's M~ and D_bar.
enum class StateCarry { Predetermined, Generational };

std::string_view to_string(Expectations mode);
std::string_view to_string(StateCarry carry);
std::optional<Expectations> expectations_from_string(std::string_view text);
std::optional<StateCarry> carry_from_string(std::string_view text);

struct SimState {
    long t = 0;
    double p = 0.0;
    double m_tilde = 0.0;
    double d_bar = 0.0;

    bool operator==(const SimState&) const = default;
};

struct StepRecord {
    long t;
    double p;
    double p_next;
    double ll_notional;
    double ll_actual;
    double employment;
    double unemployment_rate;
    Regime regime;
    double y_nominal;  // effective demand Y
    double m;          // M = M~ + L_f P q
    double m_tilde;
    double d_bar;
    DemandComponents demand;
    bool floor_hit;

    bool operator==(const StepRecord&) const = default;
};

struct StepOptions {
    Expectations expectations = Expectations::PerfectForesight;
    StateCarry carry = StateCarry::Predetermined;
    double floor_factor = 1e-9;  // p_floor = floor_factor * P*
};

struct StepResult {
    SimState next;
    StepRecord record;
    double saved_m_tilde;  // young savings net of next pension: next M~ under Generational
    double new_d_bar;      // P d: next D_bar under Generational
};

/// One period: clear the goods market, apply P' = gamma (Ll - L_f l*) + P.
/// Under perfect foresight Ll depends on P', and the linear pair is solved exactly.
/// Throws StepSingular when 1 - gamma * slope <= 0.
StepResult step(const SimState& state, const EconomyParams& params, const SteadyState& steady,
                const StepOptions& options = {});

/// Relative gap between the demand decomposition and P * ll_notional * y.
double clearing_residual(const StepRecord& record, const EconomyParams& params);

enum class Termination { Converged, Diverged, MaxIter };
std::string_view to_string(Termination termination);

struct StopRule {
    double tolerance = 1e-8;       // |P - P*| <= tolerance * P*
    double divergence_bound = 10;  // |P - P*| >= bound * P*
};

struct Trajectory {
    EconomyParams params;
    StepOptions options;
    SteadyState steady;
    std::vector<StepRecord> records;
    Termination termination = Termination::MaxIter;
    std::string_view reason;
};

/// At most horizon + 1 recorded periods.
Trajectory simulate(const EconomyParams& params, const SimState& initial, long horizon,
                    const StepOptions& options = {}, const StopRule& stop = {});

enum class PathVerdict { Converging, Diverging };
std::string_view to_string(PathVerdict verdict);

/// Converged -> Converging, Diverged -> Diverging; a MaxIter path is judged by
/// whether its last price deviation is below its first.
PathVerdict path_verdict(const Trajectory& trajectory);

/// Central difference of P'(P) at P*, holding M~ and D_bar at steady values.
double numeric_fprime(const EconomyParams& params, double h = 1e-5,
                      Expectations mode = Expectations::PerfectForesight);

/// Stability margin of the Generational carry: M~* - L_f P* d. Positive iff the
/// second-order system in (P_t, P_{t-1}) is locally stable, for small gamma.
double generational_criterion(const EconomyParams& params, const SteadyState& steady);

struct Shock {
    double price_factor = 1.0;
    double net_savings_delta = 0.0;
    double debt_factor = 1.0;

    bool operator==(const Shock&) const = default;
};

SimState apply_shock(const SteadyState& steady, const Shock& shock);

}  // namespace olg
