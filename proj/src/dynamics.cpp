#include "olg/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "olg/errors.hpp"

namespace olg {

std::string_view to_string(Expectations mode) {
    return mode == Expectations::PerfectForesight ? "foresight" : "static";
}

std::string_view to_string(StateCarry carry) {
    return carry == StateCarry::Predetermined ? "predetermined" : "generational";
}

std::optional<Expectations> expectations_from_string(std::string_view text) {
    if (text == "foresight") return Expectations::PerfectForesight;
    if (text == "static") return Expectations::Static;
    return std::nullopt;
}

std::optional<StateCarry> carry_from_string(std::string_view text) {
    if (text == "predetermined") return StateCarry::Predetermined;
    if (text == "generational") return StateCarry::Generational;
    return std::nullopt;
}

std::string_view to_string(Termination termination) {
    switch (termination) {
        case Termination::Converged: return "Converged";
        case Termination::Diverged: return "Diverged";
        case Termination::MaxIter: return "MaxIter";
    }
    return "?";
}

std::string_view to_string(PathVerdict verdict) {
    return verdict == PathVerdict::Converging ? "Converging" : "Diverging";
}

StepResult step(const SimState& state, const EconomyParams& params, const SteadyState& steady,
                const StepOptions& options) {
    if (!(state.p > 0.0)) throw DomainError("step: price must be positive");
    const double p = state.p;
    const double gamma = params.gamma_adj;
    const double lf = params.labor_force;
    const double alpha = params.alpha();
    const auto coeffs = activity_coefficients(p, state.m_tilde, state.d_bar, params);

    double expected_p;  // P' inside the expected pension
    double p_next;
    if (options.expectations == Expectations::PerfectForesight) {
        const double solve_denominator = 1.0 - gamma * coeffs.slope;
        if (!(solve_denominator > 0.0))
            throw StepSingular("step: 1 - gamma * alpha L_f q / ((1-alpha) P y) <= 0");
        p_next = (gamma * (coeffs.intercept - steady.ll_star) + p) / solve_denominator;
        expected_p = p_next;
    } else {
        expected_p = p;
        p_next = gamma * (coeffs.intercept + coeffs.slope * p - steady.ll_star) + p;
    }
    const double ll_notional = coeffs.intercept + coeffs.slope * expected_p;

    const double p_floor = options.floor_factor * steady.p_star;
    const bool floor_hit = p_next < p_floor;
    if (floor_hit) p_next = p_floor;

    const auto outcome = classify_activity(ll_notional, steady.ll_star);
    const double employment = outcome.ll_actual / steady.l_star;

    StepRecord record{};
    record.t = state.t;
    record.p = p;
    record.p_next = p_next;
    record.ll_notional = ll_notional;
    record.ll_actual = outcome.ll_actual;
    record.employment = employment;
    record.unemployment_rate = std::clamp(1.0 - employment / lf, 0.0, 1.0);
    record.regime = outcome.regime;
    record.demand = generation_demand_decomposition(p, expected_p, state.m_tilde, state.d_bar,
                                                    ll_notional, params);
    record.y_nominal = record.demand.total();
    record.m = state.m_tilde + lf * p * params.q;
    record.m_tilde = state.m_tilde;
    record.d_bar = state.d_bar;
    record.floor_hit = floor_hit;

    // Young savings: (1-alpha) of income net of T, debt repayment and pension tax,
    // plus the pension they expect; the old of next period spend it, net of pension.
    const double young_income = p * outcome.ll_actual * params.y - p * params.g - lf * state.d_bar -
                                lf * p * params.q + lf * p_next * params.q;
    const double saved = (1.0 - alpha) * young_income - lf * p_next * params.q;
    const double new_debt = p * params.d;

    StepResult result{};
    result.record = record;
    result.saved_m_tilde = saved;
    result.new_d_bar = new_debt;
    result.next.t = state.t + 1;
    result.next.p = p_next;
    if (options.carry == StateCarry::Generational) {
        result.next.m_tilde = saved;
        result.next.d_bar = new_debt;
    } else {
        result.next.m_tilde = state.m_tilde;
        result.next.d_bar = state.d_bar;
    }
    return result;
}

double clearing_residual(const StepRecord& record, const EconomyParams& params) {
    const auto& c = record.demand;
    const double scale = std::abs(c.young_spending) + std::abs(c.old_spending) +
                         std::abs(c.childhood_spending) + std::abs(c.government);
    const double supply = record.p * record.ll_notional * params.y;
    const double gap = std::abs(c.total() - supply);
    return scale > 0.0 ? gap / scale : gap;
}

Trajectory simulate(const EconomyParams& params, const SimState& initial, long horizon,
                    const StepOptions& options, const StopRule& stop) {
    if (horizon < 1) throw DomainError("simulate: horizon must be >= 1");
    Trajectory traj;
    traj.params = params;
    traj.options = options;
    traj.steady = full_employment_steady_state(params);
    const double p_star = traj.steady.p_star;

    traj.records.reserve(static_cast<std::size_t>(std::min<long>(horizon + 1, 4096)));
    SimState state = initial;
    for (long k = 0; k <= horizon; ++k) {
        StepResult result;
        try {
            result = step(state, params, traj.steady, options);
        } catch (const StepSingular&) {
            if (k == 0) throw;
            traj.termination = Termination::Diverged;
            traj.reason = "foresight solve singular";
            return traj;
        }
        traj.records.push_back(result.record);

        const double deviation = std::abs(state.p - p_star);
        if (deviation <= stop.tolerance * p_star) {
            traj.termination = Termination::Converged;
            traj.reason = "converged";
            return traj;
        }
        if (deviation >= stop.divergence_bound * p_star) {
            traj.termination = Termination::Diverged;
            traj.reason = "divergence bound";
            return traj;
        }
        if (result.record.floor_hit) {
            traj.termination = Termination::Diverged;
            traj.reason = "price floor";
            return traj;
        }
        if (result.record.ll_notional <= 0.0) {
            traj.termination = Termination::Diverged;
            traj.reason = "employment collapse";
            return traj;
        }
        state = result.next;
    }
    traj.termination = Termination::MaxIter;
    traj.reason = "horizon";
    return traj;
}

PathVerdict path_verdict(const Trajectory& trajectory) {
    switch (trajectory.termination) {
        case Termination::Converged: return PathVerdict::Converging;
        case Termination::Diverged: return PathVerdict::Diverging;
        case Termination::MaxIter: break;
    }
    const double p_star = trajectory.steady.p_star;
    const double first = std::abs(trajectory.records.front().p - p_star);
    const double last = std::abs(trajectory.records.back().p - p_star);
    return last < first ? PathVerdict::Converging : PathVerdict::Diverging;
}

double numeric_fprime(const EconomyParams& params, double h, Expectations mode) {
    if (!(h >= 1e-8 && h <= 1e-3)) throw DomainError("numeric_fprime: h must lie in [1e-8, 1e-3]");
    const auto steady = full_employment_steady_state(params);
    const StepOptions options{mode, StateCarry::Predetermined, 0.0};
    const double p_star = steady.p_star;
    const SimState up{0, p_star * (1.0 + h), steady.m_tilde_star, steady.d_bar_star};
    const SimState down{0, p_star * (1.0 - h), steady.m_tilde_star, steady.d_bar_star};
    const double p_up = step(up, params, steady, options).next.p;
    const double p_down = step(down, params, steady, options).next.p;
    return (p_up - p_down) / (up.p - down.p);
}

double generational_criterion(const EconomyParams& params, const SteadyState& steady) {
    return steady.m_tilde_star - params.labor_force * steady.p_star * params.d;
}

SimState apply_shock(const SteadyState& steady, const Shock& shock) {
    if (!(shock.price_factor > 0.0)) throw DomainError("apply_shock: price_factor must be positive");
    if (!(shock.debt_factor > 0.0)) throw DomainError("apply_shock: debt_factor must be positive");
    return SimState{0, steady.p_star * shock.price_factor, steady.m_tilde_star + shock.net_savings_delta,
                    steady.d_bar_star * shock.debt_factor};
}

}  // namespace olg
