#include "olg/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "olg/errors.hpp"

namespace olg {

namespace {

bool admissible(const EconomyParams& params) {
    try {
        const auto steady = full_employment_steady_state(params);
        return steady.fprime.has_value() && *steady.fprime > 0.0;
    } catch (const std::exception&) {
        return false;
    }
}

std::string describe(double worst, std::size_t cases, double bound) {
    std::ostringstream os;
    os << "max error " << worst << " over " << cases << " cases (bound " << bound << ")";
    return os.str();
}

double relative_gap(double value, double expected, double scale) {
    return std::abs(value - expected) / std::max(std::abs(expected), scale);
}

}  // namespace

std::vector<EconomyParams> random_admissible_economies(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };

    std::vector<EconomyParams> out;
    out.reserve(count);
    for (std::size_t attempts = 0; out.size() < count; ++attempts) {
        if (attempts > 1000 * count + 1000) throw NumericalError("random_admissible_economies: rejection rate too high");
        EconomyParams p;
        p.sigma = uniform(1.5, 6.0);
        p.theta = uniform(0.2, 0.8);
        p.eta = uniform(0.5, 3.0);
        p.gamma0 = uniform(0.5, 2.0);
        p.y = uniform(0.5, 2.0);
        p.wage = uniform(0.5, 2.0);
        p.labor_force = 100.0;
        p.gamma_adj = 1.0;
        p.g = 0.0;
        p.d = 0.0;
        p.q = 0.0;
        const double output = full_employment_labor(p) * p.y;
        p.g = uniform(0.0, 0.3) * output;
        p.d = uniform(0.0, 0.3) * output / p.labor_force;
        p.q = uniform(0.0, 0.4) * output / p.labor_force;

        // Choose the adjustment speed relative to the f' scale so that 0 < f' < 2.
        p.gamma_adj = 1.0;
        SteadyState s;
        try {
            s = full_employment_steady_state(p);
        } catch (const std::exception&) {
            continue;
        }
        const double alpha = s.alpha;
        const double base = (1.0 - alpha) * s.p_star * s.p_star * p.y;
        const double pension = alpha * p.labor_force * s.p_star * p.q;
        p.gamma_adj = uniform(0.02, 0.9) * base / (std::abs(s.criterion) + pension + 1e-12 * base);
        if (admissible(p)) out.push_back(p);
    }
    return out;
}

std::vector<EconomyParams> lattice_admissible_economies(std::size_t count) {
    std::vector<EconomyParams> out;
    for (double sigma : {2.0, 3.0, 5.0})
        for (double theta : {0.3, 0.5, 0.7})
            for (double q : {0.005, 0.02, 0.05})
                for (double d : {0.01, 0.04, 0.1})
                    for (double gamma : {0.005, 0.02, 0.08}) {
                        EconomyParams p;
                        p.sigma = sigma;
                        p.theta = theta;
                        p.q = q;
                        p.d = d;
                        p.gamma_adj = gamma;
                        if (!admissible(p)) continue;
                        out.push_back(p);
                        if (count != 0 && out.size() == count) return out;
                    }
    return out;
}

std::vector<OracleCheck> run_oracle_suite(const Scenario& scenario, bool seed_free) {
    constexpr std::uint64_t kSeed = 0x5eed0015ULL;
    std::vector<OracleCheck> checks;
    const auto economies = seed_free ? lattice_admissible_economies(50) : random_admissible_economies(50, kSeed);

    {
        std::vector<EconomyParams> sets = economies;
        if (admissible(scenario.params)) sets.insert(sets.begin(), scenario.params);
        double worst = 0.0;
        bool ok = true;
        for (const auto& p : sets) {
            const double analytic = analytic_fprime(p, full_employment_steady_state(p));
            const double numeric = numeric_fprime(p);
            const double err = std::abs(numeric - analytic);
            worst = std::max(worst, err);
            ok = ok && err <= 1e-6 * std::max(1.0, std::abs(analytic));
        }
        checks.push_back({"fprime_finite_difference", ok, describe(worst, sets.size(), 1e-6)});
    }

    {
        constexpr std::size_t kEconomies = 20;
        double worst_steps = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < kEconomies; ++i) {
            const auto& p = economies[i % economies.size()];
            const auto steady = full_employment_steady_state(p);
            const auto tech = p.technology();
            const auto grid = profit_argmax_grid(p.wage, steady.p_star, steady.y_star_nominal, tech);
            const double rule = optimal_labor_input(p.wage, steady.p_star, steady.y_star_nominal, tech);
            const double steps = std::abs(grid.labor_input - rule) / grid.grid_step;
            worst_steps = std::max(worst_steps, steps);
            ok = ok && steps <= 1.0;
        }
        checks.push_back({"profit_grid_argmax", ok, describe(worst_steps, kEconomies, 1.0) + " in grid steps"});
    }

    {
        std::mt19937_64 rng(kSeed + 1);
        auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
        double worst = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < 50; ++i) {
            const auto prefs = economies[i % economies.size()].household();
            const double omega = seed_free ? 0.2 + 0.05 * static_cast<double>(i) : uniform(0.1, 3.0);
            const double rho = seed_free ? 0.5 + 0.03 * static_cast<double>(i) : uniform(0.5, 2.0);
            const double err = std::abs(labor_supply(omega, rho, prefs) - labor_supply_numeric(omega, rho, prefs));
            worst = std::max(worst, err);
            ok = ok && err <= 1e-8;
        }
        checks.push_back({"labor_supply_bisection", ok, describe(worst, 50, 1e-8)});
    }

    {
        const auto steady = full_employment_steady_state(scenario.params);
        const SimState start{0, steady.p_star, steady.m_tilde_star, steady.d_bar_star};
        double worst = 0.0;
        for (auto mode : {Expectations::PerfectForesight, Expectations::Static})
            for (auto carry : {StateCarry::Predetermined, StateCarry::Generational}) {
                const auto next = step(start, scenario.params, steady, {mode, carry, 1e-9}).next;
                worst = std::max({worst, relative_gap(next.p, start.p, steady.p_star),
                                  relative_gap(next.m_tilde, start.m_tilde, steady.m_star),
                                  relative_gap(next.d_bar, start.d_bar, steady.p_star)});
            }
        checks.push_back({"fixed_point_residual", worst <= 1e-10, describe(worst, 4, 1e-10)});
    }

    {
        const auto trajectory = simulate_scenario(scenario);
        double worst = 0.0;
        for (const auto& record : trajectory.records)
            worst = std::max(worst, clearing_residual(record, scenario.params));
        checks.push_back({"goods_market_clearing", worst <= 1e-9,
                          describe(worst, trajectory.records.size(), 1e-9)});
    }
    return checks;
}

}  // namespace olg
