#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "olg/scenario_io.hpp"

namespace olg {

/// Parameter sets with a feasible steady state, a positive f' denominator and f' > 0.
std::vector<EconomyParams> random_admissible_economies(std::size_t count, std::uint64_t seed);

/// Deterministic lattice over (sigma, theta, q, d, gamma_adj) around the
/// reference calibration, filtered to the same admissible set.
std::vector<EconomyParams> lattice_admissible_economies(std::size_t count);

struct OracleCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Independent cross-checks: finite-difference vs closed-form f', grid-search
/// profit argmax vs markup rule, bisection vs closed-form labor supply,
/// fixed-point residuals and goods-market clearing along the scenario path.
std::vector<OracleCheck> run_oracle_suite(const Scenario& scenario, bool seed_free);

}  // namespace olg
