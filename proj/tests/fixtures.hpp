#pragma once

#include <cmath>
#include <random>

#include "olg/equilibrium.hpp"

namespace olg::testing {

// sigma=2, theta=0.5, eta=1, gamma0=1, y=1, W=1, L_f=100, g=5, d=0.1, q=0.05.
inline EconomyParams reference_economy() {
    EconomyParams p;
    p.sigma = 2.0;
    p.theta = 0.5;
    p.eta = 1.0;
    p.gamma0 = 1.0;
    p.kappa = 0.0;
    p.y = 1.0;
    p.wage = 1.0;
    p.labor_force = 100.0;
    p.g = 5.0;
    p.d = 0.1;
    p.q = 0.05;
    p.gamma_adj = 0.05;
    return p;
}

inline EconomyParams stable_economy() {
    EconomyParams p = reference_economy();
    p.q = 0.01;
    p.d = 0.01;
    p.gamma_adj = 0.01;
    return p;
}

inline double rel_err(double value, double expected) {
    return std::abs(value - expected) / std::max(std::abs(expected), 1e-300);
}

}  // namespace olg::testing
