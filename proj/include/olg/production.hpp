#pragma once

namespace olg {

/// Constant-returns technology of a monopolistically competitive firm.
struct Technology {
    double y = 1.0;      // labor productivity
    double sigma = 2.0;  // elasticity of demand, shared with the household

    double mu() const noexcept { return 1.0 / sigma; }
    void validate(const char* path = "params") const;
};

/// p = W / ((1 - mu) y): the symmetric-equilibrium price P1.
double markup_price(double w_nominal, const Technology& tech);

/// omega = (1 - mu) y = W / P1 under markup pricing.
double real_wage(const Technology& tech);

/// Demand facing firm z: (p_z / P1)^(-sigma) * Y / P1.
double demand_curve(double p_z, double p_index, double effective_demand_nominal, double sigma);

/// Price at which demand_curve absorbs `quantity`.
double inverse_demand(double quantity, double p_index, double effective_demand_nominal, double sigma);

/// Profit of one firm hiring `labor_input` = L*l and selling output L*l*y along
/// its demand curve.
double profit_at(double labor_input, double w_nominal, double p_index,
                 double effective_demand_nominal, const Technology& tech);

/// P1*Ll*y - W*Ll, the profit income L_f*Pi of the whole economy.
double aggregate_profit(double p1, double w_nominal, double total_labor, const Technology& tech);

/// Labor input implied by the markup FOC: demand at the markup price, over y.
double optimal_labor_input(double w_nominal, double p_index, double effective_demand_nominal,
                           const Technology& tech);

struct GridOptimum {
    double labor_input;
    double profit;
    double grid_step;
};

/// Brute-force argmax of profit_at on a uniform grid over [0, break-even input].
/// The break-even input is where revenue along the demand curve equals the wage
/// bill, so the search range never refers to the markup rule.
GridOptimum profit_argmax_grid(double w_nominal, double p_index, double effective_demand_nominal,
                               const Technology& tech, int points = 20001);

}  // namespace olg
