#include "olg/production.hpp"

#include <cmath>
#include <string>

#include "olg/errors.hpp"
#include "olg/preferences.hpp"

namespace olg {

void Technology::validate(const char* path) const {
    if (!(std::isfinite(y) && y > 0.0)) throw ValidationError(std::string(path) + ".y", "must be > 0");
    if (!(std::isfinite(sigma) && sigma > 1.0))
        throw ValidationError(std::string(path) + ".sigma", "must be > 1");
}

double markup_price(double w_nominal, const Technology& tech) {
    if (!(w_nominal > 0.0)) throw DomainError("markup_price: wage must be positive");
    return w_nominal / ((1.0 - tech.mu()) * tech.y);
}

double real_wage(const Technology& tech) { return (1.0 - tech.mu()) * tech.y; }

double demand_curve(double p_z, double p_index, double effective_demand_nominal, double sigma) {
    return good_demand(p_z, p_index, effective_demand_nominal, sigma);
}

double inverse_demand(double quantity, double p_index, double effective_demand_nominal, double sigma) {
    if (!(quantity > 0.0)) throw DomainError("inverse_demand: quantity must be positive");
    if (!(p_index > 0.0)) throw DomainError("inverse_demand: price index must be positive");
    return p_index * std::pow(effective_demand_nominal / (p_index * quantity), 1.0 / sigma);
}

double profit_at(double labor_input, double w_nominal, double p_index,
                 double effective_demand_nominal, const Technology& tech) {
    if (!(labor_input >= 0.0)) throw DomainError("profit_at: negative labor input");
    if (labor_input == 0.0) return 0.0;
    const double output = labor_input * tech.y;
    const double price = inverse_demand(output, p_index, effective_demand_nominal, tech.sigma);
    return price * output - labor_input * w_nominal;
}

double aggregate_profit(double p1, double w_nominal, double total_labor, const Technology& tech) {
    return p1 * total_labor * tech.y - w_nominal * total_labor;
}

double optimal_labor_input(double w_nominal, double p_index, double effective_demand_nominal,
                           const Technology& tech) {
    const double price = markup_price(w_nominal, tech);
    return demand_curve(price, p_index, effective_demand_nominal, tech.sigma) / tech.y;
}

GridOptimum profit_argmax_grid(double w_nominal, double p_index, double effective_demand_nominal,
                               const Technology& tech, int points) {
    if (points < 2) throw DomainError("profit_argmax_grid: need at least two points");
    if (!(w_nominal > 0.0) || !(effective_demand_nominal > 0.0))
        throw DomainError("profit_argmax_grid: wage and demand must be positive");
    // Revenue P^(1-1/s) Y^(1/s) x^(1-1/s) equals cost W x / y at the break-even output.
    const double s = tech.sigma;
    const double break_even_output =
        std::pow(p_index, s - 1.0) * effective_demand_nominal * std::pow(tech.y / w_nominal, s);
    const double upper = break_even_output / tech.y;
    const double step = upper / static_cast<double>(points - 1);

    GridOptimum best{0.0, 0.0, step};
    for (int i = 1; i < points; ++i) {
        const double input = step * static_cast<double>(i);
        const double profit = profit_at(input, w_nominal, p_index, effective_demand_nominal, tech);
        if (profit > best.profit) best = {input, profit, step};
    }
    return best;
}

}  // namespace olg
