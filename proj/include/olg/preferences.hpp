#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace olg {

// Household with u(C1, C2, D) = C1^theta * C2^(1-theta) * D^kappa and
// labor disutility Gamma(l) = gamma0 * l^(1+eta) / (1+eta).
struct HouseholdParams {
    double theta = 0.5;   // Cobb-Douglas weight on working-age consumption
    double sigma = 2.0;   // elasticity of substitution among goods
    double eta = 1.0;     // curvature of labor disutility
    double gamma0 = 1.0;  // scale of labor disutility
    double kappa = 0.0;   // utility exponent on childhood consumption
    double d = 0.0;       // real childhood consumption per person

    /// Throws ValidationError naming the offending field (prefixed by `path`).
    void validate(const char* path = "params") const;
};

/// Basket prices of the two consumption periods.
class PricePair {
public:
    PricePair(double p1, double p2);

    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }
    double rho() const noexcept { return rho_; }

private:
    double p1_;
    double p2_;
    double rho_;
};

struct ExpenditureShares {
    double alpha;
    double one_minus_alpha;
};

struct BasketDemand {
    double c1;
    double c2;
};

ExpenditureShares expenditure_shares(const HouseholdParams& prefs, double rho);

BasketDemand consumption_demand(double income_nominal, const PricePair& prices, double alpha);

/// CES demand for one good: (p_z / P)^(-sigma) * X / P.
double good_demand(double p_z, double p_index, double expenditure, double sigma);

/// CES price index from prices sampled at the midpoints of a uniform grid on [0, 1].
double price_index(std::span<const double> midpoint_prices, double sigma);

/// Samples `price_of` at `grid` midpoints and applies the midpoint rule.
double price_index(const std::function<double(double)>& price_of, double sigma,
                   std::size_t grid = 1024);

/// B(rho) = theta^theta ((1-theta)/rho)^(1-theta); phi(I, rho) = B(rho) * d^kappa * I.
double basket_utility_per_income(const HouseholdParams& prefs, double rho);

/// dphi/dI, the marginal utility of real income.
double income_marginal_utility(const HouseholdParams& prefs, double rho);

double labor_disutility(const HouseholdParams& prefs, double l);
double labor_disutility_slope(const HouseholdParams& prefs, double l);
double labor_disutility_curvature(const HouseholdParams& prefs, double l);

/// Closed-form solution of dphi/dI * omega = Gamma'(l).
double labor_supply(double omega, double rho, const HouseholdParams& prefs);

/// Bracketing bisection on the same first-order condition. Independent of the
/// closed form; used as its oracle.
double labor_supply_numeric(double omega, double rho, const HouseholdParams& prefs);

/// dl/domega. With phi linear in I this is dphi/dI / Gamma''(l).
double labor_supply_slope(double omega, double rho, const HouseholdParams& prefs);

/// B(rho) * income * d^kappa - Gamma(l). Unemployed utility is the l = 0 case.
double indirect_utility(double income_real, double rho, double l, double d_childhood,
                        const HouseholdParams& prefs);

}  // namespace olg
