#pragma once

#include <optional>
#include <string_view>

#include "olg/preferences.hpp"
#include "olg/production.hpp"

namespace olg {

/// Structural, fiscal and adjustment parameters of the three-generation economy.
/// Government spending g, new childhood borrowing d and pensions q are real
/// quantities, indexed to the current price level. The budget is balanced, G = T.
struct EconomyParams {
    double sigma = 2.0;
    double theta = 0.5;
    double eta = 1.0;
    double gamma0 = 1.0;
    double kappa = 0.0;
    double y = 1.0;
    double labor_force = 100.0;  // L_f
    double g = 5.0;
    double d = 0.1;
    double q = 0.05;
    double gamma_adj = 0.05;  // price-adjustment speed
    double wage = 1.0;        // nominal wage W

    HouseholdParams household() const;
    Technology technology() const;
    double alpha() const;

    /// Throws ValidationError with a "params.<field>" path.
    void validate() const;

    bool operator==(const EconomyParams&) const = default;
};

struct FiscalFlows {
    double theta_tax;  // per employed, finances unemployment benefits
    double psi_tax;    // per employed, finances pensions
    double r_benefit;  // per unemployed, R = D
    double t_tax;      // total, finances G
};

/// Theta = D (L_f - L) / L, so that L (D + Theta) = L_f D.
double unemployment_benefit_tax(double employed, double labor_force, double debt_nominal);

/// Psi = L_f Q / L.
double pension_tax(double employed, double labor_force, double pension_nominal);

/// Taxes and transfers of a period with `employed` workers, price `p` and
/// predetermined nominal debt `d_bar` per young consumer.
FiscalFlows fiscal_flows(double employed, double p, double d_bar, const EconomyParams& params);

enum class Regime { UnderEmployment, FullEmployment, ExcessDemand };
std::string_view to_string(Regime regime);

/// Goods-market clearing gives L*l linear in the expected next price:
/// Ll = intercept + slope * p_next.
struct ActivityCoefficients {
    double intercept;
    double slope;
};

ActivityCoefficients activity_coefficients(double p_now, double m_tilde, double d_bar,
                                           const EconomyParams& params);

struct EmploymentOutcome {
    double ll_notional;  // demand-determined L*l, uncapped
    double ll_actual;    // clamped to [0, L_f l*]
    Regime regime;
};

/// Caps a demand-determined activity level at full employment and names the regime.
EmploymentOutcome classify_activity(double ll_notional, double ll_full);

/// Labor input at which supply equals effective demand, capped at full employment.
EmploymentOutcome employment_from_demand(double p_now, double p_next, double m_tilde, double d_bar,
                                         const EconomyParams& params, double ll_full);
EmploymentOutcome employment_from_demand(double p_now, double p_next, double m_tilde, double d_bar,
                                         const EconomyParams& params);

/// L_f * l(L_f) at the markup real wage and rho = 1.
double full_employment_labor(const EconomyParams& params);

/// Nominal components of effective demand Y.
struct DemandComponents {
    double young_spending;      // alpha * (income - T - debt repayment + expected pension - pension tax)
    double old_spending;        // M = M~ + L_f P q
    double childhood_spending;  // L_f * P * d
    double government;          // G = P g

    double total() const { return young_spending + old_spending + childhood_spending + government; }
    bool operator==(const DemandComponents&) const = default;
};

/// Demand components when young income is P * ll_income * y.
DemandComponents generation_demand_decomposition(double p_now, double p_next, double m_tilde,
                                                 double d_bar, double ll_income,
                                                 const EconomyParams& params);

/// Y at the demand-determined activity level.
double effective_demand(double p_now, double p_next, double m_tilde, double d_bar,
                        const EconomyParams& params);

struct SteadyState {
    double p_star;
    double l_star;
    double ll_star;
    double m_star;
    double m_tilde_star;
    double d_bar_star;      // nominal debt per young consumer, P* d
    double y_star_nominal;  // P* L_f l* y
    double alpha;
    double denominator;             // (1-alpha) P*^2 y - gamma alpha L_f P* q
    std::optional<double> fprime;   // empty when denominator <= 0
    double criterion;               // M* - L_f P* q - alpha L_f P* d

    bool operator==(const SteadyState&) const = default;
};

/// Throws InfeasibleCalibration when L_f l* y <= g + L_f d.
SteadyState full_employment_steady_state(const EconomyParams& params);

double fprime_denominator(const EconomyParams& params, double p_star);

/// f'(P*) = 1 - gamma (M* - L_f P* q - alpha L_f P* d) / denominator.
/// Throws PreconditionViolated when the denominator is not positive.
double analytic_fprime(const EconomyParams& params, double p_star, double m_star);
double analytic_fprime(const EconomyParams& params, const SteadyState& steady);

enum class Stability { Stable, Unstable, Marginal, Uncertified };
std::string_view to_string(Stability stability);
std::optional<Stability> stability_from_string(std::string_view text);

struct StabilityReport {
    double criterion;
    std::optional<double> fprime;
    double denominator;
    double marginal_tolerance;
    Stability classification;
    bool fprime_positive;
    bool denominator_positive;
    bool overshoot;  // f' < 0: outside the monotone regime

    bool operator==(const StabilityReport&) const = default;
};

StabilityReport stability_classification(const EconomyParams& params);
StabilityReport stability_classification(const EconomyParams& params, const SteadyState& steady);

}  // namespace olg
