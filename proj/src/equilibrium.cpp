#include "olg/equilibrium.hpp"

#include <algorithm>
#include <cmath>

#include "olg/errors.hpp"

namespace olg {

namespace {

void require_field(bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(std::string("params.") + field, what);
}

constexpr double kRegimeBand = 1e-10;

}  // namespace

HouseholdParams EconomyParams::household() const {
    return HouseholdParams{theta, sigma, eta, gamma0, kappa, d};
}

Technology EconomyParams::technology() const { return Technology{y, sigma}; }

double EconomyParams::alpha() const {
    // Stationary prefs; the old generation's share equals the young's.
    return expenditure_shares(household(), 1.0).alpha;
}

void EconomyParams::validate() const {
    household().validate();
    technology().validate();
    require_field(std::isfinite(labor_force) && labor_force > 0.0, "L_f", "must be > 0");
    require_field(std::isfinite(g) && g >= 0.0, "g", "must be >= 0");
    require_field(std::isfinite(q) && q >= 0.0, "q", "must be >= 0");
    require_field(std::isfinite(gamma_adj) && gamma_adj > 0.0, "gamma_adj", "must be > 0");
    require_field(std::isfinite(wage) && wage > 0.0, "W", "must be > 0");
}

double unemployment_benefit_tax(double employed, double labor_force, double debt_nominal) {
    if (!(employed > 0.0)) throw DomainError("unemployment_benefit_tax: no employed consumers");
    if (employed > labor_force) throw DomainError("unemployment_benefit_tax: employment above labor force");
    return debt_nominal * (labor_force - employed) / employed;
}

double pension_tax(double employed, double labor_force, double pension_nominal) {
    if (!(employed > 0.0)) throw DomainError("pension_tax: no employed consumers");
    if (employed > labor_force) throw DomainError("pension_tax: employment above labor force");
    return labor_force * pension_nominal / employed;
}

FiscalFlows fiscal_flows(double employed, double p, double d_bar, const EconomyParams& params) {
    return FiscalFlows{
        unemployment_benefit_tax(employed, params.labor_force, d_bar),
        pension_tax(employed, params.labor_force, p * params.q),
        d_bar,
        p * params.g,
    };
}

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::UnderEmployment: return "UnderEmployment";
        case Regime::FullEmployment: return "FullEmployment";
        case Regime::ExcessDemand: return "ExcessDemand";
    }
    return "?";
}

ActivityCoefficients activity_coefficients(double p_now, double m_tilde, double d_bar,
                                           const EconomyParams& params) {
    if (!(p_now > 0.0)) throw DomainError("activity_coefficients: price must be positive");
    const double alpha = params.alpha();
    const double lf = params.labor_force;
    const double scale = (1.0 - alpha) * p_now * params.y;
    if (!(scale > 0.0)) throw DomainError("activity_coefficients: (1 - alpha) P y must be positive");

    // Y with T = G = P g, new childhood borrowing P d, pension P q, M = M~ + L_f P q,
    // solved for L*l; the expected pension alpha L_f P' q is the only P' term.
    const double predetermined = (1.0 - alpha) * p_now * params.g + lf * p_now * params.d -
                                 alpha * lf * d_bar + (1.0 - alpha) * lf * p_now * params.q + m_tilde;
    return {predetermined / scale, alpha * lf * params.q / scale};
}

double full_employment_labor(const EconomyParams& params) {
    const double omega = real_wage(params.technology());
    return params.labor_force * labor_supply(omega, 1.0, params.household());
}

EmploymentOutcome employment_from_demand(double p_now, double p_next, double m_tilde, double d_bar,
                                         const EconomyParams& params, double ll_full) {
    if (!(p_next > 0.0)) throw DomainError("employment_from_demand: next price must be positive");
    const auto coeffs = activity_coefficients(p_now, m_tilde, d_bar, params);
    return classify_activity(coeffs.intercept + coeffs.slope * p_next, ll_full);
}

EmploymentOutcome classify_activity(double notional, double ll_full) {
    Regime regime = Regime::FullEmployment;
    if (notional < ll_full * (1.0 - kRegimeBand))
        regime = Regime::UnderEmployment;
    else if (notional > ll_full * (1.0 + kRegimeBand))
        regime = Regime::ExcessDemand;
    return {notional, std::clamp(notional, 0.0, ll_full), regime};
}

EmploymentOutcome employment_from_demand(double p_now, double p_next, double m_tilde, double d_bar,
                                         const EconomyParams& params) {
    return employment_from_demand(p_now, p_next, m_tilde, d_bar, params, full_employment_labor(params));
}

DemandComponents generation_demand_decomposition(double p_now, double p_next, double m_tilde,
                                                 double d_bar, double ll_income,
                                                 const EconomyParams& params) {
    if (!(p_now > 0.0)) throw DomainError("demand decomposition: price must be positive");
    const double alpha = params.alpha();
    const double lf = params.labor_force;
    const double tax = p_now * params.g;
    const double young_income = p_now * ll_income * params.y - tax - lf * d_bar +
                                lf * p_next * params.q - lf * p_now * params.q;
    return DemandComponents{
        alpha * young_income,
        m_tilde + lf * p_now * params.q,
        lf * p_now * params.d,
        tax,
    };
}

double effective_demand(double p_now, double p_next, double m_tilde, double d_bar,
                        const EconomyParams& params) {
    const auto employment = employment_from_demand(p_now, p_next, m_tilde, d_bar, params);
    return generation_demand_decomposition(p_now, p_next, m_tilde, d_bar, employment.ll_notional, params)
        .total();
}

double fprime_denominator(const EconomyParams& params, double p_star) {
    const double alpha = params.alpha();
    return (1.0 - alpha) * p_star * p_star * params.y -
           params.gamma_adj * alpha * params.labor_force * p_star * params.q;
}

double analytic_fprime(const EconomyParams& params, double p_star, double m_star) {
    const double alpha = params.alpha();
    const double lf = params.labor_force;
    const double denominator = fprime_denominator(params, p_star);
    if (!(denominator > 0.0))
        throw PreconditionViolated("analytic_fprime: (1-alpha) P*^2 y - gamma alpha L_f P* q <= 0");
    const double criterion = m_star - lf * p_star * params.q - alpha * lf * p_star * params.d;
    return 1.0 - params.gamma_adj * criterion / denominator;
}

double analytic_fprime(const EconomyParams& params, const SteadyState& steady) {
    return analytic_fprime(params, steady.p_star, steady.m_star);
}

SteadyState full_employment_steady_state(const EconomyParams& params) {
    params.validate();
    const auto tech = params.technology();
    const double alpha = params.alpha();
    const double lf = params.labor_force;

    const double p_star = markup_price(params.wage, tech);
    const double l_star = labor_supply(real_wage(tech), 1.0, params.household());
    const double ll_star = lf * l_star;
    const double savings_base = ll_star * params.y - params.g - lf * params.d;
    if (!(savings_base > 0.0))
        throw InfeasibleCalibration("full-employment output L_f l* y must exceed g + L_f d");

    SteadyState s{};
    s.p_star = p_star;
    s.l_star = l_star;
    s.ll_star = ll_star;
    s.m_star = (1.0 - alpha) * p_star * savings_base;
    s.m_tilde_star = s.m_star - lf * p_star * params.q;
    s.d_bar_star = p_star * params.d;
    s.y_star_nominal = p_star * ll_star * params.y;
    s.alpha = alpha;
    s.denominator = fprime_denominator(params, p_star);
    s.criterion = s.m_star - lf * p_star * params.q - alpha * lf * p_star * params.d;
    if (s.denominator > 0.0) s.fprime = analytic_fprime(params, p_star, s.m_star);
    return s;
}

std::string_view to_string(Stability stability) {
    switch (stability) {
        case Stability::Stable: return "Stable";
        case Stability::Unstable: return "Unstable";
        case Stability::Marginal: return "Marginal";
        case Stability::Uncertified: return "Uncertified";
    }
    return "?";
}

std::optional<Stability> stability_from_string(std::string_view text) {
    for (auto s : {Stability::Stable, Stability::Unstable, Stability::Marginal, Stability::Uncertified})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

StabilityReport stability_classification(const EconomyParams& params, const SteadyState& steady) {
    StabilityReport report{};
    report.criterion = steady.criterion;
    report.fprime = steady.fprime;
    report.denominator = steady.denominator;
    report.marginal_tolerance = 1e-9 * (1.0 - steady.alpha) * steady.p_star * steady.p_star * params.y;
    report.denominator_positive = steady.denominator > 0.0;
    report.fprime_positive = steady.fprime.has_value() && *steady.fprime > 0.0;
    report.overshoot = steady.fprime.has_value() && *steady.fprime < 0.0;

    if (std::abs(steady.criterion) <= report.marginal_tolerance)
        report.classification = Stability::Marginal;
    else if (!report.denominator_positive)
        report.classification = Stability::Uncertified;
    else
        // criterion > 0 gives f' < 1; an overshooting f' <= -1 is still unstable.
        report.classification = std::abs(*steady.fprime) < 1.0 ? Stability::Stable : Stability::Unstable;
    return report;
}

StabilityReport stability_classification(const EconomyParams& params) {
    return stability_classification(params, full_employment_steady_state(params));
}

}  // namespace olg
