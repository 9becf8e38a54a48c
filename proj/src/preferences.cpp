#include "olg/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "olg/errors.hpp"

namespace olg {

namespace {

void require(bool ok, const char* path, const char* field, const char* what) {
    if (!ok) throw ValidationError(std::string(path) + "." + field, what);
}

}  // namespace

void HouseholdParams::validate(const char* path) const {
    require(std::isfinite(theta) && theta > 0.0 && theta < 1.0, path, "theta", "must lie in (0, 1)");
    require(std::isfinite(sigma) && sigma > 1.0, path, "sigma", "must be > 1");
    require(std::isfinite(eta) && eta > 0.0, path, "eta", "must be > 0");
    require(std::isfinite(gamma0) && gamma0 > 0.0, path, "gamma0", "must be > 0");
    require(std::isfinite(kappa) && kappa >= 0.0, path, "kappa", "must be >= 0");
    require(std::isfinite(d) && d >= 0.0, path, "d", "must be >= 0");
    require(kappa == 0.0 || d > 0.0, path, "kappa", "kappa > 0 requires d > 0");
}

PricePair::PricePair(double p1, double p2) : p1_(p1), p2_(p2), rho_(p2 / p1) {
    if (!(p1 > 0.0) || !(p2 > 0.0)) throw DomainError("PricePair: prices must be positive");
}

ExpenditureShares expenditure_shares(const HouseholdParams& prefs, double rho) {
    if (!(rho > 0.0)) throw DomainError("expenditure_shares: rho must be positive");
    // Cobb-Douglas: the share does not move with rho.
    return {prefs.theta, 1.0 - prefs.theta};
}

BasketDemand consumption_demand(double income_nominal, const PricePair& prices, double alpha) {
    if (!(income_nominal >= 0.0)) throw DomainError("consumption_demand: negative income");
    return {alpha * income_nominal / prices.p1(), (1.0 - alpha) * income_nominal / prices.p2()};
}

double good_demand(double p_z, double p_index, double expenditure, double sigma) {
    if (!(p_z > 0.0) || !(p_index > 0.0)) throw DomainError("good_demand: prices must be positive");
    if (!(expenditure >= 0.0)) throw DomainError("good_demand: negative expenditure");
    return std::pow(p_z / p_index, -sigma) * expenditure / p_index;
}

double price_index(std::span<const double> midpoint_prices, double sigma) {
    if (midpoint_prices.empty()) throw DomainError("price_index: empty sample");
    for (double p : midpoint_prices)
        if (!(p > 0.0)) throw DomainError("price_index: prices must be positive");

    // Symmetric firms.
    const double first = midpoint_prices.front();
    if (std::all_of(midpoint_prices.begin(), midpoint_prices.end(),
                    [first](double p) { return p == first; }))
        return first;

    const double exponent = 1.0 - sigma;
    double sum = 0.0;
    for (double p : midpoint_prices) sum += std::pow(p, exponent);
    return std::pow(sum / static_cast<double>(midpoint_prices.size()), 1.0 / exponent);
}

double price_index(const std::function<double(double)>& price_of, double sigma, std::size_t grid) {
    if (grid == 0) throw DomainError("price_index: empty sample");
    std::vector<double> samples(grid);
    const double width = 1.0 / static_cast<double>(grid);
    for (std::size_t i = 0; i < grid; ++i) samples[i] = price_of((static_cast<double>(i) + 0.5) * width);
    return price_index(std::span<const double>(samples), sigma);
}

double basket_utility_per_income(const HouseholdParams& prefs, double rho) {
    if (!(rho > 0.0)) throw DomainError("basket_utility_per_income: rho must be positive");
    const double theta = prefs.theta;
    return std::pow(theta, theta) * std::pow((1.0 - theta) / rho, 1.0 - theta);
}

double income_marginal_utility(const HouseholdParams& prefs, double rho) {
    const double childhood = prefs.kappa == 0.0 ? 1.0 : std::pow(prefs.d, prefs.kappa);
    return basket_utility_per_income(prefs, rho) * childhood;
}

double labor_disutility(const HouseholdParams& prefs, double l) {
    return prefs.gamma0 * std::pow(l, 1.0 + prefs.eta) / (1.0 + prefs.eta);
}

double labor_disutility_slope(const HouseholdParams& prefs, double l) {
    return prefs.gamma0 * std::pow(l, prefs.eta);
}

double labor_disutility_curvature(const HouseholdParams& prefs, double l) {
    return prefs.gamma0 * prefs.eta * std::pow(l, prefs.eta - 1.0);
}

double labor_supply(double omega, double rho, const HouseholdParams& prefs) {
    if (!(omega > 0.0)) throw DomainError("labor_supply: real wage must be positive");
    const double marginal_value = income_marginal_utility(prefs, rho) * omega;
    return std::pow(marginal_value / prefs.gamma0, 1.0 / prefs.eta);
}

double labor_supply_numeric(double omega, double rho, const HouseholdParams& prefs) {
    if (!(omega > 0.0)) throw DomainError("labor_supply_numeric: real wage must be positive");
    const double target = income_marginal_utility(prefs, rho) * omega;
    auto residual = [&](double l) { return target - labor_disutility_slope(prefs, l); };
    const double tolerance = 1e-12 * std::max(1.0, target);

    double lo = std::numeric_limits<double>::min();
    double hi = 1.0;
    if (!(residual(lo) > 0.0)) throw NumericalError("labor_supply_numeric: no sign change at lower end");
    int doublings = 0;
    while (residual(hi) > 0.0) {
        if (++doublings > 64) throw NumericalError("labor_supply_numeric: bracket not found");
        lo = hi;
        hi *= 2.0;
    }

    // Gamma' is strictly increasing, so the bracket holds exactly one root.
    for (;;) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return std::abs(residual(lo)) < std::abs(residual(hi)) ? lo : hi;
        const double r = residual(mid);
        if (std::abs(r) <= tolerance) return mid;
        (r > 0.0 ? lo : hi) = mid;
    }
}

double labor_supply_slope(double omega, double rho, const HouseholdParams& prefs) {
    const double l = labor_supply(omega, rho, prefs);
    const double curvature = labor_disutility_curvature(prefs, l);
    if (!(curvature > 0.0)) throw DomainError("labor_supply_slope: Gamma'' must be positive");
    const double phi_i = income_marginal_utility(prefs, rho);
    constexpr double phi_ii = 0.0;  // phi is linear in I
    return (phi_i + phi_ii * omega * l) / (curvature - phi_ii * omega * omega);
}

double indirect_utility(double income_real, double rho, double l, double d_childhood,
                        const HouseholdParams& prefs) {
    if (!(income_real >= 0.0)) throw DomainError("indirect_utility: negative income");
    const double childhood = prefs.kappa == 0.0 ? 1.0 : std::pow(d_childhood, prefs.kappa);
    return basket_utility_per_income(prefs, rho) * income_real * childhood - labor_disutility(prefs, l);
}

}  // namespace olg
