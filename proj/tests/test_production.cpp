#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "olg/errors.hpp"
#include "olg/production.hpp"

using namespace olg;

TEST_CASE("markup price") {
    CHECK(markup_price(1.0, {1.0, 2.0}) == 2.0);
    for (double y : {0.5, 1.0, 3.0})
        for (double sigma : {1.5, 2.0, 10.0}) {
            const Technology tech{y, sigma};
            CHECK(markup_price((1.0 - tech.mu()) * y, tech) == doctest::Approx(1.0).epsilon(1e-15));
        }
    CHECK(markup_price(1.0, {1.0, 10.0}) == doctest::Approx(10.0 / 9.0).epsilon(1e-15));
    CHECK(markup_price(1.0, {1.0, 10.0}) < markup_price(1.0, {1.0, 2.0}));
    CHECK_THROWS_AS(markup_price(0.0, {1.0, 2.0}), DomainError);
}

TEST_CASE("real wage") {
    CHECK(real_wage({1.0, 2.0}) == 0.5);
    CHECK(real_wage({3.0, 4.0}) == doctest::Approx(2.25).epsilon(1e-15));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (int i = 0; i < 50; ++i) {
        const Technology tech{u(rng), 1.0 + u(rng)};
        const double w = u(rng);
        CHECK(std::abs(w / markup_price(w, tech) - real_wage(tech)) <= 1e-15 * real_wage(tech) * 4);
    }
}

TEST_CASE("markup price satisfies the profit FOC") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Technology tech{u(rng), 1.0 + u(rng)};
        const double w = u(rng);
        const double p = markup_price(w, tech);
        CHECK(std::abs(p * (1.0 - 1.0 / tech.sigma) * tech.y - w) <= 1e-12 * w);
    }
}

TEST_CASE("demand curve") {
    CHECK(demand_curve(2.0, 2.0, 50.0, 2.0) == 25.0);
    CHECK(demand_curve(2.0, 2.0, 0.0, 2.0) == 0.0);
    CHECK(demand_curve(4.0, 2.0, 50.0, 2.0) == doctest::Approx(6.25).epsilon(1e-15));
    CHECK_THROWS_AS(demand_curve(-1.0, 2.0, 50.0, 2.0), DomainError);
    CHECK_THROWS_AS(demand_curve(1.0, 0.0, 50.0, 2.0), DomainError);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double q = u(rng), p_index = u(rng), y = 10.0 * u(rng), sigma = 1.0 + u(rng);
        const double price = inverse_demand(q, p_index, y, sigma);
        CHECK(testing::rel_err(demand_curve(price, p_index, y, sigma), q) <= 1e-10);
    }
}

TEST_CASE("profit at a labor input") {
    const Technology tech{1.0, 2.0};
    CHECK(profit_at(0.0, 1.0, 2.0, 50.0, tech) == 0.0);
    CHECK_THROWS_AS(profit_at(-1.0, 1.0, 2.0, 50.0, tech), DomainError);

    // Markup optimum of the reference economy: Ll = 25 sells at p = 2; profit share mu.
    const double ll = optimal_labor_input(1.0, 2.0, 50.0, tech);
    CHECK(ll == doctest::Approx(25.0).epsilon(1e-14));
    CHECK(profit_at(ll, 1.0, 2.0, 50.0, tech) == doctest::Approx(0.5 * 2.0 * ll * 1.0).epsilon(1e-12));
}

TEST_CASE("grid search reproduces the markup optimum") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int i = 0; i < 20; ++i) {
        const Technology tech{u(rng), 1.2 + 2.0 * u(rng)};
        const double w = u(rng), p_index = u(rng), demand = 30.0 * u(rng);
        const auto grid = profit_argmax_grid(w, p_index, demand, tech);
        const double rule = optimal_labor_input(w, p_index, demand, tech);
        CHECK(std::abs(grid.labor_input - rule) <= grid.grid_step);
        const double p = inverse_demand(rule * tech.y, p_index, demand, tech.sigma);
        CHECK(testing::rel_err(p, markup_price(w, tech)) <= 1e-10);
    }
}

TEST_CASE("aggregate profit closes the output market") {
    const Technology tech{1.0, 2.0};
    CHECK(aggregate_profit(2.0, 1.0, 25.0, tech) == 25.0);
    CHECK(aggregate_profit(2.0, 1.0, 0.0, tech) == 0.0);
    CHECK(aggregate_profit(markup_price(1.0, tech), 1.0, 25.0, tech) == tech.mu() * 2.0 * 25.0 * tech.y);

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Technology t{u(rng), 1.0 + u(rng)};
        const double p = u(rng), w = u(rng), ll = 10.0 * u(rng);
        const double revenue = p * ll * t.y;
        CHECK(std::abs(w * ll + aggregate_profit(p, w, ll, t) - revenue) <= 4 * 2.3e-16 * revenue);
    }
}
