#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tsecon/cointegration.hpp"
#include "tsecon/error.hpp"

using namespace tsecon;

namespace {

Series ser(std::vector<double> v, const char* name) { return Series(name, 1, std::move(v)); }

/// y = slope * x + stationary AR(1) noise, x a random walk.
std::pair<Series, Series> cointegrated_pair(oracle::Gen& g, std::size_t n, double slope, double phi = 0.5) {
    const auto x = g.random_walk(n);
    const auto u = g.ar1(n, phi);
    std::vector<double> y(n);
    for (std::size_t t = 0; t < n; ++t) y[t] = slope * x[t] + u[t];
    return {ser(y, "y"), ser(x, "x")};
}

}  // namespace

TEST_SUITE("cointegration") {

TEST_CASE("difference test on identical series is degenerate") {
    const Series m("m", 1960, {0.01, 0.03, 0.02, 0.05, 0.04, 0.06, 0.03, 0.02, 0.01, 0.04, 0.05, 0.02,
                               0.03, 0.06, 0.07, 0.05, 0.04, 0.03, 0.02, 0.03, 0.04, 0.05, 0.06, 0.02});
    CHECK_THROWS_AS((void)difference_test(m, m, DifferenceVariant::direct), DegenerateInput);
}

TEST_CASE("difference test variants") {
    oracle::Gen g(301);
    const Series m("m", 1960, g.normals(45, 0.02));
    const Series p("p", 1958, g.normals(47, 0.02));
    const auto direct = difference_test(m, p, DifferenceVariant::direct);
    CHECK(direct.difference.start_year() == 1960);
    CHECK(direct.adf.size() == 1);
    CHECK(direct.dfgls.size() == 3);
    const auto ma3 = difference_test(m, p, DifferenceVariant::ma3);
    CHECK(ma3.difference.start_year() == 1960);
    CHECK(ma3.difference[0] == doctest::Approx(m.at_year(1960) - (p.at_year(1958) + p.at_year(1959) + p.at_year(1960)) / 3));
}

TEST_CASE("Engle-Granger on a constructed pair and on independent walks") {
    oracle::Gen g(302);
    const auto [y, x] = cointegrated_pair(g, 200, 2.0);
    const auto eg = engle_granger(y, x);
    REQUIRE(eg.cointegrated_at.has_value());
    CHECK(*eg.cointegrated_at == SignificanceLevel::pct1);
    CHECK(eg.first_stage.coefficients[0] == doctest::Approx(2.0).epsilon(0.05));

    int not_detected = 0;
    for (int rep = 0; rep < 500; ++rep) {
        const auto r = engle_granger(ser(g.random_walk(200), "y"), ser(g.random_walk(200), "x"));
        if (!r.residual_test.rejects(SignificanceLevel::pct5)) ++not_detected;
    }
    CHECK(not_detected >= 450);

    CHECK_THROWS_AS((void)engle_granger(x.renamed("y"), x), DegenerateInput);
}

TEST_CASE("Engle-Granger critical values tighten with n") {
    const auto small = engle_granger_critical_values(45);
    const auto large = engle_granger_critical_values(1000);
    CHECK(small.pct5 < large.pct5);
    CHECK(large.pct5 == doctest::Approx(-3.3377 - 5.967 / 1000 - 8.98 / 1e6).epsilon(1e-9));
}

TEST_CASE("Johansen 5% trace critical values") {
    CHECK(johansen_critical(JohansenTrend::constant, 2) == 15.41);
    CHECK(johansen_critical(JohansenTrend::constant, 1) == 3.76);
    CHECK(johansen_critical(JohansenTrend::rconstant, 2) == 19.96);
    CHECK(johansen_critical(JohansenTrend::rconstant, 1) == 9.42);
    CHECK(johansen_critical(JohansenTrend::none, 2) == 12.53);
    CHECK(johansen_critical(JohansenTrend::none, 1) == 3.84);
    CHECK_THROWS_AS((void)johansen_critical(JohansenTrend::none, 3), RangeError);
    CHECK_THROWS_AS((void)johansen_critical(JohansenTrend::none, 0), RangeError);
}

TEST_CASE("Johansen eigenvalues match the closed-form bivariate oracle") {
    oracle::Gen g(303);
    for (int rep = 0; rep < 50; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(30, 200));
        const auto [y, x] = rep % 2 == 0 ? cointegrated_pair(g, n, g.uniform(-3, 3))
                                         : std::pair{ser(g.random_walk(n), "y"), ser(g.random_walk(n), "x")};
        const Series data[] = {y, x};
        for (bool demean : {true, false}) {
            const auto r = johansen_trace(data, {demean ? JohansenTrend::constant : JohansenTrend::none, 1});
            std::vector<double> yv(y.values().begin(), y.values().end());
            std::vector<double> xv(x.values().begin(), x.values().end());
            const auto o = oracle::johansen_var1(yv, xv, demean);
            CHECK(r.eigenvalues[0] == doctest::Approx(o.large).epsilon(1e-8));
            CHECK(r.eigenvalues[1] == doctest::Approx(o.small).epsilon(1e-7));
            const double t_eff = static_cast<double>(n - 1);
            CHECK(*r.rows[0].trace_statistic ==
                  doctest::Approx(-t_eff * (std::log(1 - o.large) + std::log(1 - o.small))).epsilon(1e-7));
        }
    }
}

TEST_CASE("Johansen recovers a planted cointegrating vector") {
    oracle::Gen g(304);
    const auto [y, x] = cointegrated_pair(g, 300, 2.0);
    const Series data[] = {y, x};
    // Driftless data: the constant belongs inside the cointegrating relation.
    const auto r = johansen_trace(data, {JohansenTrend::rconstant, 2});
    CHECK(r.selected_rank == 1);
    const auto beta = normalized_cointegrating_vector(r);
    CHECK(beta[0] == 1.0);
    CHECK(beta[1] == doctest::Approx(-2.0).epsilon(0.05));
    const Series same[] = {x, x.renamed("x2")};
    CHECK_THROWS_AS((void)johansen_trace(same, {JohansenTrend::constant, 2}), CollinearError);
}

TEST_CASE("property: Johansen ordering, monotonicity and likelihood bookkeeping") {
    oracle::Gen g(305);
    for (int rep = 0; rep < 150; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(40, 200));
        const auto [y, x] = rep % 3 == 0 ? cointegrated_pair(g, n, g.uniform(-3, 3), g.uniform(0, 0.9))
                                         : std::pair{ser(g.random_walk(n), "y"), ser(g.random_walk(n), "x")};
        const Series data[] = {y, x};
        const Series swapped[] = {x, y};
        const auto trend = static_cast<JohansenTrend>(rep % 3);
        const int lags = g.integer(1, 4);
        const auto r = johansen_trace(data, {trend, lags});
        const auto s = johansen_trace(swapped, {trend, lags});

        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(r.eigenvalues[0] >= r.eigenvalues[1]);
        CHECK(r.eigenvalues[1] >= 0.0);
        CHECK(r.eigenvalues[0] < 1.0);
        REQUIRE(r.rows.size() == 3);
        CHECK(*r.rows[0].trace_statistic > *r.rows[1].trace_statistic);
        CHECK(*r.rows[1].trace_statistic > 0.0);
        const double t_eff = static_cast<double>(r.n_effective);
        for (int k = 1; k <= 2; ++k) {
            const double gain = r.rows[static_cast<std::size_t>(k)].log_likelihood -
                                r.rows[static_cast<std::size_t>(k - 1)].log_likelihood;
            CHECK(gain >= 0.0);
            const double expected = -0.5 * t_eff * std::log(1.0 - r.eigenvalues[k - 1]);
            CHECK(gain == doctest::Approx(expected).epsilon(1e-6));
        }
        for (int k = 0; k < 2; ++k) {
            CHECK(s.eigenvalues[k] == doctest::Approx(r.eigenvalues[k]).epsilon(1e-8));
            CHECK(*s.rows[static_cast<std::size_t>(k)].trace_statistic ==
                  doctest::Approx(*r.rows[static_cast<std::size_t>(k)].trace_statistic).epsilon(1e-8));
        }
        CHECK(s.selected_rank == r.selected_rank);
    }
}

TEST_CASE("property: Engle-Granger statistic ignores the scale of y") {
    oracle::Gen g(306);
    for (int rep = 0; rep < 100; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(30, 150));
        const auto [y, x] = cointegrated_pair(g, n, g.uniform(-3, 3), g.uniform(0, 0.95));
        const double a = g.uniform(0.01, 100.0) * (g.integer(0, 1) == 0 ? -1.0 : 1.0);
        const int lags = g.integer(0, 2);
        const double base = engle_granger(y, x, lags).residual_test.statistic;
        CHECK(engle_granger(scale(y, a), x, lags).residual_test.statistic == doctest::Approx(base).epsilon(1e-8));
    }
}

}
