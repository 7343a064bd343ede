#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tsecon/error.hpp"
#include "tsecon/unit_root.hpp"

using namespace tsecon;

TEST_SUITE("unit_root") {

TEST_CASE("ADF matches the two-step oracle") {
    oracle::Gen g(201);
    for (int rep = 0; rep < 20; ++rep) {
        const auto s = g.random_walk(100);
        const int lags = rep % 4;
        CHECK(adf_test(s, lags, TrendSpec::none).statistic == doctest::Approx(oracle::adf(s, lags, 0)).epsilon(1e-8));
        CHECK(adf_test(s, lags, TrendSpec::constant).statistic ==
              doctest::Approx(oracle::adf(s, lags, 1)).epsilon(1e-8));
        CHECK(adf_test(s, lags, TrendSpec::trend).statistic == doctest::Approx(oracle::adf(s, lags, 2)).epsilon(1e-8));
    }
}

TEST_CASE("DF-GLS matches the two-step oracle") {
    oracle::Gen g(202);
    for (int rep = 0; rep < 20; ++rep) {
        const auto s = g.ar1(150, 0.95);
        const int lags = 1 + rep % 4;
        CHECK(dfgls_test(s, lags, TrendSpec::constant).statistic ==
              doctest::Approx(oracle::dfgls(s, lags, false)).epsilon(1e-8));
        CHECK(dfgls_test(s, lags, TrendSpec::trend).statistic ==
              doctest::Approx(oracle::dfgls(s, lags, true)).epsilon(1e-8));
    }
}

TEST_CASE("degenerate and short inputs") {
    std::vector<double> trend(30);
    for (std::size_t i = 0; i < trend.size(); ++i) trend[i] = static_cast<double>(i + 1);
    CHECK_THROWS_AS((void)adf_test(trend, 0, TrendSpec::trend), DegenerateInput);
    const std::vector<double> flat(30, 4.2);
    CHECK_THROWS_AS((void)dfgls_test(flat, 1, TrendSpec::constant), DegenerateInput);
    const std::vector<double> tiny{1.0, 2.0, 1.5, 3.0};
    CHECK_THROWS_AS((void)adf_test(tiny, 2, TrendSpec::trend), DofError);
    CHECK_THROWS_AS((void)dfgls_test(tiny, 1, TrendSpec::none), RangeError);
}

TEST_CASE("tabulated critical values") {
    using L = SignificanceLevel;
    CHECK(critical_value(UnitRootTest::adf, TrendSpec::constant, 45, L::pct1) == doctest::Approx(-3.62).epsilon(0.03 / 3.62));
    CHECK(critical_value(UnitRootTest::dfgls, TrendSpec::trend, 45, L::pct1) == doctest::Approx(-3.77).epsilon(0.03 / 3.77));
    CHECK(critical_value(UnitRootTest::dfgls, TrendSpec::constant, 42, L::pct1) ==
          doctest::Approx(-2.63).epsilon(0.03 / 2.63));
    const auto cv = critical_values(UnitRootTest::adf, TrendSpec::trend, 100);
    CHECK(cv.pct1 < cv.pct5);
    CHECK(cv.pct5 < cv.pct10);
    CHECK_THROWS_AS((void)critical_values(UnitRootTest::adf, TrendSpec::constant, 10), RangeError);
    CHECK_THROWS_AS((void)critical_values(UnitRootTest::dfgls, TrendSpec::none, 50), RangeError);
}

TEST_CASE("property: ADF is invariant under affine maps and added trends") {
    oracle::Gen g(203);
    for (int rep = 0; rep < 200; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(25, 120));
        const auto s = rep % 2 == 0 ? g.random_walk(n) : g.ar1(n, 0.6);
        const int lags = g.integer(0, 4);
        const double a = g.uniform(0.1, 50.0) * (g.integer(0, 1) == 0 ? -1.0 : 1.0);
        const double b = g.uniform(-100.0, 100.0);
        const double c = g.uniform(-5.0, 5.0);
        std::vector<double> affine(n);
        std::vector<double> trended(n);
        for (std::size_t t = 0; t < n; ++t) {
            affine[t] = a * s[t] + b;
            trended[t] = s[t] + c * static_cast<double>(t + 1);
        }
        const double base_c = adf_test(s, lags, TrendSpec::constant).statistic;
        CHECK(adf_test(affine, lags, TrendSpec::constant).statistic == doctest::Approx(base_c).epsilon(1e-8));
        const double base_t = adf_test(s, lags, TrendSpec::trend).statistic;
        CHECK(adf_test(affine, lags, TrendSpec::trend).statistic == doctest::Approx(base_t).epsilon(1e-8));
        CHECK(adf_test(trended, lags, TrendSpec::trend).statistic == doctest::Approx(base_t).epsilon(1e-7));
    }
}

TEST_CASE("property: DF-GLS equals the oracle on arbitrary inputs") {
    oracle::Gen g(204);
    for (int rep = 0; rep < 100; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(30, 150));
        const auto s = g.ar1(n, g.uniform(0.0, 1.0));
        const int lags = g.integer(1, 4);
        const bool trend = g.integer(0, 1) == 1;
        CHECK(dfgls_test(s, lags, trend ? TrendSpec::trend : TrendSpec::constant).statistic ==
              doctest::Approx(oracle::dfgls(s, lags, trend)).epsilon(1e-8));
    }
}

}
