#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tsecon/demographics.hpp"
#include "tsecon/error.hpp"

using namespace tsecon;

namespace {

/// Cohorts where N15(t) tracks N14(t-1) up to small noise, with population
/// controls at each census year scaling both series from that year on.
CohortPair cohorts(oracle::Gen& g, int start, std::size_t n, std::vector<int> census, double revision,
                   double noise = 0.0) {
    std::vector<double> n14{3.5e6};
    while (n14.size() < n) n14.push_back(n14.back() * (1.0 + g.uniform(0.01, 0.03)));
    std::vector<double> n15(n);
    n15[0] = n14[0] * 1.01;
    for (std::size_t t = 1; t < n; ++t) n15[t] = n14[t - 1] + g.normal(noise);
    for (int c : census) {
        for (std::size_t t = static_cast<std::size_t>(c - start); t < n; ++t) {
            n14[t] *= 1.0 + revision;
            n15[t] *= 1.0 + revision;
        }
    }
    return {Series("n15", start, n15), Series("n14", start, n14), std::move(census)};
}

}  // namespace

TEST_SUITE("demographics") {

TEST_CASE("cohort difference") {
    oracle::Gen g(601);
    const CohortPair p = cohorts(g, 1960, 30, {}, 0.0);
    const Series d = cohort_difference(p);
    CHECK(d.start_year() == 1961);
    for (double v : d.values()) CHECK(v == 0.0);
    const CohortPair tiny{Series("n15", 1960, {1.0, 2.0}), Series("n14", 1960, {1.0, 2.0}), {}};
    CHECK_THROWS_AS((void)cohort_difference(tiny), LengthError);
}

TEST_CASE("ratio diagnostic") {
    oracle::Gen g(602);
    const CohortPair same = cohorts(g, 1960, 30, {}, 0.0);
    const Series zero_ratio = ratio_diagnostic(same);
    for (double v : zero_ratio.values()) CHECK(std::abs(v) < 1e-9);

    const CohortPair stepped = cohorts(g, 1960, 30, {1980}, 0.05, 2000.0);
    const Series r = ratio_diagnostic(stepped);
    int peak = r.start_year();
    for (int t = r.start_year(); t <= r.end_year(); ++t) {
        if (std::abs(r.at_year(t)) > std::abs(r.at_year(peak))) peak = t;
    }
    CHECK(peak == 1980);
    const int census[] = {1980};
    CHECK(quiet_share(r, census) > 0.7);

    const CohortPair flat{Series("n15", 1960, {10, 11, 12, 13}), Series("n14", 1960, {5, 5, 6, 7}), {}};
    try {
        (void)ratio_diagnostic(flat);
        FAIL("expected DivideByZero");
    } catch (const DivideByZero& e) {
        CHECK(e.year() == 1962);
    }
}

TEST_CASE("census adjacency") {
    const int census[] = {1970, 1980};
    CHECK(census_adjacent(1969, census));
    CHECK(census_adjacent(1981, census));
    CHECK_FALSE(census_adjacent(1975, census));
    CHECK(census_adjacent(1972, census, 2));
}

TEST_CASE("census spike correction") {
    oracle::Gen g(603);
    const CohortPair none = cohorts(g, 1960, 40, {}, 0.0, 1000.0);
    const CohortPair same = census_spike_correction(none);
    CHECK(same.n14 == none.n14);
    CHECK(same.n15 == none.n15);

    const CohortPair broken = cohorts(g, 1960, 40, {1980}, 0.04, 1000.0);
    const double raw = std::abs(cohort_difference(broken).at_year(1980));
    const double fixed = std::abs(cohort_difference(census_spike_correction(broken)).at_year(1980));
    CHECK(fixed < 0.1 * raw);

    const CohortPair early = cohorts(g, 1960, 40, {1961}, 0.04);
    CHECK_THROWS_AS((void)census_spike_correction(early), RangeError);
}

TEST_CASE("property: census correction touches only census-adjacent years") {
    oracle::Gen g(604);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<int> census;
        for (int c = 1960 + g.integer(3, 8); c < 2000; c += g.integer(5, 12)) census.push_back(c);
        const CohortPair p = cohorts(g, 1960, 41, census, g.uniform(-0.05, 0.05), 3000.0);
        const CohortPair q = census_spike_correction(p);
        CHECK(q.n15 == p.n15);
        for (int t = 1960; t <= 2000; ++t) {
            if (!census_adjacent(t, census)) CHECK(q.n14.at_year(t) == p.n14.at_year(t));
        }
    }
}

TEST_CASE("piecewise correction") {
    const Series c("d", 1990, std::vector<double>(8, 3.25));
    const Segment whole[] = {{1990, 1997, SegmentMode::constant}};
    const Series demeaned = piecewise_correction(c, whole);
    for (double v : demeaned.values()) CHECK(v == 0.0);

    std::vector<double> line;
    for (int i = 0; i < 8; ++i) line.push_back(2.0 * i - 1.0);
    const Segment linear[] = {{1990, 1997, SegmentMode::linear}};
    const Series detrended = piecewise_correction(Series("d", 1990, line), linear);
    for (double v : detrended.values()) CHECK(std::abs(v) < 1e-12);

    const Segment overlap[] = {{1990, 1994, SegmentMode::constant}, {1994, 1997, SegmentMode::constant}};
    CHECK_THROWS_AS((void)piecewise_correction(c, overlap), SegmentError);
    const Segment gap[] = {{1990, 1993, SegmentMode::constant}, {1995, 1997, SegmentMode::constant}};
    CHECK_THROWS_AS((void)piecewise_correction(c, gap), SegmentError);
    const Segment reversed[] = {{1997, 1990, SegmentMode::constant}};
    CHECK_THROWS_AS((void)piecewise_correction(c, reversed), SegmentError);
    const Segment outside[] = {{1985, 1997, SegmentMode::constant}};
    CHECK_THROWS_AS((void)piecewise_correction(c, outside), RangeError);

    const auto defaults = default_segments();
    REQUIRE(defaults.size() == 4);
    CHECK(defaults[0].mode == SegmentMode::linear);
    CHECK(defaults[0].first_year == 1963);
    CHECK(defaults[3].last_year == 2004);
}

TEST_CASE("property: constant-mode segments are demeaned exactly") {
    oracle::Gen g(605);
    for (int rep = 0; rep < 200; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(4, 50));
        const double level = g.uniform(-1e4, 1e4);
        std::vector<double> v(n);
        for (auto& x : v) x = level + g.normal(g.uniform(1.0, 3000.0));
        const Series d("d", 1960, v);
        std::vector<Segment> segs;
        int first = 1960;
        while (first <= d.end_year()) {
            const int last = std::min(d.end_year(), first + g.integer(0, 12));
            segs.push_back({first, last, g.integer(0, 1) == 0 ? SegmentMode::constant : SegmentMode::linear});
            first = last + 1;
        }
        const Series out = piecewise_correction(d, segs);
        double scale = 0.0;
        for (double x : v) scale = std::max(scale, std::abs(x));
        for (const auto& s : segs) {
            double mean = 0.0;
            for (int t = s.first_year; t <= s.last_year; ++t) mean += out.at_year(t);
            mean /= (s.last_year - s.first_year + 1);
            CHECK(std::abs(mean) < 1e-9 * scale);
        }
    }
}

TEST_CASE("cohort unit-root grid") {
    oracle::Gen g(606);
    const CohortPair p = cohorts(g, 1960, 45, {1970, 1980, 1990, 2000}, 0.01, 5000.0);
    const auto grid = cohort_unit_root_grid(p);
    REQUIRE(grid.size() == 3);
    CHECK(grid[0].series == "N15");
    CHECK(grid[1].series == "dN15");
    CHECK(grid[2].series == "d2N15");
    for (const auto& row : grid) {
        REQUIRE(row.adf.size() == 5);
        REQUIRE(row.dfgls.size() == 4);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(row.adf[i].lags == static_cast<int>(i));
            CHECK(row.adf[i].spec == TrendSpec::constant);
        }
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(row.dfgls[i].lags == static_cast<int>(i) + 1);
            CHECK(row.dfgls[i].spec == TrendSpec::trend);
        }
    }

    std::vector<double> quad;
    for (int t = 0; t < 45; ++t) quad.push_back(3e6 + 500.0 * t * t);
    const Series q("n15", 1960, quad);
    CHECK_THROWS_AS((void)adf_test(diff(q, 2), 0, TrendSpec::constant), DegenerateInput);
    CHECK_THROWS_AS((void)cohort_unit_root_grid({q, q, {}}), DegenerateInput);
}

TEST_CASE("cohort cointegration") {
    oracle::Gen g(607);
    const CohortPair p = cohorts(g, 1960, 45, {1970, 1980, 1990, 2000}, 0.02, 5000.0);
    for (bool corrected : {false, true}) {
        const auto grid = cohort_cointegration(p, corrected);
        REQUIRE(grid.size() == 2);
        CHECK(grid[0].pair == "dN15 vs dN14(-1)");
        CHECK(grid[1].pair == "N15 vs N14(-1)");
        for (const auto& row : grid) {
            CHECK(row.corrected == corrected);
            REQUIRE(row.by_trend.size() == 3);
            CHECK(row.by_trend[0].spec.trend == JohansenTrend::constant);
            CHECK(row.by_trend[1].spec.trend == JohansenTrend::rconstant);
            CHECK(row.by_trend[2].spec.trend == JohansenTrend::none);
        }
    }
    const CohortPair identical = cohorts(g, 1960, 45, {}, 0.0);
    CHECK_THROWS_AS((void)cohort_cointegration(identical, false), CollinearError);
}

TEST_CASE("participation trend") {
    std::vector<double> rate;
    for (int t = 1960; t <= 2000; ++t) rate.push_back(0.59 + 0.004 * (t - 1960));
    const auto fit = participation_trend(Series("rate", 1960, rate));
    CHECK(fit.n == 32);
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.coefficients[0] == doctest::Approx(0.004).epsilon(1e-9));
}

TEST_CASE("synthetic reference and error") {
    const SyntheticSpec spec;
    const Series r = synthetic_reference(spec);
    CHECK(r.size() == 45);
    CHECK(r.start_year() == 1);
    CHECK(r[0] == doctest::Approx(0.3 * std::sin(0.1)).epsilon(1e-15));
    CHECK(r[0] == doctest::Approx(0.029950).epsilon(1e-5));
    for (double v : r.values()) CHECK(std::abs(v) <= 0.3);
    CHECK(synthetic_reference(spec) == r);

    const Series e = synthetic_error(0.1, 45);
    CHECK(e.at_year(1) == -0.1);
    CHECK(e.at_year(9) == -0.1);
    CHECK(e.at_year(10) == 0.1);
    CHECK(e.at_year(19) == 0.1);
    CHECK(e.at_year(20) == -0.1);
    CHECK(e.at_year(40) == -0.1);
    for (double v : e.values()) CHECK(std::abs(v) == 0.1);
    CHECK_THROWS_AS((void)synthetic_error(0.0, 45), RangeError);
    CHECK_THROWS_AS(validate(SyntheticSpec{19}), RangeError);
    SyntheticSpec bad;
    bad.amplitudes = {0.1, -0.2};
    CHECK_THROWS_AS(validate(bad), RangeError);
}

TEST_CASE("spurious experiment is deterministic and reports every amplitude") {
    const SyntheticSpec spec;
    const auto a = spurious_experiment(spec);
    const auto b = spurious_experiment(spec);
    std::ostringstream ca;
    std::ostringstream cb;
    write_spurious_csv(ca, a);
    write_spurious_csv(cb, b);
    CHECK(ca.str() == cb.str());
    REQUIRE(a.rows.size() == spec.amplitudes.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].amplitude == spec.amplitudes[i]);
        CHECK(a.rows[i].r_squared == b.rows[i].r_squared);
        CHECK(a.rows[i].durbin_watson == b.rows[i].durbin_watson);
    }
    CHECK(a.control.r_squared == b.control.r_squared);
    CHECK(ca.str().rfind("A,r2,dw,arch_p,eg_verdict,johansen_rank\n", 0) == 0);
    // The white-noise control behaves like a sound regression.
    CHECK(a.control.durbin_watson > 1.5);
}

TEST_CASE("property: R-squared is nonincreasing in the amplitude") {
    oracle::Gen g(608);
    for (int rep = 0; rep < 50; ++rep) {
        SyntheticSpec spec;
        spec.n = g.integer(20, 80);
        spec.amplitudes.clear();
        for (int i = 0; i < 6; ++i) spec.amplitudes.push_back(g.uniform(1e-4, 0.5));
        std::sort(spec.amplitudes.begin(), spec.amplitudes.end());
        const auto report = spurious_experiment(spec);
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            CHECK(report.rows[i].r_squared <= report.rows[i - 1].r_squared + 1e-12);
        }
    }
}

}
