#include "tsecon/demographics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tsecon/error.hpp"

namespace tsecon {

namespace {

std::pair<int, int> overlap_or_throw(const Series& a, const Series& b, int min_years, const char* what) {
    const int first = std::max(a.start_year(), b.start_year());
    const int last = std::min(a.end_year(), b.end_year());
    if (last - first + 1 < min_years) {
        throw LengthError(std::string(what) + " needs at least " + std::to_string(min_years) +
                          " overlapping years");
    }
    return {first, last};
}

}  // namespace

void validate(const CohortPair& p) {
    for (const Series* s : {&p.n15, &p.n14}) {
        for (double v : s->values()) {
            if (!(v > 0.0)) {
                throw RangeError("cohort counts must be positive in '" + s->name() + "'");
            }
        }
    }
    for (int c : p.census_years) {
        if (!p.n15.contains(c)) {
            throw RangeError("census year " + std::to_string(c) + " outside the N15 series");
        }
    }
}

Series cohort_difference(const CohortPair& p) {
    const Series lagged = shift(p.n14, 1);
    const auto [first, last] = overlap_or_throw(p.n15, lagged, 2, "cohort difference");
    return subtract(p.n15.slice(first, last), lagged.slice(first, last)).renamed("d");
}

Series ratio_diagnostic(const CohortPair& p) {
    const Series d15 = diff(p.n15);
    const Series d14 = shift(diff(p.n14), 1);
    const auto [first, last] = overlap_or_throw(d15, d14, 1, "ratio diagnostic");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(last - first + 1));
    for (int t = first; t <= last; ++t) {
        const double den = d14.at_year(t);
        if (den == 0.0) {
            throw DivideByZero(t);
        }
        v.push_back((d15.at_year(t) - den) / den);
    }
    return Series("ratio", first, std::move(v));
}

bool census_adjacent(int year, std::span<const int> census_years, int window) {
    return std::any_of(census_years.begin(), census_years.end(),
                       [&](int c) { return std::abs(year - c) <= window; });
}

double quiet_share(const Series& ratio, std::span<const int> census_years, int window, double threshold) {
    int total = 0;
    int quiet = 0;
    for (int t = ratio.start_year(); t <= ratio.end_year(); ++t) {
        if (census_adjacent(t, census_years, window)) {
            continue;
        }
        ++total;
        if (std::abs(ratio.at_year(t)) < threshold) {
            ++quiet;
        }
    }
    if (total == 0) {
        throw LengthError("no years outside the census windows");
    }
    return static_cast<double>(quiet) / total;
}

CohortPair census_spike_correction(const CohortPair& p) {
    std::vector<double> n14(p.n14.values().begin(), p.n14.values().end());
    const int start = p.n14.start_year();
    for (int c : p.census_years) {
        if (!p.n15.contains(c) || !p.n15.contains(c - 1) || !p.n14.contains(c - 1) || !p.n14.contains(c - 2)) {
            throw RangeError("census year " + std::to_string(c) + " lacks the two preceding years");
        }
        const double expected = p.n15.at_year(c - 1) + p.n14.at_year(c - 1) - p.n14.at_year(c - 2);
        if (!(expected > 0.0)) {
            throw RangeError("non-positive continuation at census year " + std::to_string(c));
        }
        const double q = p.n15.at_year(c) / expected;
        n14[static_cast<std::size_t>(c - 1 - start)] = p.n14.at_year(c - 1) * q;
    }
    return {p.n15, Series(p.n14.name(), start, std::move(n14)), p.census_years};
}

std::vector<Segment> default_segments() {
    return {{1963, 1980, SegmentMode::linear},
            {1981, 1990, SegmentMode::constant},
            {1991, 2000, SegmentMode::constant},
            {2001, 2004, SegmentMode::constant}};
}

Series piecewise_correction(const Series& d, std::span<const Segment> segments) {
    if (segments.empty()) {
        throw SegmentError("no segments given");
    }
    for (const auto& s : segments) {
        if (s.first_year > s.last_year) {
            throw SegmentError("segment " + std::to_string(s.first_year) + "-" + std::to_string(s.last_year) +
                               " is reversed");
        }
        if (!d.contains(s.first_year) || !d.contains(s.last_year)) {
            throw RangeError("segment " + std::to_string(s.first_year) + "-" + std::to_string(s.last_year) +
                             " outside the series");
        }
    }
    int expected = d.start_year();
    for (const auto& s : segments) {
        if (s.first_year < expected) {
            throw SegmentError("segments overlap at " + std::to_string(s.first_year));
        }
        if (s.first_year > expected) {
            throw SegmentError("gap before segment starting " + std::to_string(s.first_year));
        }
        expected = s.last_year + 1;
    }
    if (expected != d.end_year() + 1) {
        throw SegmentError("segments end before " + std::to_string(d.end_year()));
    }

    std::vector<double> out;
    out.reserve(d.size());
    for (const auto& s : segments) {
        const int m = s.last_year - s.first_year + 1;
        double mean = 0.0;
        for (int t = s.first_year; t <= s.last_year; ++t) {
            mean += d.at_year(t);
        }
        mean /= m;
        if (s.mode == SegmentMode::constant || m == 1) {
            for (int t = s.first_year; t <= s.last_year; ++t) {
                out.push_back(d.at_year(t) - mean);
            }
            continue;
        }
        const double t_mean = 0.5 * (s.first_year + s.last_year);
        double sxy = 0.0;
        double sxx = 0.0;
        for (int t = s.first_year; t <= s.last_year; ++t) {
            sxy += (t - t_mean) * (d.at_year(t) - mean);
            sxx += (t - t_mean) * (t - t_mean);
        }
        const double slope = sxy / sxx;
        for (int t = s.first_year; t <= s.last_year; ++t) {
            out.push_back(d.at_year(t) - mean - slope * (t - t_mean));
        }
    }
    return Series(d.name() + "_corrected", d.start_year(), std::move(out));
}

std::vector<UnitRootRow> cohort_unit_root_grid(const CohortPair& p) {
    const Series levels = p.n15.renamed("N15");
    const Series series[] = {levels, diff(levels).renamed("dN15"), diff(levels, 2).renamed("d2N15")};
    std::vector<UnitRootRow> out;
    for (const auto& s : series) {
        UnitRootRow row{s.name(), {}, {}};
        for (int lag = 0; lag <= 4; ++lag) {
            row.adf.push_back(adf_test(s, lag, TrendSpec::constant));
        }
        for (int lag = 1; lag <= 4; ++lag) {
            row.dfgls.push_back(dfgls_test(s, lag, TrendSpec::trend));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CohortCointegration> cohort_cointegration(const CohortPair& p, bool corrected, int lags) {
    const CohortPair used = corrected ? census_spike_correction(p) : p;
    const Series n15 = used.n15.renamed("N15");
    const Series n14_lag = shift(used.n14, 1).renamed("N14(-1)");
    const Series differences[] = {diff(n15).renamed("dN15"), diff(n14_lag).renamed("dN14(-1)")};
    const Series levels[] = {n15, n14_lag};

    std::vector<CohortCointegration> out;
    for (const auto& [label, pair] : {std::pair{"dN15 vs dN14(-1)", std::span<const Series>(differences)},
                                      std::pair{"N15 vs N14(-1)", std::span<const Series>(levels)}}) {
        CohortCointegration row{label, corrected, {}};
        for (auto trend : {JohansenTrend::constant, JohansenTrend::rconstant, JohansenTrend::none}) {
            row.by_trend.push_back(johansen_trace(pair, {trend, lags}));
        }
        out.push_back(std::move(row));
    }
    return out;
}

RegressionFit participation_trend(const Series& rate, int first_year, int last_year) {
    const Series window = rate.slice(first_year, last_year);
    std::vector<double> t(window.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] = static_cast<double>(first_year) + static_cast<double>(i);
    }
    const Series time[] = {Series("year", first_year, std::move(t))};
    return ols_fit(window, time, true);
}

void validate(const SyntheticSpec& spec) {
    if (spec.n < 20) {
        throw RangeError("synthetic series need n >= 20");
    }
    for (double a : spec.amplitudes) {
        if (!(a > 0.0)) {
            throw RangeError("amplitudes must be positive");
        }
    }
}

Series synthetic_reference(const SyntheticSpec& spec) {
    validate(spec);
    std::vector<double> v(static_cast<std::size_t>(spec.n));
    for (int t = 1; t <= spec.n; ++t) {
        v[static_cast<std::size_t>(t - 1)] = 0.3 * std::sin(0.1 * t);
    }
    return Series("r", 1, std::move(v));
}

Series synthetic_error(double amplitude, int n) {
    if (!(amplitude > 0.0)) {
        throw RangeError("amplitude must be positive");
    }
    if (n < 1) {
        throw RangeError("length must be positive");
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        const int k = t / 10 + 1;  // integer part of 0.1 t + 1
        v[static_cast<std::size_t>(t - 1)] = (k % 2 == 0) ? amplitude : -amplitude;
    }
    return Series("e", 1, std::move(v));
}

namespace {

SpuriousRow run_regression(const Series& r, const Series& x, double amplitude) {
    const Series regressors[] = {x};
    const RegressionFit fit = ols_fit(r, regressors, true);
    SpuriousRow row;
    row.amplitude = amplitude;
    row.r_squared = fit.r_squared;
    row.durbin_watson = durbin_watson(fit);
    row.arch_p = arch_lm(fit, 1).p_value;
    const EGResult eg = engle_granger(r, x);
    row.eg_statistic = eg.residual_test.statistic;
    row.eg_cointegrated = eg.residual_test.rejects(SignificanceLevel::pct5);
    try {
        const Series pair[] = {r, x};
        row.johansen_rank = johansen_trace(pair, {JohansenTrend::constant, 2}).selected_rank;
    } catch (const Error&) {
        row.johansen_rank.reset();
    }
    return row;
}

}  // namespace

SpuriousReport spurious_experiment(const SyntheticSpec& spec) {
    validate(spec);
    const Series r = synthetic_reference(spec);
    SpuriousReport out;
    for (double a : spec.amplitudes) {
        const Series x = add(r, synthetic_error(a, spec.n)).renamed("r+e");
        out.rows.push_back(run_regression(r, x, a));
    }
    std::mt19937_64 rng(spec.control_seed);
    std::normal_distribution<double> noise(0.0, spec.control_noise_sd);
    std::vector<double> w(static_cast<std::size_t>(spec.n));
    for (auto& v : w) {
        v = noise(rng);
    }
    const Series x = add(r, Series("w", 1, std::move(w))).renamed("r+w");
    out.control = run_regression(r, x, 0.0);
    return out;
}

void write_spurious_csv(std::ostream& out, const SpuriousReport& report) {
    out << "A,r2,dw,arch_p,eg_verdict,johansen_rank\n";
    for (const auto& row : report.rows) {
        out << format_double(row.amplitude) << ',' << format_double(row.r_squared) << ','
            << format_double(row.durbin_watson) << ',' << format_double(row.arch_p) << ','
            << (row.eg_cointegrated ? "cointegrated" : "not_cointegrated") << ',';
        if (row.johansen_rank) {
            out << *row.johansen_rank;
        } else {
            out << "NA";
        }
        out << '\n';
    }
}

}  // namespace tsecon
