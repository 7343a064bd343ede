#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tsecon/cointegration.hpp"
#include "tsecon/ols.hpp"
#include "tsecon/series.hpp"
#include "tsecon/unit_root.hpp"

namespace tsecon {

/// Counts of 15- and 14-year-olds with the census years at which population
/// controls were revised.
struct CohortPair {
    Series n15;
    Series n14;
    std::vector<int> census_years;
};

/// Throws RangeError for non-positive counts or census years outside n15.
void validate(const CohortPair& p);

/// d(t) = N15(t) - N14(t-1). Throws LengthError when fewer than 2 years overlap.
[[nodiscard]] Series cohort_difference(const CohortPair& p);

/// (dN15(t) - dN14(t-1)) / dN14(t-1). Throws DivideByZero.
[[nodiscard]] Series ratio_diagnostic(const CohortPair& p);

/// True when `year` is within `window` years of a census year.
[[nodiscard]] bool census_adjacent(int year, std::span<const int> census_years, int window = 1);

/// Share of non-census-adjacent years with |ratio| below `threshold`.
[[nodiscard]] double quiet_share(const Series& ratio, std::span<const int> census_years, int window = 1,
                                 double threshold = 0.1);

/// Puts N14(c-1) on the post-census basis of N15(c) for every census year c.
/// The revision factor is N15(c) over the continuation of N15 implied by the
/// previous year, N15(c-1) + N14(c-1) - N14(c-2). Only N14 at c-1 changes.
/// Throws RangeError when c-2 is not covered by n14.
[[nodiscard]] CohortPair census_spike_correction(const CohortPair& p);

enum class SegmentMode { constant, linear };

struct Segment {
    int first_year = 0;
    int last_year = 0;
    SegmentMode mode = SegmentMode::constant;
};

/// 1963-1980 linear; 1981-1990, 1991-2000, 2001-2004 constant.
[[nodiscard]] std::vector<Segment> default_segments();

/// Removes the segment mean (constant) or the fitted line (linear) from each
/// segment. Segments must be in order and cover d exactly: gaps and overlaps
/// throw SegmentError, years outside d throw RangeError.
[[nodiscard]] Series piecewise_correction(const Series& d, std::span<const Segment> segments);

struct UnitRootRow {
    std::string series;
    std::vector<UnitRootResult> adf;    // constant, lags 0..4
    std::vector<UnitRootResult> dfgls;  // trend, lags 1..4
};

/// ADF and DF-GLS grid for N15, dN15 and d2N15.
[[nodiscard]] std::vector<UnitRootRow> cohort_unit_root_grid(const CohortPair& p);

struct CohortCointegration {
    std::string pair;  // "dN15 vs dN14(-1)" or "N15 vs N14(-1)"
    bool corrected = false;
    std::vector<RankTestResult> by_trend;  // constant, rconstant, none
};

/// Johansen trace tests on (dN15(t), dN14(t-1)) and (N15(t), N14(t-1)); with
/// `corrected` the census spike correction is applied first.
[[nodiscard]] std::vector<CohortCointegration> cohort_cointegration(const CohortPair& p, bool corrected,
                                                                    int lags = 4);

/// Linear time trend fitted to the participation rate over [first, last].
[[nodiscard]] RegressionFit participation_trend(const Series& rate, int first_year = 1965, int last_year = 1996);

struct SyntheticSpec {
    int n = 45;
    std::vector<double> amplitudes{0.005, 0.01, 0.02, 0.03, 0.05, 0.075, 0.1};
    double control_noise_sd = 0.05;
    std::uint64_t control_seed = 20061;
};

/// Throws RangeError unless n >= 20 and every amplitude is positive.
void validate(const SyntheticSpec& spec);

/// r(t) = 0.3 sin(0.1 t), t = 1..n; the year index is t.
[[nodiscard]] Series synthetic_reference(const SyntheticSpec& spec);

/// e(A, t) = A (-1)^floor(0.1 t + 1), t = 1..n. Throws RangeError unless A > 0.
[[nodiscard]] Series synthetic_error(double amplitude, int n);

struct SpuriousRow {
    double amplitude = 0.0;  // 0 for the white-noise control
    double r_squared = 0.0;
    double durbin_watson = 0.0;
    double arch_p = 0.0;
    double eg_statistic = 0.0;
    bool eg_cointegrated = false;  // residual ADF rejects at 5%
    std::optional<int> johansen_rank;  // lags 2, constant; empty if the test failed
};

struct SpuriousReport {
    std::vector<SpuriousRow> rows;  // in the order of SyntheticSpec::amplitudes
    SpuriousRow control;            // r + white noise regressed the same way
};

/// Regresses r on r + e(A) for every amplitude. Deterministic.
[[nodiscard]] SpuriousReport spurious_experiment(const SyntheticSpec& spec);

/// Columns: A, r2, dw, arch_p, eg_verdict, johansen_rank.
void write_spurious_csv(std::ostream& out, const SpuriousReport& report);

}  // namespace tsecon
