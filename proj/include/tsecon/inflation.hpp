#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon {

/// Linear, lagged link between labor-force growth and inflation:
///   pi(t) = a1 * dLF(t - lag) / LF(t - lag) + a2.
struct ModelCoefficients {
    double a1 = 0.0;
    double a2 = 0.0;
    int lag = 2;
};

/// Coefficients published for the USA (GDP deflator, two-year lag).
inline constexpr ModelCoefficients kUsGdpDeflatorModel{4.0, -0.03075, 2};

/// Predicted inflation labelled by the target year t (i.e. synchronized with
/// measured inflation). Throws LengthError, DivideByZero.
[[nodiscard]] Series predict_inflation(const Series& labor_force, const ModelCoefficients& c);

struct Calibration {
    ModelCoefficients coefficients;
    int first_year = 0;
    int last_year = 0;
    /// |sum(measured) - sum(predicted)| / sum|measured| over the fit window.
    double terminal_mismatch = 0.0;
};

/// Cumulative-fit calibration.
///
/// With g(t) the lagged labor-force growth rate, (a1, a2) minimize
///   sum_k (M(k) - a1 G(k) - a2 k)^2,  M, G cumulative sums of measured and g,
/// subject to M(N) = a1 G(N) + a2 N, i.e. both cumulative curves end at the
/// same value. Substituting the constraint leaves a one-parameter least
/// squares problem in a1 on the curves with their terminal chord removed.
///
/// Throws CollinearError when the growth rate is constant over the window and
/// LengthError when fewer than 3 years overlap.
[[nodiscard]] Calibration calibrate_cumulative(const Series& measured, const Series& labor_force, int lag);

/// The predictor variants compared throughout the analysis. `predicted2` and
/// `shifted2` keep the labor-force year labels (they lead inflation by `lag`
/// years); `predicted` and `shifted` are relabelled to the inflation year.
struct PredictorSet {
    Series predicted;
    Series predicted2;
    std::optional<Series> shifted;   // from half-year shifted labor force
    std::optional<Series> shifted2;
    Series ma2;  // trailing MA(2) of `predicted`
    Series ma3;  // trailing MA(3) of `predicted`
};

[[nodiscard]] PredictorSet build_predictor_set(const Series& labor_force,
                                               const std::optional<Series>& labor_force_halfyear,
                                               const ModelCoefficients& c);

/// Spreads step-like level revisions backwards over the preceding
/// inter-revision interval.
///
/// For a revision at year r with previous revision (or series start) p, the
/// jump d(r) = s(r) - s(r-1) is compared with the mean first difference over
/// (p, r); the excess E is distributed uniformly, so that
///   s'(t) = s(t) + E (t - p) / (r - p)  for p < t < r.
/// Values at p, at r and after the last revision are untouched, so the total
/// change over the series is preserved exactly. Throws RangeError.
[[nodiscard]] Series redistribute_revisions(const Series& labor_force, std::span<const int> revision_years);

struct SegmentRmsfe {
    int first_year = 0;
    int last_year = 0;
    double rmsfe = 0.0;
};

struct SubperiodReport {
    std::vector<SegmentRmsfe> segments;
    SegmentRmsfe full;
};

/// RMSFE per segment; each breakpoint closes a segment (e.g. 1983 splits
/// 1965-1983 from 1984-2002). Throws RangeError for breakpoints outside the
/// overlap or out of order, LengthError for an empty segment.
[[nodiscard]] SubperiodReport evaluate_subperiods(const Series& measured, const Series& predicted,
                                                  std::span<const int> breakpoints);

}  // namespace tsecon
