#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsecon/ols.hpp"
#include "tsecon/series.hpp"
#include "tsecon/unit_root.hpp"

namespace tsecon {

// ---------------------------------------------------------------------------
// Residual-based tests

enum class DifferenceVariant { direct, ma2, ma3 };

[[nodiscard]] std::string_view to_string(DifferenceVariant v);

/// Lag grid used by `difference_test`. The defaults mirror the layout of the
/// measured-minus-predicted table: ADF lag 0 and DF-GLS lags 1-3, both with a
/// constant.
struct DifferenceGrid {
    std::vector<int> adf_lags{0};
    TrendSpec adf_spec = TrendSpec::constant;
    std::vector<int> dfgls_lags{1, 2, 3};
    TrendSpec dfgls_spec = TrendSpec::constant;
};

struct DifferenceTestResult {
    DifferenceVariant variant = DifferenceVariant::direct;
    Series difference;
    SummaryStats stats;
    std::vector<UnitRootResult> adf;
    std::vector<UnitRootResult> dfgls;
    SkewKurtResult normality;
};

/// Unit-root grid on measured - predicted (or its MA(2)/MA(3) variant, where
/// the trailing average is applied to `predicted`).
[[nodiscard]] DifferenceTestResult difference_test(const Series& measured, const Series& predicted,
                                                   DifferenceVariant variant,
                                                   const DifferenceGrid& grid = {});

struct EGResult {
    RegressionFit first_stage;
    UnitRootResult residual_test;
    /// Strictest level at which no-cointegration is rejected.
    std::optional<SignificanceLevel> cointegrated_at;
};

/// MacKinnon (1991) response surface for the two-variable Engle-Granger
/// test with a constant in the cointegrating regression.
[[nodiscard]] CriticalValues engle_granger_critical_values(std::size_t n);

/// Stage 1: OLS of y on x with intercept. Stage 2: ADF without deterministic
/// terms on the stage-1 residuals, judged against Engle-Granger critical
/// values.
[[nodiscard]] EGResult engle_granger(const Series& y, const Series& x, int residual_lags = 0);

// ---------------------------------------------------------------------------
// Johansen reduced-rank regression

/// `constant`: unrestricted constant; `rconstant`: constant restricted to the
/// cointegrating relation; `none`: no deterministic terms.
enum class JohansenTrend { constant, rconstant, none };

[[nodiscard]] std::string_view to_string(JohansenTrend t);

struct JohansenSpec {
    JohansenTrend trend = JohansenTrend::constant;
    int lags = 2;  // lag order of the underlying levels VAR
};

struct RankRow {
    int rank = 0;
    int parms = 0;
    double log_likelihood = 0.0;
    std::optional<double> eigenvalue;       // absent for rank 0
    std::optional<double> trace_statistic;  // absent for full rank
    std::optional<double> critical_5;       // absent for full rank
};

struct RankTestResult {
    JohansenSpec spec;
    std::vector<std::string> labels;
    std::size_t n_effective = 0;
    std::vector<RankRow> rows;  // ranks 0..K
    int selected_rank = 0;
    Eigen::VectorXd eigenvalues;  // K values, descending, in [0, 1)
    /// Cointegrating vectors as columns; for `rconstant` the last row holds the
    /// constant's coefficient.
    Eigen::MatrixXd eigenvectors;
};

/// Trace test for the cointegrating rank of a bivariate system.
/// Throws CollinearError, DofError.
[[nodiscard]] RankTestResult johansen_trace(std::span<const Series> data, const JohansenSpec& spec);

/// Osterwald-Lenum 5% trace critical values for the bivariate case.
/// `rank_deficit` is K - r (1 or 2). Throws RangeError otherwise.
[[nodiscard]] double johansen_critical(JohansenTrend trend, int rank_deficit,
                                       SignificanceLevel level = SignificanceLevel::pct5);

/// First cointegrating vector scaled so its first element is 1.
[[nodiscard]] Eigen::VectorXd normalized_cointegrating_vector(const RankTestResult& result);

}  // namespace tsecon
