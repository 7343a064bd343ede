#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon {

/// OLS estimates with the bookkeeping every residual diagnostic needs.
///
/// Coefficients follow the order of the regressors passed to `ols_fit`, with
/// the intercept (when requested) last.
struct RegressionFit {
    std::vector<std::string> labels;
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd t_pvalues;  // two-sided, Student t with n - k df
    Series residuals;
    Series fitted;
    double r_squared = 0.0;
    double rmse = 0.0;  // sqrt(SSR / n)
    double ssr = 0.0;
    std::size_t n = 0;
    std::size_t k = 0;
    bool intercept = true;

    Eigen::MatrixXd design;    // n x k, intercept column last
    Eigen::VectorXd response;  // n
};

/// A single hypothesis test outcome.
struct TestResult {
    std::string test;
    double statistic = 0.0;
    double df = 0.0;
    std::optional<double> df2;  // denominator df for F tests
    double p_value = 1.0;
    std::string null_hypothesis;
};

/// Skewness/kurtosis normality test with its separate components.
struct SkewKurtResult {
    double skewness = 0.0;  // sqrt(b1) = m3 / m2^1.5
    double kurtosis = 0.0;  // b2 = m4 / m2^2 (normal = 3)
    double z_skewness = 0.0;
    double z_kurtosis = 0.0;
    double p_skewness = 1.0;
    double p_kurtosis = 1.0;
    TestResult joint;  // chi-squared with 2 df
};

/// Regresses `y` on `x` over their common years. Throws CollinearError,
/// DofError, AlignmentError.
[[nodiscard]] RegressionFit ols_fit(const Series& y, std::span<const Series> x, bool intercept = true);

/// Student-t two-sided p-value.
[[nodiscard]] double t_two_sided(double t, double df);

[[nodiscard]] double durbin_watson(const RegressionFit& fit);
/// Throws DegenerateResiduals when every residual is zero.
[[nodiscard]] double durbin_watson(std::span<const double> residuals);

/// LM = n R^2 from regressing residuals on the original regressors plus
/// `lags` lagged residuals (pre-sample lags set to zero).
[[nodiscard]] TestResult breusch_godfrey(const RegressionFit& fit, int lags = 1);

/// Engle's LM test: (n - lags) R^2 from regressing squared residuals on a
/// constant and `lags` of their own lags.
[[nodiscard]] TestResult arch_lm(std::span<const double> residuals, int lags = 1);
[[nodiscard]] TestResult arch_lm(const RegressionFit& fit, int lags = 1);

/// RESET F test adding fitted-value powers 2..`powers`.
[[nodiscard]] TestResult ramsey_reset(const RegressionFit& fit, int powers = 4);

/// Breusch-Pagan / Cook-Weisberg score test against the fitted values.
[[nodiscard]] TestResult het_test(const RegressionFit& fit);

/// D'Agostino skewness and Anscombe-Glynn kurtosis tests, combined as a
/// 2-df chi-squared statistic. Requires at least 8 observations.
[[nodiscard]] SkewKurtResult skew_kurt_test(std::span<const double> residuals);
[[nodiscard]] SkewKurtResult skew_kurt_test(const Series& residuals);

/// Jarque-Bera statistic n/6 (S^2 + (K-3)^2/4) with raw moments.
[[nodiscard]] SkewKurtResult jarque_bera(std::span<const double> residuals);

/// 1 - SSE/SST computed on the cumulative sums of `actual` and `predicted`.
[[nodiscard]] double cumulative_r_squared(const Series& actual, const Series& predicted);

}  // namespace tsecon
