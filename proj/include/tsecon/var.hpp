#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "tsecon/cointegration.hpp"
#include "tsecon/ols.hpp"
#include "tsecon/series.hpp"

namespace tsecon {

/// VAR(p) with optional contemporaneous exogenous regressors, estimated
/// equation by equation with OLS. Standard errors use the ML residual
/// variance SSR / T.
///
/// Equation i reads
///   y_i(t) = sum_l sum_j A_l(i, j) y_j(t - l) + sum_m B(i, m) x_m(t) + c_i + u_i(t).
struct VarModel {
    std::vector<std::string> endogenous;
    std::vector<std::string> exogenous;
    int lags = 1;
    int first_year = 0;  // year of the first residual

    std::vector<Eigen::MatrixXd> lag_coefficients;  // A_1..A_p, each K x K
    std::vector<Eigen::MatrixXd> lag_std_errors;
    Eigen::MatrixXd exog_coefficients;  // K x m
    Eigen::MatrixXd exog_std_errors;
    Eigen::VectorXd intercepts;
    Eigen::VectorXd intercept_std_errors;

    Eigen::MatrixXd residuals;  // T x K
    Eigen::MatrixXd fitted;     // T x K
    Eigen::MatrixXd sigma;      // residual cross-covariance, divided by T
    std::vector<double> r_squared;
    std::vector<double> rmsfe;  // sqrt(SSR / T) per equation

    Eigen::MatrixXd design;   // T x k, columns: lags (lag-major), exog, constant
    Eigen::MatrixXd xtx_inv;  // (X'X)^-1 shared by every equation

    [[nodiscard]] std::size_t dim() const noexcept { return endogenous.size(); }
    [[nodiscard]] Series residual_series(std::size_t equation) const;
    [[nodiscard]] Series fitted_series(std::size_t equation) const;
};

/// Throws DofError, CollinearError (a constant endogenous series is collinear
/// with the intercept).
[[nodiscard]] VarModel var_fit(std::span<const Series> endog, std::span<const Series> exog, int lags);

/// Moduli of the companion-matrix eigenvalues, descending.
[[nodiscard]] std::vector<double> companion_eigen(std::span<const Eigen::MatrixXd> lag_coefficients);
[[nodiscard]] std::vector<double> companion_eigen(const VarModel& m);

/// Lagrange-multiplier residual autocorrelation test at lags 1..max_lag:
///   LM_j = (T - d - 1/2) ln(det Sigma / det Sigma_j), chi-squared with K^2 df,
/// where Sigma_j comes from regressing the residuals on the original
/// regressors and their own j-th lag. Throws DofError.
[[nodiscard]] std::vector<TestResult> var_lm_autocorr(const VarModel& m, int max_lag);

/// Jarque-Bera test on one equation's residuals.
[[nodiscard]] SkewKurtResult residual_normality(const VarModel& m, std::size_t equation = 0);

struct GrangerResult {
    std::string equation;
    std::string excluded;
    TestResult wald;
};

/// Wald tests on the exclusion of each variable's lags from the other's
/// equation in a bivariate VAR(p) with constant. Covariances use the ML
/// residual variance.
[[nodiscard]] std::vector<GrangerResult> granger_causality(std::span<const Series> endog, int lags);

/// Rank-one vector error-correction model; standard errors as for VarModel.
struct VecmModel {
    std::vector<std::string> endogenous;
    JohansenTrend trend = JohansenTrend::constant;
    int lags = 2;        // lag order of the levels VAR
    int first_year = 0;  // year of the first residual

    Eigen::VectorXd beta;  // normalized, beta(0) == 1; last entry is the constant for rconstant
    Eigen::VectorXd alpha;
    Eigen::VectorXd alpha_std_errors;
    std::vector<Eigen::MatrixXd> gamma;  // short-run matrices for dy_{t-1}..dy_{t-p+1}
    Eigen::VectorXd intercepts;          // zero unless trend == constant

    Eigen::MatrixXd residuals;  // T x K
    Eigen::MatrixXd design;     // T x k per equation: ec, lagged differences, constant
    std::vector<double> r_squared;
    std::vector<double> rmsfe;

    RankTestResult rank_test;
    bool rank_supported = true;  // false when the trace test did not select rank 1
};

/// Throws DofError, CollinearError; RangeError unless rank == 1.
[[nodiscard]] VecmModel vecm_fit(std::span<const Series> endog, int rank, int lags, JohansenTrend trend);

/// Root mean squared difference over the common years. Throws LengthError
/// when the series share no years.
[[nodiscard]] double rmsfe(const Series& predicted, const Series& actual);

}  // namespace tsecon
