#include "tsecon/ols.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

namespace {

Eigen::VectorXd to_vector(std::span<const double> v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Series as_series(const Eigen::VectorXd& v, std::string name, int start_year) {
    return Series(std::move(name), start_year, std::vector<double>(v.data(), v.data() + v.size()));
}

double r_squared_of(double ssr, const Eigen::VectorXd& y, bool centered) {
    const double tss = centered ? linalg::centered_tss(y) : y.squaredNorm();
    if (tss <= 0.0) {
        return 0.0;
    }
    return std::clamp(1.0 - ssr / tss, 0.0, 1.0);
}

bool residuals_vanish(const RegressionFit& fit) {
    const double scale = std::max(fit.response.squaredNorm(), DBL_MIN);
    return fit.ssr <= 1e-24 * scale;
}

}  // namespace

double t_two_sided(double t, double df) {
    if (!std::isfinite(t)) {
        return 0.0;
    }
    return dist::beta_inc(0.5 * df, 0.5, df / (df + t * t));
}

RegressionFit ols_fit(const Series& y, std::span<const Series> x, bool intercept) {
    std::vector<Series> all;
    all.reserve(x.size() + 1);
    all.push_back(y);
    all.insert(all.end(), x.begin(), x.end());
    const auto aligned = align(all);

    const auto n = static_cast<Eigen::Index>(aligned.front().size());
    const auto k = static_cast<Eigen::Index>(x.size()) + (intercept ? 1 : 0);
    if (k == 0) {
        throw DofError("regression has no regressors");
    }
    Eigen::MatrixXd design(n, k);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < x.size(); ++j) {
        design.col(static_cast<Eigen::Index>(j)) = to_vector(aligned[j + 1].values());
        labels.push_back(aligned[j + 1].name());
    }
    if (intercept) {
        design.col(k - 1).setOnes();
        labels.emplace_back("_cons");
    }
    const Eigen::VectorXd response = to_vector(aligned.front().values());
    const auto ls = linalg::least_squares(design, response);

    const int start = aligned.front().start_year();
    RegressionFit fit{
        .labels = std::move(labels),
        .coefficients = ls.coef,
        .std_errors = ls.se,
        .t_stats = Eigen::VectorXd(k),
        .t_pvalues = Eigen::VectorXd(k),
        .residuals = as_series(ls.resid, y.name() + ":resid", start),
        .fitted = as_series(ls.fitted, y.name() + ":fitted", start),
        .r_squared = r_squared_of(ls.ssr, response, intercept),
        .rmse = std::sqrt(ls.ssr / static_cast<double>(n)),
        .ssr = ls.ssr,
        .n = static_cast<std::size_t>(n),
        .k = static_cast<std::size_t>(k),
        .intercept = intercept,
        .design = design,
        .response = response,
    };
    const double df = static_cast<double>(n - k);
    for (Eigen::Index j = 0; j < k; ++j) {
        fit.t_stats(j) = ls.se(j) > 0.0 ? ls.coef(j) / ls.se(j)
                                         : std::copysign(INFINITY, ls.coef(j));
        fit.t_pvalues(j) = t_two_sided(fit.t_stats(j), df);
    }
    return fit;
}

double durbin_watson(std::span<const double> e) {
    if (e.size() < 2) {
        throw LengthError("Durbin-Watson needs at least two residuals");
    }
    double num = 0.0;
    double den = e[0] * e[0];
    for (std::size_t t = 1; t < e.size(); ++t) {
        num += (e[t] - e[t - 1]) * (e[t] - e[t - 1]);
        den += e[t] * e[t];
    }
    if (den <= DBL_MIN) {
        throw DegenerateResiduals("all residuals are zero");
    }
    return num / den;
}

double durbin_watson(const RegressionFit& fit) {
    if (residuals_vanish(fit)) {
        throw DegenerateResiduals("residuals vanish; the fit is exact");
    }
    return durbin_watson(fit.residuals.values());
}

TestResult breusch_godfrey(const RegressionFit& fit, int lags) {
    if (lags < 1) {
        throw RangeError("Breusch-Godfrey lag order must be positive");
    }
    const auto n = static_cast<Eigen::Index>(fit.n);
    const auto k = static_cast<Eigen::Index>(fit.k);
    if (n <= k + lags) {
        throw DofError("Breusch-Godfrey needs n > k + lags");
    }
    if (residuals_vanish(fit)) {
        throw DegenerateResiduals("residuals vanish; the fit is exact");
    }
    const Eigen::VectorXd e = to_vector(fit.residuals.values());
    Eigen::MatrixXd aux(n, k + lags + (fit.intercept ? 0 : 1));
    aux.leftCols(k) = fit.design;
    for (int l = 1; l <= lags; ++l) {
        auto col = aux.col(k + l - 1);
        col.setZero();
        col.tail(n - l) = e.head(n - l);
    }
    if (!fit.intercept) {
        aux.col(aux.cols() - 1).setOnes();
    }
    const auto ls = linalg::least_squares(aux, e);
    const double r2 = r_squared_of(ls.ssr, e, true);
    const double lm = static_cast<double>(n) * r2;
    return {"breusch_godfrey", lm, static_cast<double>(lags), std::nullopt,
            dist::chi2_sf(lm, lags), "no serial correlation"};
}

TestResult arch_lm(std::span<const double> residuals, int lags) {
    if (lags < 1) {
        throw RangeError("ARCH lag order must be positive");
    }
    const auto n = static_cast<Eigen::Index>(residuals.size());
    if (n <= 2 * lags + 1) {
        throw DofError("ARCH LM needs more observations than 2 * lags + 1");
    }
    const Eigen::VectorXd e2 = to_vector(residuals).array().square().matrix();
    const Eigen::Index rows = n - lags;
    Eigen::MatrixXd x(rows, lags + 1);
    for (int l = 1; l <= lags; ++l) {
        x.col(l - 1) = e2.segment(lags - l, rows);
    }
    x.col(lags).setOnes();
    const Eigen::VectorXd y = e2.tail(rows);
    if (linalg::centered_tss(y) <= 1e-30 * std::max(y.squaredNorm(), DBL_MIN)) {
        throw DegenerateResiduals("squared residuals are constant");
    }
    const auto ls = linalg::least_squares(x, y);
    const double lm = static_cast<double>(rows) * r_squared_of(ls.ssr, y, true);
    return {"arch_lm", lm, static_cast<double>(lags), std::nullopt, dist::chi2_sf(lm, lags),
            "no ARCH effects"};
}

TestResult arch_lm(const RegressionFit& fit, int lags) {
    if (residuals_vanish(fit)) {
        throw DegenerateResiduals("residuals vanish; the fit is exact");
    }
    return arch_lm(fit.residuals.values(), lags);
}

TestResult ramsey_reset(const RegressionFit& fit, int powers) {
    if (powers < 2) {
        throw RangeError("RESET needs powers >= 2");
    }
    const auto n = static_cast<Eigen::Index>(fit.n);
    const auto k = static_cast<Eigen::Index>(fit.k);
    const int q = powers - 1;
    if (n <= k + q) {
        throw DofError("RESET needs n > k + powers - 1");
    }
    const Eigen::VectorXd yhat = to_vector(fit.fitted.values());
    const double sd = std::sqrt(linalg::centered_tss(yhat) / static_cast<double>(n));
    if (!(sd > 1e-12 * std::max(yhat.cwiseAbs().maxCoeff(), DBL_MIN))) {
        throw DegenerateFit("fitted values are constant");
    }
    if (residuals_vanish(fit)) {
        throw DegenerateFit("residuals vanish; the fit is exact");
    }
    // Standardizing the fitted values leaves the augmented column space
    // unchanged and keeps the powers well scaled.
    const Eigen::ArrayXd z = (yhat.array() - yhat.mean()) / sd;
    Eigen::MatrixXd aug(n, k + q);
    aug.leftCols(k) = fit.design;
    for (int p = 2; p <= powers; ++p) {
        aug.col(k + p - 2) = z.pow(p).matrix();
    }
    const auto ls = linalg::least_squares(aug, fit.response);
    const double df2 = static_cast<double>(n - k - q);
    const double f = std::max(0.0, (fit.ssr - ls.ssr) / q) / (ls.ssr / df2);
    return {"ramsey_reset", f, static_cast<double>(q), df2, dist::f_sf(f, q, df2),
            "no omitted variables"};
}

TestResult het_test(const RegressionFit& fit) {
    const auto n = static_cast<Eigen::Index>(fit.n);
    if (n <= 3) {
        throw DofError("heteroskedasticity test needs more than 3 observations");
    }
    if (residuals_vanish(fit)) {
        throw DegenerateFit("residuals vanish; the fit is exact");
    }
    const Eigen::VectorXd yhat = to_vector(fit.fitted.values());
    if (linalg::centered_tss(yhat) <= 1e-24 * std::max(yhat.squaredNorm(), DBL_MIN)) {
        throw DegenerateFit("fitted values are constant");
    }
    const Eigen::VectorXd e = to_vector(fit.residuals.values());
    const double sigma2 = fit.ssr / static_cast<double>(n);
    const Eigen::VectorXd g = e.array().square().matrix() / sigma2;
    Eigen::MatrixXd x(n, 2);
    x.col(0) = yhat;
    x.col(1).setOnes();
    const auto ls = linalg::least_squares(x, g);
    const double ess = (ls.fitted.array() - g.mean()).square().sum();
    const double stat = 0.5 * ess;
    return {"het_test", stat, 1.0, std::nullopt, dist::chi2_sf(stat, 1.0), "constant variance"};
}

namespace {

struct Moments {
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
};

Moments central_moments(std::span<const double> v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    Moments m;
    for (double x : v) {
        const double d = x - mean;
        const double d2 = d * d;
        m.m2 += d2;
        m.m3 += d2 * d;
        m.m4 += d2 * d2;
    }
    m.m2 /= n;
    m.m3 /= n;
    m.m4 /= n;
    return m;
}

}  // namespace

SkewKurtResult skew_kurt_test(std::span<const double> residuals) {
    if (residuals.size() < 8) {
        throw LengthError("skewness/kurtosis test needs at least 8 observations");
    }
    const double n = static_cast<double>(residuals.size());
    const Moments m = central_moments(residuals);
    if (!(m.m2 > 0.0)) {
        throw DegenerateResiduals("sample has zero variance");
    }
    SkewKurtResult out;
    out.skewness = m.m3 / std::pow(m.m2, 1.5);
    out.kurtosis = m.m4 / (m.m2 * m.m2);

    // D'Agostino (1970) transformation of sqrt(b1).
    const double y = out.skewness * std::sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));
    const double beta2 = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                         ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
    const double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
    const double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
    const double alpha = std::sqrt(2.0 / (w2 - 1.0));
    const double ya = y / alpha;
    out.z_skewness = delta * std::log(ya + std::sqrt(ya * ya + 1.0));

    // Anscombe-Glynn (1983) transformation of b2.
    const double mean_b2 = 3.0 * (n - 1.0) / (n + 1.0);
    const double var_b2 = 24.0 * n * (n - 2.0) * (n - 3.0) /
                          ((n + 1.0) * (n + 1.0) * (n + 3.0) * (n + 5.0));
    const double x = (out.kurtosis - mean_b2) / std::sqrt(var_b2);
    const double sqrt_beta1 = 6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0)) *
                              std::sqrt(6.0 * (n + 3.0) * (n + 5.0) / (n * (n - 2.0) * (n - 3.0)));
    const double a = 6.0 + 8.0 / sqrt_beta1 *
                               (2.0 / sqrt_beta1 + std::sqrt(1.0 + 4.0 / (sqrt_beta1 * sqrt_beta1)));
    const double ratio = (1.0 - 2.0 / a) / (1.0 + x * std::sqrt(2.0 / (a - 4.0)));
    out.z_kurtosis = ((1.0 - 2.0 / (9.0 * a)) - std::cbrt(ratio)) / std::sqrt(2.0 / (9.0 * a));

    out.p_skewness = dist::normal_two_sided(out.z_skewness);
    out.p_kurtosis = dist::normal_two_sided(out.z_kurtosis);
    const double k2 = out.z_skewness * out.z_skewness + out.z_kurtosis * out.z_kurtosis;
    out.joint = {"skew_kurt", k2, 2.0, std::nullopt, dist::chi2_sf(k2, 2.0), "normality"};
    return out;
}

SkewKurtResult skew_kurt_test(const Series& residuals) { return skew_kurt_test(residuals.values()); }

SkewKurtResult jarque_bera(std::span<const double> residuals) {
    if (residuals.size() < 8) {
        throw LengthError("Jarque-Bera test needs at least 8 observations");
    }
    const double n = static_cast<double>(residuals.size());
    const Moments m = central_moments(residuals);
    if (!(m.m2 > 0.0)) {
        throw DegenerateResiduals("sample has zero variance");
    }
    SkewKurtResult out;
    out.skewness = m.m3 / std::pow(m.m2, 1.5);
    out.kurtosis = m.m4 / (m.m2 * m.m2);
    const double sk = n / 6.0 * out.skewness * out.skewness;
    const double ku = n / 24.0 * (out.kurtosis - 3.0) * (out.kurtosis - 3.0);
    out.z_skewness = std::copysign(std::sqrt(sk), out.skewness);
    out.z_kurtosis = std::copysign(std::sqrt(ku), out.kurtosis - 3.0);
    out.p_skewness = dist::chi2_sf(sk, 1.0);
    out.p_kurtosis = dist::chi2_sf(ku, 1.0);
    out.joint = {"jarque_bera", sk + ku, 2.0, std::nullopt, dist::chi2_sf(sk + ku, 2.0), "normality"};
    return out;
}

double cumulative_r_squared(const Series& actual, const Series& predicted) {
    const Series pair[] = {actual, predicted};
    const auto aligned = align(pair);
    const Series ca = cumsum(aligned[0]);
    const Series cp = cumsum(aligned[1]);
    const Eigen::VectorXd a = to_vector(ca.values());
    const Eigen::VectorXd p = to_vector(cp.values());
    const double tss = linalg::centered_tss(a);
    if (tss <= 0.0) {
        throw DegenerateInput("cumulative actual series is constant");
    }
    return 1.0 - (a - p).squaredNorm() / tss;
}

}  // namespace tsecon
