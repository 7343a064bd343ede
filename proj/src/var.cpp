#include "tsecon/var.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tsecon/distributions.hpp"
#include "tsecon/error.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

namespace {

Eigen::MatrixXd columns_of(std::span<const Series> aligned) {
    const auto n = static_cast<Eigen::Index>(aligned.front().size());
    Eigen::MatrixXd m(n, static_cast<Eigen::Index>(aligned.size()));
    for (std::size_t j = 0; j < aligned.size(); ++j) {
        m.col(static_cast<Eigen::Index>(j)) = Eigen::Map<const Eigen::VectorXd>(aligned[j].values().data(), n);
    }
    return m;
}

Series column_series(const Eigen::MatrixXd& m, Eigen::Index col, const std::string& name, int first_year) {
    const Eigen::VectorXd v = m.col(col);
    return Series(name, first_year, std::vector<double>(v.data(), v.data() + v.size()));
}

double r_squared(double ssr, const Eigen::VectorXd& y) {
    const double tss = linalg::centered_tss(y);
    return tss > 0.0 ? 1.0 - ssr / tss : 0.0;
}

}  // namespace

Series VarModel::residual_series(std::size_t equation) const {
    return column_series(residuals, static_cast<Eigen::Index>(equation), endogenous.at(equation) + ":resid",
                         first_year);
}

Series VarModel::fitted_series(std::size_t equation) const {
    return column_series(fitted, static_cast<Eigen::Index>(equation), endogenous.at(equation) + ":fitted",
                         first_year);
}

VarModel var_fit(std::span<const Series> endog, std::span<const Series> exog, int lags) {
    if (endog.empty()) {
        throw RangeError("VAR needs at least one endogenous series");
    }
    if (lags < 1) {
        throw RangeError("VAR lag order must be at least 1");
    }
    std::vector<Series> all(endog.begin(), endog.end());
    all.insert(all.end(), exog.begin(), exog.end());
    const auto aligned = align(all);
    const Eigen::MatrixXd data = columns_of(aligned);

    const auto kdim = static_cast<Eigen::Index>(endog.size());
    const auto mexo = static_cast<Eigen::Index>(exog.size());
    const Eigen::Index n = data.rows();
    const Eigen::Index t_eff = n - lags;
    const Eigen::Index k = kdim * lags + mexo + 1;
    if (t_eff <= k) {
        throw DofError("VAR(" + std::to_string(lags) + ") needs more than " + std::to_string(k) +
                       " usable observations, got " + std::to_string(std::max<Eigen::Index>(t_eff, 0)));
    }

    Eigen::MatrixXd x(t_eff, k);
    for (int l = 1; l <= lags; ++l) {
        x.middleCols(kdim * (l - 1), kdim) = data.block(lags - l, 0, t_eff, kdim);
    }
    if (mexo > 0) {
        x.middleCols(kdim * lags, mexo) = data.block(lags, kdim, t_eff, mexo);
    }
    x.col(k - 1).setOnes();
    const Eigen::MatrixXd y = data.block(lags, 0, t_eff, kdim);

    VarModel m;
    for (const auto& s : endog) m.endogenous.push_back(s.name());
    for (const auto& s : exog) m.exogenous.push_back(s.name());
    m.lags = lags;
    m.first_year = aligned.front().start_year() + lags;
    m.lag_coefficients.assign(static_cast<std::size_t>(lags), Eigen::MatrixXd(kdim, kdim));
    m.lag_std_errors.assign(static_cast<std::size_t>(lags), Eigen::MatrixXd(kdim, kdim));
    m.exog_coefficients.resize(kdim, mexo);
    m.exog_std_errors.resize(kdim, mexo);
    m.intercepts.resize(kdim);
    m.intercept_std_errors.resize(kdim);
    m.residuals.resize(t_eff, kdim);
    m.fitted.resize(t_eff, kdim);
    m.design = x;

    const double ml = std::sqrt(static_cast<double>(t_eff - k) / static_cast<double>(t_eff));
    for (Eigen::Index i = 0; i < kdim; ++i) {
        const auto ls = linalg::least_squares(x, y.col(i));
        for (int l = 0; l < lags; ++l) {
            for (Eigen::Index j = 0; j < kdim; ++j) {
                m.lag_coefficients[static_cast<std::size_t>(l)](i, j) = ls.coef(kdim * l + j);
                m.lag_std_errors[static_cast<std::size_t>(l)](i, j) = ml * ls.se(kdim * l + j);
            }
        }
        for (Eigen::Index j = 0; j < mexo; ++j) {
            m.exog_coefficients(i, j) = ls.coef(kdim * lags + j);
            m.exog_std_errors(i, j) = ml * ls.se(kdim * lags + j);
        }
        m.intercepts(i) = ls.coef(k - 1);
        m.intercept_std_errors(i) = ml * ls.se(k - 1);
        m.residuals.col(i) = ls.resid;
        m.fitted.col(i) = ls.fitted;
        m.r_squared.push_back(r_squared(ls.ssr, y.col(i)));
        m.rmsfe.push_back(std::sqrt(ls.ssr / static_cast<double>(t_eff)));
        if (i == 0) {
            m.xtx_inv = ls.xtx_inv;
        }
    }
    m.sigma = m.residuals.transpose() * m.residuals / static_cast<double>(t_eff);
    return m;
}

std::vector<double> companion_eigen(std::span<const Eigen::MatrixXd> lag_coefficients) {
    if (lag_coefficients.empty()) {
        throw RangeError("companion matrix needs at least one lag");
    }
    const Eigen::Index kdim = lag_coefficients.front().rows();
    const auto p = static_cast<Eigen::Index>(lag_coefficients.size());
    const Eigen::Index dim = kdim * p;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index l = 0; l < p; ++l) {
        companion.block(0, kdim * l, kdim, kdim) = lag_coefficients[static_cast<std::size_t>(l)];
    }
    if (p > 1) {
        companion.bottomLeftCorner(dim - kdim, dim - kdim).setIdentity();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<double> moduli;
    for (const auto& ev : solver.eigenvalues()) {
        moduli.push_back(std::abs(ev));
    }
    std::sort(moduli.begin(), moduli.end(), std::greater<>());
    return moduli;
}

std::vector<double> companion_eigen(const VarModel& m) { return companion_eigen(m.lag_coefficients); }

std::vector<TestResult> var_lm_autocorr(const VarModel& m, int max_lag) {
    if (max_lag < 1) {
        throw RangeError("LM autocorrelation test needs max_lag >= 1");
    }
    const Eigen::Index t_eff = m.residuals.rows();
    const Eigen::Index kdim = m.residuals.cols();
    const Eigen::Index k = m.design.cols();
    const Eigen::Index d = k + kdim;
    if (t_eff <= max_lag + d) {
        throw DofError("too few residuals for the LM autocorrelation test");
    }
    const double det_sigma = m.sigma.determinant();
    std::vector<TestResult> out;
    for (int lag = 1; lag <= max_lag; ++lag) {
        Eigen::MatrixXd aux(t_eff, d);
        aux.leftCols(k) = m.design;
        aux.rightCols(kdim).setZero();
        aux.block(lag, k, t_eff - lag, kdim) = m.residuals.topRows(t_eff - lag);
        const Eigen::MatrixXd e = linalg::residualize(aux, m.residuals);
        const Eigen::MatrixXd sigma_j = e.transpose() * e / static_cast<double>(t_eff);
        const double lm = std::max(
            0.0, (static_cast<double>(t_eff - d) - 0.5) * std::log(det_sigma / sigma_j.determinant()));
        const double df = static_cast<double>(kdim * kdim);
        out.push_back({"lm_autocorrelation_lag" + std::to_string(lag), lm, df, std::nullopt,
                       dist::chi2_sf(lm, df), "no autocorrelation at lag " + std::to_string(lag)});
    }
    return out;
}

SkewKurtResult residual_normality(const VarModel& m, std::size_t equation) {
    if (equation >= m.dim()) {
        throw RangeError("equation index out of range");
    }
    const Eigen::VectorXd e = m.residuals.col(static_cast<Eigen::Index>(equation));
    return jarque_bera(std::span<const double>(e.data(), static_cast<std::size_t>(e.size())));
}

std::vector<GrangerResult> granger_causality(std::span<const Series> endog, int lags) {
    if (endog.size() != 2) {
        throw RangeError("Granger causality is implemented for a pair of series");
    }
    const VarModel m = var_fit(endog, {}, lags);
    const Eigen::Index t_eff = m.residuals.rows();
    const Eigen::Index kdim = 2;
    std::vector<GrangerResult> out;
    for (Eigen::Index eq = 0; eq < kdim; ++eq) {
        const Eigen::Index excluded = 1 - eq;
        Eigen::VectorXd b(lags);
        Eigen::MatrixXd v(lags, lags);
        const double sigma2 = m.residuals.col(eq).squaredNorm() / static_cast<double>(t_eff);
        for (int a = 0; a < lags; ++a) {
            b(a) = m.lag_coefficients[static_cast<std::size_t>(a)](eq, excluded);
            for (int c = 0; c < lags; ++c) {
                v(a, c) = sigma2 * m.xtx_inv(kdim * a + excluded, kdim * c + excluded);
            }
        }
        const double wald = b.dot(v.ldlt().solve(b));
        const auto& eq_name = m.endogenous[static_cast<std::size_t>(eq)];
        const auto& ex_name = m.endogenous[static_cast<std::size_t>(excluded)];
        out.push_back({eq_name, ex_name,
                       {"granger_wald", wald, static_cast<double>(lags), std::nullopt,
                        dist::chi2_sf(wald, lags), ex_name + " does not Granger-cause " + eq_name}});
    }
    return out;
}

VecmModel vecm_fit(std::span<const Series> endog, int rank, int lags, JohansenTrend trend) {
    if (rank != 1) {
        throw RangeError("only rank-one VECMs are supported for bivariate systems");
    }
    RankTestResult rank_test = johansen_trace(endog, {trend, lags});
    const Eigen::VectorXd beta = normalized_cointegrating_vector(rank_test);

    const auto aligned = align(endog);
    const Eigen::MatrixXd levels = columns_of(aligned);
    const Eigen::Index n = levels.rows();
    const Eigen::Index kdim = levels.cols();
    const Eigen::MatrixXd dy = levels.bottomRows(n - 1) - levels.topRows(n - 1);
    const Eigen::Index t_eff = n - lags;
    const int det = trend == JohansenTrend::constant ? 1 : 0;
    const Eigen::Index k = 1 + kdim * (lags - 1) + det;
    if (t_eff <= k) {
        throw DofError("too few observations for the VECM");
    }

    Eigen::MatrixXd x(t_eff, k);
    Eigen::VectorXd ec = levels.middleRows(lags - 1, t_eff) * beta.head(kdim);
    if (trend == JohansenTrend::rconstant) {
        ec.array() += beta(kdim);
    }
    x.col(0) = ec;
    for (int i = 1; i < lags; ++i) {
        x.middleCols(1 + kdim * (i - 1), kdim) = dy.middleRows(lags - 1 - i, t_eff);
    }
    if (det) {
        x.col(k - 1).setOnes();
    }
    const Eigen::MatrixXd y = dy.bottomRows(t_eff);

    VecmModel m;
    for (const auto& s : endog) m.endogenous.push_back(s.name());
    m.trend = trend;
    m.lags = lags;
    m.first_year = aligned.front().start_year() + lags;
    m.beta = beta;
    m.alpha.resize(kdim);
    m.alpha_std_errors.resize(kdim);
    m.gamma.assign(static_cast<std::size_t>(lags - 1), Eigen::MatrixXd(kdim, kdim));
    m.intercepts = Eigen::VectorXd::Zero(kdim);
    m.residuals.resize(t_eff, kdim);
    m.design = x;
    const double ml = std::sqrt(static_cast<double>(t_eff - x.cols()) / static_cast<double>(t_eff));
    for (Eigen::Index i = 0; i < kdim; ++i) {
        const auto ls = linalg::least_squares(x, y.col(i));
        m.alpha(i) = ls.coef(0);
        m.alpha_std_errors(i) = ml * ls.se(0);
        for (int l = 1; l < lags; ++l) {
            for (Eigen::Index j = 0; j < kdim; ++j) {
                m.gamma[static_cast<std::size_t>(l - 1)](i, j) = ls.coef(1 + kdim * (l - 1) + j);
            }
        }
        if (det) {
            m.intercepts(i) = ls.coef(k - 1);
        }
        m.residuals.col(i) = ls.resid;
        m.r_squared.push_back(r_squared(ls.ssr, y.col(i)));
        m.rmsfe.push_back(std::sqrt(ls.ssr / static_cast<double>(t_eff)));
    }
    m.rank_supported = rank_test.selected_rank == 1;
    m.rank_test = std::move(rank_test);
    return m;
}

double rmsfe(const Series& predicted, const Series& actual) {
    const Series pair[] = {predicted, actual};
    std::pair<int, int> range;
    try {
        range = common_range(pair);
    } catch (const AlignmentError&) {
        throw LengthError("series share no years");
    }
    double ss = 0.0;
    for (int y = range.first; y <= range.second; ++y) {
        const double d = predicted.at_year(y) - actual.at_year(y);
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(range.second - range.first + 1));
}

}  // namespace tsecon
