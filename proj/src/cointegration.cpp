#include "tsecon/cointegration.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "tsecon/error.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

std::string_view to_string(DifferenceVariant v) {
    switch (v) {
        case DifferenceVariant::direct: return "diff1";
        case DifferenceVariant::ma2: return "diff2";
        case DifferenceVariant::ma3: return "diff3";
    }
    return "?";
}

std::string_view to_string(JohansenTrend t) {
    switch (t) {
        case JohansenTrend::constant: return "constant";
        case JohansenTrend::rconstant: return "rconstant";
        case JohansenTrend::none: return "none";
    }
    return "?";
}

DifferenceTestResult difference_test(const Series& measured, const Series& predicted,
                                     DifferenceVariant variant, const DifferenceGrid& grid) {
    Series reference = predicted;
    if (variant == DifferenceVariant::ma2) {
        reference = moving_average(predicted, 2);
    } else if (variant == DifferenceVariant::ma3) {
        reference = moving_average(predicted, 3);
    }
    Series d = subtract(measured, reference).renamed(std::string(to_string(variant)));

    DifferenceTestResult out{variant, d, summary(d), {}, {}, {}};
    for (int lag : grid.adf_lags) {
        out.adf.push_back(adf_test(d, lag, grid.adf_spec));
    }
    for (int lag : grid.dfgls_lags) {
        out.dfgls.push_back(dfgls_test(d, lag, grid.dfgls_spec));
    }
    out.normality = skew_kurt_test(d);
    return out;
}

CriticalValues engle_granger_critical_values(std::size_t n) {
    if (n < 20) {
        throw RangeError("Engle-Granger critical values need n >= 20");
    }
    const double t = static_cast<double>(n);
    auto surface = [t](double b_inf, double b1, double b2) { return b_inf + b1 / t + b2 / (t * t); };
    return {surface(-3.9001, -10.534, -30.03), surface(-3.3377, -5.967, -8.98),
            surface(-3.0462, -4.069, -5.73)};
}

EGResult engle_granger(const Series& y, const Series& x, int residual_lags) {
    const Series regressors[] = {x};
    RegressionFit fit = ols_fit(y, regressors, true);
    if (fit.ssr <= 1e-24 * std::max(fit.response.squaredNorm(), DBL_MIN)) {
        throw DegenerateInput("first-stage residuals are identically zero");
    }
    UnitRootResult test = adf_test(fit.residuals, residual_lags, TrendSpec::none);
    test.critical_values = engle_granger_critical_values(std::max<std::size_t>(test.n_effective, 20));
    std::optional<SignificanceLevel> level;
    for (auto l : {SignificanceLevel::pct10, SignificanceLevel::pct5, SignificanceLevel::pct1}) {
        if (test.rejects(l)) {
            level = l;
        }
    }
    return {std::move(fit), test, level};
}

double johansen_critical(JohansenTrend trend, int rank_deficit, SignificanceLevel level) {
    if (level != SignificanceLevel::pct5) {
        throw RangeError("only 5% Johansen critical values are tabulated");
    }
    if (rank_deficit < 1 || rank_deficit > 2) {
        throw RangeError("rank deficit must be 1 or 2 for a bivariate system");
    }
    // Osterwald-Lenum (1992): Table 1 (constant), 1* (restricted constant),
    // 0 (no deterministic terms).
    switch (trend) {
        case JohansenTrend::constant: return rank_deficit == 2 ? 15.41 : 3.76;
        case JohansenTrend::rconstant: return rank_deficit == 2 ? 19.96 : 9.42;
        case JohansenTrend::none: return rank_deficit == 2 ? 12.53 : 3.84;
    }
    throw RangeError("unknown trend specification");
}

RankTestResult johansen_trace(std::span<const Series> data, const JohansenSpec& spec) {
    constexpr int kDim = 2;
    if (data.size() != kDim) {
        throw RangeError("Johansen test is implemented for bivariate systems");
    }
    if (spec.lags < 1) {
        throw RangeError("Johansen lag order must be at least 1");
    }
    const auto aligned = align(data);
    const auto n = static_cast<Eigen::Index>(aligned[0].size());
    const int p = spec.lags;
    const int det_unrestricted = spec.trend == JohansenTrend::constant ? 1 : 0;
    const int det_restricted = spec.trend == JohansenTrend::rconstant ? 1 : 0;
    if (n <= 2 * p + det_unrestricted + det_restricted + 2) {
        throw DofError("too few observations for a Johansen test with " + std::to_string(p) + " lags");
    }

    Eigen::MatrixXd levels(n, kDim);
    for (int j = 0; j < kDim; ++j) {
        levels.col(j) = Eigen::Map<const Eigen::VectorXd>(aligned[static_cast<std::size_t>(j)].values().data(), n);
    }
    const Eigen::MatrixXd dy = levels.bottomRows(n - 1) - levels.topRows(n - 1);  // dy row i = y(i+1) - y(i)

    // Observations t = p..n-1 (0-based levels index).
    const Eigen::Index t_eff = n - p;
    Eigen::MatrixXd z0 = dy.bottomRows(t_eff);  // dy_t
    Eigen::MatrixXd z1(t_eff, kDim + det_restricted);
    z1.leftCols(kDim) = levels.middleRows(p - 1, t_eff);  // y_{t-1}
    if (det_restricted) {
        z1.col(kDim).setOnes();
    }
    Eigen::MatrixXd z2(t_eff, kDim * (p - 1) + det_unrestricted);
    for (int i = 1; i < p; ++i) {
        z2.middleCols(kDim * (i - 1), kDim) = dy.middleRows(p - 1 - i, t_eff);  // dy_{t-i}
    }
    if (det_unrestricted) {
        z2.col(z2.cols() - 1).setOnes();
    }

    const Eigen::MatrixXd r0 = linalg::residualize(z2, z0);
    const Eigen::MatrixXd r1 = linalg::residualize(z2, z1);
    const double tt = static_cast<double>(t_eff);
    const Eigen::MatrixXd s00 = r0.transpose() * r0 / tt;
    const Eigen::MatrixXd s01 = r0.transpose() * r1 / tt;
    const Eigen::MatrixXd s11 = r1.transpose() * r1 / tt;

    Eigen::LLT<Eigen::MatrixXd> s00_llt(s00);
    if (s00_llt.info() != Eigen::Success) {
        throw CollinearError("differenced series are collinear");
    }
    {
        const Eigen::VectorXd d = s00.diagonal();
        const double corr2 = s00(0, 1) * s00(0, 1) / (d(0) * d(1));
        if (!(d.minCoeff() > 0.0) || 1.0 - corr2 <= 1e-12) {
            throw CollinearError("differenced series are collinear");
        }
    }
    const Eigen::MatrixXd a = s01.transpose() * s00_llt.solve(s01);
    const auto eig = linalg::generalized_symmetric_eigen(a, s11);

    RankTestResult out;
    out.spec = spec;
    out.labels = {aligned[0].name(), aligned[1].name()};
    out.n_effective = static_cast<std::size_t>(t_eff);
    out.eigenvalues = eig.values.head(kDim).cwiseMax(0.0).cwiseMin(1.0 - 1e-15);
    out.eigenvectors = eig.vectors.leftCols(kDim);

    const double log_det_s00 = std::log(s00.determinant());
    const double base = -0.5 * tt * (kDim * (1.0 + std::log(2.0 * std::numbers::pi)) + log_det_s00);
    const int short_run = kDim * kDim * (p - 1) + kDim * det_unrestricted;
    const int beta_rows = kDim + det_restricted;

    double cumulative = 0.0;
    out.selected_rank = kDim;
    bool selected = false;
    for (int r = 0; r <= kDim; ++r) {
        RankRow row;
        row.rank = r;
        if (r > 0) {
            const double lambda = out.eigenvalues(r - 1);
            cumulative += std::log1p(-lambda);
            row.eigenvalue = lambda;
        }
        row.log_likelihood = base - 0.5 * tt * cumulative;
        row.parms = short_run + r * (kDim + beta_rows) - r * r;
        if (r < kDim) {
            double trace = 0.0;
            for (int i = r; i < kDim; ++i) {
                trace -= tt * std::log1p(-out.eigenvalues(i));
            }
            row.trace_statistic = trace;
            row.critical_5 = johansen_critical(spec.trend, kDim - r);
            if (!selected && trace < *row.critical_5) {
                out.selected_rank = r;
                selected = true;
            }
        }
        out.rows.push_back(row);
    }
    return out;
}

Eigen::VectorXd normalized_cointegrating_vector(const RankTestResult& result) {
    const Eigen::VectorXd v = result.eigenvectors.col(0);
    if (v(0) == 0.0) {
        throw DegenerateInput("first element of the cointegrating vector is zero");
    }
    return v / v(0);
}

}  // namespace tsecon
