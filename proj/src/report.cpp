#include "tsecon/report.hpp"

#include <cmath>
#include <fstream>

#include "tsecon/error.hpp"

namespace tsecon::report {

namespace {

json vec(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

json mat(const Eigen::MatrixXd& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out.push_back(vec(m.row(i).transpose()));
    }
    return out;
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const Series& s) {
    return {{"name", s.name()},
            {"start_year", s.start_year()},
            {"values", std::vector<double>(s.values().begin(), s.values().end())}};
}

json to_json(const SummaryStats& s) {
    return {{"mean", s.mean}, {"stdev", s.stdev}, {"min", s.min}, {"max", s.max}, {"n", s.n}};
}

json to_json(const TestResult& t) {
    return {{"test", t.test},       {"statistic", t.statistic}, {"df", t.df},
            {"df2", opt(t.df2)},    {"p_value", t.p_value},     {"null", t.null_hypothesis}};
}

json to_json(const SkewKurtResult& r) {
    return {{"skewness", r.skewness},     {"kurtosis", r.kurtosis},     {"z_skewness", r.z_skewness},
            {"z_kurtosis", r.z_kurtosis}, {"p_skewness", r.p_skewness}, {"p_kurtosis", r.p_kurtosis},
            {"joint", to_json(r.joint)}};
}

json to_json(const RegressionFit& fit) {
    json coefs = json::array();
    for (std::size_t i = 0; i < fit.labels.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        coefs.push_back({{"label", fit.labels[i]},
                         {"coefficient", fit.coefficients(k)},
                         {"std_error", fit.std_errors(k)},
                         {"t", fit.t_stats(k)},
                         {"p_value", fit.t_pvalues(k)}});
    }
    return {{"coefficients", coefs}, {"r_squared", fit.r_squared}, {"rmse", fit.rmse},
            {"ssr", fit.ssr},        {"n", fit.n},                  {"k", fit.k}};
}

json to_json(const UnitRootResult& r) {
    return {{"test", to_string(r.test)},
            {"spec", to_string(r.spec)},
            {"lags", r.lags},
            {"statistic", r.statistic},
            {"n_effective", r.n_effective},
            {"critical_values",
             {{"1%", r.critical_values.pct1}, {"5%", r.critical_values.pct5}, {"10%", r.critical_values.pct10}}},
            {"rejects_1pct", r.rejects(SignificanceLevel::pct1)},
            {"rejects_5pct", r.rejects(SignificanceLevel::pct5)}};
}

json to_json(const DifferenceTestResult& r) {
    json adf = json::array();
    json dfgls = json::array();
    for (const auto& a : r.adf) {
        adf.push_back(to_json(a));
    }
    for (const auto& d : r.dfgls) {
        dfgls.push_back(to_json(d));
    }
    return {{"variant", to_string(r.variant)}, {"summary", to_json(r.stats)}, {"adf", adf},
            {"dfgls", dfgls},                  {"normality", to_json(r.normality)}};
}

json to_json(const EGResult& r) {
    return {{"first_stage", to_json(r.first_stage)},
            {"residual_test", to_json(r.residual_test)},
            {"cointegrated_at", r.cointegrated_at ? json(to_string(*r.cointegrated_at)) : json(nullptr)}};
}

json to_json(const RankTestResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"rank", row.rank},
                        {"parms", row.parms},
                        {"LL", row.log_likelihood},
                        {"eigenvalue", opt(row.eigenvalue)},
                        {"trace", opt(row.trace_statistic)},
                        {"critical_5pct", opt(row.critical_5)}});
    }
    return {{"trend", to_string(r.spec.trend)},
            {"lags", r.spec.lags},
            {"labels", r.labels},
            {"n_effective", r.n_effective},
            {"rows", rows},
            {"selected_rank", r.selected_rank},
            {"eigenvalues", vec(r.eigenvalues)}};
}

json to_json(const VarModel& m) {
    json lags = json::array();
    for (std::size_t l = 0; l < m.lag_coefficients.size(); ++l) {
        lags.push_back({{"lag", l + 1},
                        {"coefficients", mat(m.lag_coefficients[l])},
                        {"std_errors", mat(m.lag_std_errors[l])}});
    }
    return {{"endogenous", m.endogenous},
            {"exogenous", m.exogenous},
            {"lags", lags},
            {"exog_coefficients", mat(m.exog_coefficients)},
            {"exog_std_errors", mat(m.exog_std_errors)},
            {"intercepts", vec(m.intercepts)},
            {"intercept_std_errors", vec(m.intercept_std_errors)},
            {"sigma", mat(m.sigma)},
            {"r_squared", m.r_squared},
            {"rmsfe", m.rmsfe},
            {"first_year", m.first_year},
            {"n_effective", m.residuals.rows()}};
}

json to_json(const GrangerResult& g) {
    return {{"equation", g.equation}, {"excluded", g.excluded}, {"wald", to_json(g.wald)}};
}

json to_json(const VecmModel& m) {
    json gamma = json::array();
    for (const auto& g : m.gamma) {
        gamma.push_back(mat(g));
    }
    return {{"endogenous", m.endogenous},
            {"trend", to_string(m.trend)},
            {"lags", m.lags},
            {"beta", vec(m.beta)},
            {"alpha", vec(m.alpha)},
            {"alpha_std_errors", vec(m.alpha_std_errors)},
            {"gamma", gamma},
            {"intercepts", vec(m.intercepts)},
            {"r_squared", m.r_squared},
            {"rmsfe", m.rmsfe},
            {"rank_supported", m.rank_supported},
            {"rank_test", to_json(m.rank_test)}};
}

json to_json(const Calibration& c) {
    return {{"a1", c.coefficients.a1},       {"a2", c.coefficients.a2},
            {"lag", c.coefficients.lag},     {"first_year", c.first_year},
            {"last_year", c.last_year},      {"terminal_mismatch", c.terminal_mismatch}};
}

json to_json(const SubperiodReport& r) {
    json segs = json::array();
    for (const auto& s : r.segments) {
        segs.push_back({{"first_year", s.first_year}, {"last_year", s.last_year}, {"rmsfe", s.rmsfe}});
    }
    return {{"segments", segs},
            {"full", {{"first_year", r.full.first_year}, {"last_year", r.full.last_year}, {"rmsfe", r.full.rmsfe}}}};
}

json to_json(const SpuriousRow& r) {
    return {{"A", r.amplitude},
            {"r2", r.r_squared},
            {"dw", r.durbin_watson},
            {"arch_p", r.arch_p},
            {"eg_statistic", r.eg_statistic},
            {"eg_cointegrated", r.eg_cointegrated},
            {"johansen_rank", opt(r.johansen_rank)}};
}

json to_json(const SpuriousReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(to_json(row));
    }
    return {{"rows", rows}, {"white_noise_control", to_json(r.control)}};
}

json to_json(const McRow& r) {
    return {{"test", r.test},           {"process", r.process},     {"level", r.level},
            {"reps", r.reps},           {"rejections", r.rejections}, {"rate", r.rate()}};
}

json relative_deviation(double computed, double published) {
    if (published == 0.0) {
        return nullptr;
    }
    return (computed - published) / std::abs(published);
}

void write_json(const std::string& path, const json& value) {
    std::ofstream out(path);
    if (!out) {
        throw RangeError("cannot write " + path);
    }
    out << value.dump(2) << '\n';
}

}  // namespace tsecon::report
