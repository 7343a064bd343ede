#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "tsecon/demographics.hpp"
#include "tsecon/error.hpp"
#include "tsecon/inflation.hpp"
#include "tsecon/ols.hpp"
#include "tsecon/reference_values.hpp"
#include "tsecon/report.hpp"
#include "tsecon/svg.hpp"
#include "tsecon/var.hpp"

namespace fs = std::filesystem;

namespace tsecon::cli {

namespace {

std::string num(double v) { return format_double(v); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

fs::path output_path(const RunConfig& cfg, const std::string& file) {
    fs::create_directories(cfg.output_dir);
    return fs::path(cfg.output_dir) / file;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw RangeError("cannot write " + path.string());
    }
    out << text;
}

Series load_input(const std::string& path) {
    return load_csv_file(path, fs::path(path).stem().string());
}

std::vector<int> load_years(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFixture(fs::path(path).filename().string());
    }
    return load_year_list(in);
}

ModelCoefficients model_for(const RunConfig& cfg, const Series& measured, const Series& lf) {
    if (cfg.lag == kUsGdpDeflatorModel.lag) {
        return kUsGdpDeflatorModel;
    }
    return calibrate_cumulative(measured, lf, cfg.lag).coefficients;
}

struct InflationData {
    Series measured;
    PredictorSet set;
    ModelCoefficients model;
};

InflationData inflation_data(const RunConfig& cfg) {
    const Fixtures f(cfg.data_dir);
    Series measured = f.measured();
    const Series lf = f.labor_force();
    const ModelCoefficients c = model_for(cfg, measured, lf);
    return {measured, build_predictor_set(lf, f.labor_force_halfyear(), c), c};
}

/// Restricts `s` to the years of `window` it shares.
Series within(const Series& s, const Series& window) {
    const Series pair[] = {s, window};
    const auto [first, last] = common_range(pair);
    return s.slice(first, last);
}

std::vector<std::pair<std::string, std::optional<Series>>> named_predictors(const PredictorSet& p) {
    return {{"predicted", p.predicted}, {"shifted", p.shifted},   {"predicted2", p.predicted2},
            {"shifted2", p.shifted2},   {"MA(2)", p.ma2},         {"MA(3)", p.ma3}};
}

std::optional<Series> predictor(const PredictorSet& p, const std::string& name) {
    for (auto& [n, s] : named_predictors(p)) {
        if (n == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string lag_label(const std::string& prefix, int lag) { return prefix + " lag " + std::to_string(lag); }

// ---------------------------------------------------------------------------
// Tables

json table_1(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    std::vector<std::pair<std::string, std::optional<Series>>> rows = {{"measured", d.measured}};
    for (auto& p : named_predictors(d.set)) {
        rows.push_back(p);
    }
    for (const auto& [name, s] : rows) {
        if (!s) {
            cmp.add(name, "ADF lag 0", std::nullopt);
            continue;
        }
        const Series x = within(*s, d.measured);
        const auto adf = adf_test(x, 0, TrendSpec::constant);
        const auto g1 = dfgls_test(x, 1, TrendSpec::trend);
        const auto g4 = dfgls_test(x, 4, TrendSpec::trend);
        cmp.add(name, "ADF lag 0", adf.statistic);
        cmp.add(name, "DF-GLS lag 1", g1.statistic);
        cmp.add(name, "DF-GLS lag 4", g4.statistic);
        if (name == "measured") {
            cmp.add("1% critical", "ADF lag 0", adf.critical_values.pct1);
            cmp.add("1% critical", "DF-GLS lag 1", g1.critical_values.pct1);
            cmp.add("1% critical", "DF-GLS lag 4", g4.critical_values.pct1);
        }
        results.push_back({{"series", name},
                           {"first_year", x.start_year()},
                           {"last_year", x.end_year()},
                           {"adf", report::to_json(adf)},
                           {"dfgls", {report::to_json(g1), report::to_json(g4)}}});
    }
    return results;
}

json table_2(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    const Series dm = diff(d.measured).renamed("dmeasured");
    const Series dp = diff(within(d.set.predicted, d.measured)).renamed("dpredicted");
    json results = json::array();
    for (auto [spec, label] : {std::pair{TrendSpec::trend, "trend"}, std::pair{TrendSpec::constant, "constant"}}) {
        for (const Series* s : {&dm, &dp}) {
            json entry{{"series", s->name()}, {"spec", label}, {"adf", json::array()}, {"dfgls", json::array()}};
            const std::string row = s->name() + " (" + label + ")";
            for (int lag = 0; lag <= 3; ++lag) {
                const auto r = adf_test(*s, lag, spec);
                cmp.add(row, lag_label("ADF", lag), r.statistic);
                if (s == &dm) {
                    cmp.add(std::string("1% critical (") + label + ")", lag_label("ADF", lag), r.critical_values.pct1);
                }
                entry["adf"].push_back(report::to_json(r));
            }
            for (int lag = 1; lag <= 3; ++lag) {
                const auto r = dfgls_test(*s, lag, spec);
                cmp.add(row, lag_label("DF-GLS", lag), r.statistic);
                if (s == &dm) {
                    cmp.add(std::string("1% critical (") + label + ")", lag_label("DF-GLS", lag),
                            r.critical_values.pct1);
                }
                entry["dfgls"].push_back(report::to_json(r));
            }
            results.push_back(entry);
        }
    }
    return results;
}

json table_3(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    for (auto v : {DifferenceVariant::direct, DifferenceVariant::ma2, DifferenceVariant::ma3}) {
        const auto r = difference_test(d.measured, d.set.predicted, v);
        const std::string row(to_string(v));
        cmp.add(row, "ADF lag 0", r.adf.at(0).statistic);
        for (std::size_t i = 0; i < r.dfgls.size(); ++i) {
            cmp.add(row, lag_label("DF-GLS", r.dfgls[i].lags), r.dfgls[i].statistic);
        }
        cmp.add(row, "mean", r.stats.mean);
        cmp.add(row, "stdev", r.stats.stdev);
        cmp.add(row, "Pr(skew)", r.normality.p_skewness);
        cmp.add(row, "Pr(kurt)", r.normality.p_kurtosis);
        cmp.add(row, "chi2", r.normality.joint.statistic);
        cmp.add(row, "Pr>chi2", r.normality.joint.p_value);
        if (v == DifferenceVariant::direct) {
            cmp.add("1% critical", "ADF lag 0", r.adf.at(0).critical_values.pct1);
            for (const auto& g : r.dfgls) {
                cmp.add("1% critical", lag_label("DF-GLS", g.lags), g.critical_values.pct1);
            }
        }
        results.push_back(report::to_json(r));
    }
    return results;
}

json table_4(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    for (const std::string name : {"predicted", "shifted", "MA(2)", "MA(3)"}) {
        const auto s = predictor(d.set, name);
        if (!s) {
            cmp.add(name, "R2", std::nullopt);
            continue;
        }
        const Series regressors[] = {s->renamed(name)};
        const RegressionFit fit = ols_fit(d.measured, regressors, true);
        const auto het = het_test(fit);
        const auto reset = ramsey_reset(fit);
        const auto arch = arch_lm(fit, 1);
        const auto bg = breusch_godfrey(fit, 1);
        const double dw = durbin_watson(fit);
        const double cum = cumulative_r_squared(within(d.measured, fit.fitted), fit.fitted);
        const auto c = static_cast<Eigen::Index>(fit.k - 1);
        cmp.add(name, "het Pr>chi2", het.p_value);
        cmp.add(name, "RESET Pr>F", reset.p_value);
        cmp.add(name, "ARCH Pr>chi2", arch.p_value);
        cmp.add(name, "BG Pr>chi2", bg.p_value);
        cmp.add(name, "DW", dw);
        cmp.add(name, "R2", fit.r_squared);
        cmp.add(name, "RMSFE", fit.rmse);
        cmp.add(name, "cons", fit.coefficients(c));
        cmp.add(name, "cons se", fit.std_errors(c));
        cmp.add(name, "cons Pr>t", fit.t_pvalues(c));
        cmp.add(name, "cumulative R2", cum);
        results.push_back({{"predictor", name},
                           {"fit", report::to_json(fit)},
                           {"het", report::to_json(het)},
                           {"reset", report::to_json(reset)},
                           {"arch", report::to_json(arch)},
                           {"breusch_godfrey", report::to_json(bg)},
                           {"durbin_watson", dw},
                           {"cumulative_r_squared", cum}});
    }
    return results;
}

json table_5(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    for (const std::string name : {"predicted", "shifted"}) {
        const auto s = predictor(d.set, name);
        for (auto trend : {JohansenTrend::constant, JohansenTrend::rconstant, JohansenTrend::none}) {
            const std::string prefix = name + " " + std::string(to_string(trend)) + " rank ";
            if (!s) {
                cmp.add(prefix + "0", "trace", std::nullopt);
                continue;
            }
            const Series pair[] = {d.measured, s->renamed(name)};
            const auto r = johansen_trace(pair, {trend, 4});
            for (const auto& row : r.rows) {
                if (row.rank > 1) {
                    continue;
                }
                const std::string label = prefix + std::to_string(row.rank);
                cmp.add(label, "parms", row.parms);
                cmp.add(label, "LL", row.log_likelihood);
                cmp.add(label, "eigenvalue", row.eigenvalue);
                cmp.add(label, "trace", row.trace_statistic);
                cmp.add(label, "5% critical", row.critical_5);
            }
            results.push_back({{"predictor", name}, {"test", report::to_json(r)}});
        }
    }
    return results;
}

json table_6(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    for (const std::string name : {"predicted2", "shifted2"}) {
        const auto s = predictor(d.set, name);
        if (!s) {
            cmp.add("measured excluding " + name, "chi2", std::nullopt);
            continue;
        }
        const Series pair[] = {d.measured.renamed("measured"), s->renamed(name)};
        for (const auto& g : granger_causality(pair, cfg.lag)) {
            const std::string row = g.equation + " excluding " + g.excluded;
            cmp.add(row, "chi2", g.wald.statistic);
            cmp.add(row, "Pr>chi2", g.wald.p_value);
            results.push_back(report::to_json(g));
        }
    }
    return results;
}

json table_7(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    for (const std::string name : {"predicted", "shifted", "MA(2)", "MA(3)"}) {
        const auto s = predictor(d.set, name);
        if (!s) {
            cmp.add(name, "L1", std::nullopt);
            continue;
        }
        const Series endog[] = {d.measured.renamed("measured")};
        const Series exog[] = {s->renamed(name)};
        const VarModel m = var_fit(endog, exog, cfg.lag);
        const Series fitted = m.fitted_series(0);
        const double cum = cumulative_r_squared(within(d.measured, fitted), fitted);
        for (int l = 0; l < std::min(m.lags, 2); ++l) {
            const std::string col = "L" + std::to_string(l + 1);
            cmp.add(name, col, m.lag_coefficients[static_cast<std::size_t>(l)](0, 0));
            cmp.add(name, col + " se", m.lag_std_errors[static_cast<std::size_t>(l)](0, 0));
        }
        cmp.add(name, "exogenous", m.exog_coefficients(0, 0));
        cmp.add(name, "exogenous se", m.exog_std_errors(0, 0));
        cmp.add(name, "cons", m.intercepts(0));
        cmp.add(name, "cons se", m.intercept_std_errors(0));
        cmp.add(name, "R2", m.r_squared[0]);
        cmp.add(name, "cumulative R2", cum);
        cmp.add(name, "RMSFE", m.rmsfe[0]);
        cmp.add(name, "cumulative RMSFE", std::nullopt);
        json entry = report::to_json(m);
        entry["predictor"] = name;
        entry["cumulative_r_squared"] = cum;
        entry["companion_moduli"] = companion_eigen(m);
        json lm = json::array();
        for (const auto& t : var_lm_autocorr(m, 4)) {
            lm.push_back(report::to_json(t));
        }
        entry["lm_autocorrelation"] = lm;
        entry["normality"] = report::to_json(residual_normality(m, 0));
        results.push_back(entry);
    }
    return results;
}

json table_8(const RunConfig& cfg, Comparison& cmp) {
    const auto d = inflation_data(cfg);
    json results = json::array();
    const std::pair<const char*, int> rows[] = {{"predicted", 2}, {"shifted", 2}, {"predicted2", 4},
                                                {"shifted2", 4},  {"MA(2)", 2},   {"MA(3)", 2}};
    for (const auto& [name, lags] : rows) {
        const std::string row = std::string(name) + " lag " + std::to_string(lags);
        const auto s = predictor(d.set, name);
        if (!s) {
            cmp.add(row, "adjustment", std::nullopt);
            continue;
        }
        const Series pair[] = {d.measured.renamed("measured"), s->renamed(name)};
        json by_trend = json::object();
        std::optional<std::string> closest;
        double best = INFINITY;
        const auto published_alpha = published("8", row, "adjustment");
        for (auto trend : {JohansenTrend::constant, JohansenTrend::rconstant, JohansenTrend::none}) {
            const VecmModel m = vecm_fit(pair, 1, lags, trend);
            by_trend[std::string(to_string(trend))] = report::to_json(m);
            if (trend == JohansenTrend::constant) {
                cmp.add(row, "adjustment", m.alpha(0));
                cmp.add(row, "adjustment se", m.alpha_std_errors(0));
                cmp.add(row, "R2 measured", m.r_squared[0]);
                cmp.add(row, "R2 predictor", m.r_squared[1]);
                cmp.add(row, "RMSFE measured", m.rmsfe[0]);
                cmp.add(row, "RMSFE predictor", m.rmsfe[1]);
            }
            if (published_alpha && std::abs(m.alpha(0) - *published_alpha) < best) {
                best = std::abs(m.alpha(0) - *published_alpha);
                closest = std::string(to_string(trend));
            }
        }
        results.push_back({{"predictor", name},
                           {"lags", lags},
                           {"by_trend", by_trend},
                           {"trend_closest_to_published_adjustment", closest ? json(*closest) : json(nullptr)}});
    }
    return results;
}

CohortPair cohort_pair(const RunConfig& cfg) {
    const Fixtures f(cfg.data_dir);
    CohortPair p{f.n15(), f.n14(), f.census_years()};
    validate(p);
    return p;
}

json table_a1(const RunConfig& cfg, Comparison& cmp) {
    const auto grid = cohort_unit_root_grid(cohort_pair(cfg));
    json results = json::array();
    for (const auto& row : grid) {
        json entry{{"series", row.series}, {"adf", json::array()}, {"dfgls", json::array()}};
        for (const auto& r : row.adf) {
            cmp.add(row.series, lag_label("ADF", r.lags), r.statistic);
            if (row.series == "d2N15") {
                cmp.add("1% critical", lag_label("ADF", r.lags), r.critical_values.pct1);
            }
            entry["adf"].push_back(report::to_json(r));
        }
        for (const auto& r : row.dfgls) {
            cmp.add(row.series, lag_label("DF-GLS", r.lags), r.statistic);
            if (row.series == "d2N15") {
                cmp.add("1% critical", lag_label("DF-GLS", r.lags), r.critical_values.pct1);
            }
            entry["dfgls"].push_back(report::to_json(r));
        }
        results.push_back(entry);
    }
    return results;
}

json table_2a(const RunConfig& cfg, Comparison& cmp) {
    const CohortPair p = cohort_pair(cfg);
    json results = json::array();
    for (bool corrected : {false, true}) {
        for (const auto& c : cohort_cointegration(p, corrected, 4)) {
            const std::string row = c.pair + (corrected ? " corrected" : " original");
            json tests = json::array();
            for (const auto& r : c.by_trend) {
                const std::string trend(to_string(r.spec.trend));
                for (int rank = 0; rank <= 1; ++rank) {
                    const std::string col = trend + " rank " + std::to_string(rank);
                    cmp.add(row, col, r.rows[static_cast<std::size_t>(rank)].trace_statistic);
                    if (!corrected && c.pair.front() == 'd') {
                        cmp.add("5% critical", col, r.rows[static_cast<std::size_t>(rank)].critical_5);
                    }
                }
                tests.push_back(report::to_json(r));
            }
            results.push_back({{"pair", c.pair}, {"corrected", corrected}, {"tests", tests}});
        }
    }
    return results;
}

}  // namespace

// ---------------------------------------------------------------------------
// Fixtures

std::string Fixtures::path(const std::string& file) const { return (fs::path(dir_) / file).string(); }

bool Fixtures::has(const std::string& file) const { return fs::exists(path(file)); }

Series Fixtures::series(const std::string& file, const std::string& name) const {
    return load_csv_file(path(file), name);
}

Series Fixtures::measured() const { return series("gdp_deflator.csv", "measured"); }

Series Fixtures::raw_labor_force() const { return series("labor_force.csv", "labor_force"); }

Series Fixtures::labor_force() const {
    const Series raw = raw_labor_force();
    const auto years = revision_years();
    return years ? redistribute_revisions(raw, *years) : raw;
}

std::optional<Series> Fixtures::labor_force_halfyear() const {
    if (!has("labor_force_halfyear.csv")) {
        return std::nullopt;
    }
    return series("labor_force_halfyear.csv", "labor_force_halfyear");
}

std::optional<std::vector<int>> Fixtures::revision_years() const {
    if (!has("revision_years.txt")) {
        return std::nullopt;
    }
    return load_years(path("revision_years.txt"));
}

Series Fixtures::n15() const { return series("n15.csv", "N15"); }
Series Fixtures::n14() const { return series("n14.csv", "N14"); }

std::vector<int> Fixtures::census_years() const { return load_years(path("census_years.txt")); }

Series Fixtures::participation_rate() const { return series("participation_rate.csv", "participation_rate"); }

// ---------------------------------------------------------------------------
// Comparison

void Comparison::add(const std::string& row, const std::string& column, std::optional<double> computed) {
    computed_.push_back({row, column, computed, std::nullopt});
}

std::vector<Comparison::Cell> Comparison::cells() const {
    std::vector<Cell> out;
    std::vector<bool> used(computed_.size(), false);
    const auto& tables = reference_values().at("tables");
    if (tables.contains(table_)) {
        for (const auto& e : tables.at(table_).at("entries")) {
            Cell c{e.at("row").get<std::string>(), e.at("column").get<std::string>(), std::nullopt,
                   e.at("value").get<double>()};
            for (std::size_t i = 0; i < computed_.size(); ++i) {
                if (!used[i] && computed_[i].row == c.row && computed_[i].column == c.column) {
                    c.computed = computed_[i].computed;
                    used[i] = true;
                    break;
                }
            }
            out.push_back(c);
        }
    }
    for (std::size_t i = 0; i < computed_.size(); ++i) {
        if (!used[i] && computed_[i].computed) {
            out.push_back(computed_[i]);
        }
    }
    return out;
}

json Comparison::to_json() const {
    json out = json::array();
    for (const auto& c : cells()) {
        out.push_back({{"row", c.row},
                       {"column", c.column},
                       {"computed", c.computed ? json(*c.computed) : json(nullptr)},
                       {"published", c.published ? json(*c.published) : json(nullptr)},
                       {"relative_deviation", c.computed && c.published
                                                  ? report::relative_deviation(*c.computed, *c.published)
                                                  : json(nullptr)}});
    }
    return out;
}

void Comparison::write_csv(std::ostream& out) const {
    out << "row,column,computed,published,relative_deviation\n";
    for (const auto& c : cells()) {
        out << csv_field(c.row) << ',' << csv_field(c.column) << ',' << (c.computed ? num(*c.computed) : "") << ','
            << (c.published ? num(*c.published) : "") << ',';
        if (c.computed && c.published && *c.published != 0.0) {
            out << num((*c.computed - *c.published) / std::abs(*c.published));
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Commands

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {"1", "2", "3", "4", "5", "6", "7", "8", "A1", "2A"};
    return ids;
}

json cmd_ingest(const RunConfig& cfg) {
    if (!fs::is_directory(cfg.data_dir)) {
        throw MissingFixture(cfg.data_dir);
    }
    const Fixtures f(cfg.data_dir);
    json files = json::array();
    for (const std::string file : {"gdp_deflator.csv", "labor_force.csv", "labor_force_halfyear.csv", "n15.csv",
                                   "n14.csv", "participation_rate.csv"}) {
        json entry{{"file", file}, {"present", f.has(file)}};
        if (f.has(file)) {
            const Series s = load_csv_file(f.path(file), fs::path(file).stem().string());
            entry["first_year"] = s.start_year();
            entry["last_year"] = s.end_year();
            entry["n"] = s.size();
            if (s.size() >= 2) {
                entry["summary"] = report::to_json(summary(s));
            }
        }
        files.push_back(entry);
    }
    for (const std::string file : {"revision_years.txt", "census_years.txt"}) {
        json entry{{"file", file}, {"present", f.has(file)}};
        if (f.has(file)) {
            entry["years"] = load_years(f.path(file));
        }
        files.push_back(entry);
    }
    const json out{{"command", "ingest"}, {"data_dir", cfg.data_dir}, {"fixtures", files}};
    report::write_json(output_path(cfg, "ingest.json").string(), out);
    return out;
}

json cmd_reproduce_table(const std::string& id, const RunConfig& cfg) {
    using Builder = json (*)(const RunConfig&, Comparison&);
    static const std::map<std::string, Builder> builders = {
        {"1", table_1}, {"2", table_2}, {"3", table_3}, {"4", table_4},  {"5", table_5},
        {"6", table_6}, {"7", table_7}, {"8", table_8}, {"A1", table_a1}, {"2A", table_2a}};
    const auto it = builders.find(id);
    if (it == builders.end()) {
        throw RangeError("unknown table '" + id + "'");
    }
    Comparison cmp(id);
    json results = it->second(cfg, cmp);
    const auto& ref = reference_values();
    json out{{"table", id},
             {"title", ref.at("tables").at(id).at("title")},
             {"reference_version", ref.at("version")},
             {"data_dir", cfg.data_dir},
             {"lag", cfg.lag},
             {"results", std::move(results)},
             {"comparison", cmp.to_json()}};
    report::write_json(output_path(cfg, "table_" + id + ".json").string(), out);
    std::ostringstream csv;
    cmp.write_csv(csv);
    write_text(output_path(cfg, "table_" + id + ".csv"), csv.str());
    return out;
}

json cmd_calibrate(const RunConfig& cfg, int first_year, int last_year, std::vector<int> breakpoints) {
    if (cfg.lag < 0) {
        throw RangeError("lag must be non-negative");
    }
    const Fixtures f(cfg.data_dir);
    const Series measured = f.measured();
    const Series lf = f.labor_force();
    const Series lagged_growth = shift(growth_rate(lf), cfg.lag);
    const Series pair[] = {measured, lagged_growth};
    const auto [lo, hi] = common_range(pair);
    const int first = std::max(first_year, lo);
    const int last = std::min(last_year, hi);
    if (first > last) {
        throw LengthError("calibration window has no data");
    }
    const Calibration cal = calibrate_cumulative(measured.slice(first, last), lf, cfg.lag);
    const PredictorSet set = build_predictor_set(lf, f.labor_force_halfyear(), cal.coefficients);
    const Series m = measured.slice(first, last);
    std::erase_if(breakpoints, [&](int b) { return b < first || b >= last; });
    const SubperiodReport sub = evaluate_subperiods(m, within(set.predicted, m), breakpoints);

    json variants = json::array();
    for (const auto& [name, s] : named_predictors(set)) {
        json entry{{"name", name}, {"present", s.has_value()}};
        if (s) {
            entry["first_year"] = s->start_year();
            entry["last_year"] = s->end_year();
            entry["summary"] = report::to_json(summary(*s));
            if (name != "predicted2" && name != "shifted2") {
                entry["rmsfe"] = rmsfe(*s, m);
            }
        }
        variants.push_back(entry);
    }
    json segments = json::array();
    for (const auto& s : sub.segments) {
        segments.push_back({{"first_year", s.first_year}, {"last_year", s.last_year}, {"rmsfe", s.rmsfe}});
    }
    const auto& model = reference_values().at("model");
    json out{{"command", "calibrate"},
             {"a1", cal.coefficients.a1},
             {"a2", cal.coefficients.a2},
             {"lag", cal.coefficients.lag},
             {"first_year", cal.first_year},
             {"last_year", cal.last_year},
             {"terminal_mismatch", cal.terminal_mismatch},
             {"rmsfe_full", sub.full.rmsfe},
             {"rmsfe_segments", segments},
             {"revisions_redistributed", f.has("revision_years.txt")},
             {"predictor_set", variants},
             {"published", {{"a1", model.at("a1")}, {"a2", model.at("a2")}, {"rmsfe_full", model.at("rmsfe_full")}}}};
    report::write_json(output_path(cfg, "calibration.json").string(), out);
    std::ostringstream csv;
    csv << "year,measured,predicted\n";
    for (int y = first; y <= last; ++y) {
        csv << y << ',' << num(measured.at_year(y)) << ','
            << (set.predicted.contains(y) ? num(set.predicted.at_year(y)) : "") << '\n';
    }
    write_text(output_path(cfg, "calibration.csv"), csv.str());
    svg::write_line_chart(output_path(cfg, "calibration.svg").string(), "Measured and predicted inflation", "year",
                          {svg::from_series(m), svg::from_series(within(set.predicted, m))});
    return out;
}

json cmd_synthetic(const RunConfig& cfg, const std::vector<double>& amplitudes) {
    SyntheticSpec spec;
    spec.amplitudes = amplitudes;
    spec.control_seed = cfg.seed;
    const SpuriousReport rep = spurious_experiment(spec);
    std::ostringstream csv;
    write_spurious_csv(csv, rep);
    write_text(output_path(cfg, "synthetic.csv"), csv.str());
    json out = report::to_json(rep);
    out["command"] = "synthetic";
    out["n"] = spec.n;
    out["control_seed"] = spec.control_seed;
    report::write_json(output_path(cfg, "synthetic.json").string(), out);

    const Series r = synthetic_reference(spec);
    std::vector<svg::Line> curves = {svg::from_series(r)};
    if (!amplitudes.empty()) {
        const double a = *std::max_element(amplitudes.begin(), amplitudes.end());
        const Series x = add(r, synthetic_error(a, spec.n)).renamed("r+e, A=" + num(a));
        const Series regressors[] = {x};
        const auto fit = ols_fit(r, regressors, true);
        curves.push_back(svg::from_series(x));
        curves.push_back(svg::from_series(fit.residuals.renamed("residual")));
    }
    svg::write_line_chart(output_path(cfg, "synthetic_curves.svg").string(), "Synthetic series", "t", curves);
    svg::Line r2{"R2", {}, {}};
    svg::Line dw{"DW", {}, {}};
    for (const auto& row : rep.rows) {
        r2.x.push_back(row.amplitude);
        r2.y.push_back(row.r_squared);
        dw.x.push_back(row.amplitude);
        dw.y.push_back(row.durbin_watson);
    }
    svg::write_line_chart(output_path(cfg, "synthetic_r2_dw.svg").string(), "R2 and DW against amplitude", "A",
                          {r2, dw});
    return out;
}

json cmd_montecarlo(const RunConfig& cfg, McSuite suite, int reps) {
    McConfig mc;
    mc.reps = reps;
    mc.diagnostic_reps = std::min(reps, 1000);
    mc.seed = cfg.seed;
    const auto rows = run_montecarlo(suite, mc);
    const std::string name = suite == McSuite::size ? "size" : "power";
    json table = json::array();
    std::ostringstream csv;
    csv << "test,process,level,reps,rejections,rate\n";
    for (const auto& r : rows) {
        table.push_back(report::to_json(r));
        csv << csv_field(r.test) << ',' << csv_field(r.process) << ',' << num(r.level) << ',' << r.reps << ','
            << r.rejections << ',' << num(r.rate()) << '\n';
    }
    json out{{"command", "montecarlo"}, {"suite", name}, {"seed", cfg.seed}, {"n", mc.n}, {"rows", table}};
    report::write_json(output_path(cfg, "montecarlo_" + name + ".json").string(), out);
    write_text(output_path(cfg, "montecarlo_" + name + ".csv"), csv.str());
    return out;
}

json cmd_unit_root(const RunConfig& cfg, const std::string& input, UnitRootTest test, TrendSpec spec, int lags) {
    const Series s = load_input(input);
    const UnitRootResult r = test == UnitRootTest::adf ? adf_test(s, lags, spec) : dfgls_test(s, lags, spec);
    json out = report::to_json(r);
    out["command"] = "unit-root";
    out["series"] = s.name();
    out["rejects_at_alpha"] = r.rejects(cfg.significance);
    report::write_json(output_path(cfg, "unit_root.json").string(), out);
    return out;
}

json cmd_cointegrate(const RunConfig& cfg, const std::string& y, const std::string& x, JohansenTrend trend,
                     int lags) {
    const Series pair[] = {load_input(y), load_input(x)};
    const EGResult eg = engle_granger(pair[0], pair[1]);
    const RankTestResult j = johansen_trace(pair, {trend, lags});
    json out{{"command", "cointegrate"}, {"engle_granger", report::to_json(eg)}, {"johansen", report::to_json(j)}};
    if (j.selected_rank == 1) {
        const Eigen::VectorXd v = normalized_cointegrating_vector(j);
        out["cointegrating_vector"] = std::vector<double>(v.data(), v.data() + v.size());
    }
    report::write_json(output_path(cfg, "cointegrate.json").string(), out);
    return out;
}

json cmd_var(const RunConfig& cfg, const std::vector<std::string>& endog, const std::vector<std::string>& exog,
             int lags, int lm_lags) {
    std::vector<Series> en;
    std::vector<Series> ex;
    for (const auto& p : endog) en.push_back(load_input(p));
    for (const auto& p : exog) ex.push_back(load_input(p));
    const VarModel m = var_fit(en, ex, lags);
    json out = report::to_json(m);
    out["command"] = "var";
    out["companion_moduli"] = companion_eigen(m);
    json lm = json::array();
    for (const auto& t : var_lm_autocorr(m, lm_lags)) {
        lm.push_back(report::to_json(t));
    }
    out["lm_autocorrelation"] = lm;
    json normality = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        normality.push_back(report::to_json(residual_normality(m, i)));
    }
    out["normality"] = normality;
    report::write_json(output_path(cfg, "var.json").string(), out);
    return out;
}

json cmd_vecm(const RunConfig& cfg, const std::string& y, const std::string& x, JohansenTrend trend, int lags) {
    const Series pair[] = {load_input(y), load_input(x)};
    json out = report::to_json(vecm_fit(pair, 1, lags, trend));
    out["command"] = "vecm";
    report::write_json(output_path(cfg, "vecm.json").string(), out);
    return out;
}

json cmd_granger(const RunConfig& cfg, const std::string& y, const std::string& x, int lags) {
    const Series pair[] = {load_input(y), load_input(x)};
    json tests = json::array();
    for (const auto& g : granger_causality(pair, lags)) {
        json entry = report::to_json(g);
        entry["rejects_at_alpha"] = g.wald.p_value < (cfg.significance == SignificanceLevel::pct1   ? 0.01
                                                      : cfg.significance == SignificanceLevel::pct5 ? 0.05
                                                                                                    : 0.10);
        tests.push_back(entry);
    }
    json out{{"command", "granger"}, {"lags", lags}, {"tests", tests}};
    report::write_json(output_path(cfg, "granger.json").string(), out);
    return out;
}

// ---------------------------------------------------------------------------
// Argument parsing

namespace {

std::vector<double> parse_amplitudes(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw RangeError("invalid amplitude '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw RangeError("invalid amplitude '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time-series econometrics of inflation and labor force"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    double alpha = 0.05;
    app.add_option("--data-dir", cfg.data_dir, "Directory holding the fixture files");
    app.add_option("--out", cfg.output_dir, "Directory for reports and plots");
    app.add_option("--lag", cfg.lag, "Labor-force lead in years")->check(CLI::NonNegativeNumber);
    app.add_option("--alpha", alpha, "Significance level: 0.01, 0.05 or 0.10")
        ->check(CLI::IsMember({0.01, 0.05, 0.1}));
    app.add_option("--seed", cfg.seed, "Seed for simulations");

    std::function<json()> action;

    auto* ingest = app.add_subcommand("ingest", "Validate and summarize fixtures");
    ingest->callback([&] { action = [&] { return cmd_ingest(cfg); }; });

    std::string table;
    auto* repro = app.add_subcommand("reproduce-table", "Recompute a published table");
    repro->add_option("id", table, "Table id")->required()->check(CLI::IsMember(table_ids()));
    repro->callback([&] { action = [&] { return cmd_reproduce_table(table, cfg); }; });

    int cal_first = 1965;
    int cal_last = 2002;
    std::vector<int> breakpoints{1983};
    auto* calibrate = app.add_subcommand("calibrate", "Cumulative-fit calibration");
    calibrate->add_option("--from", cal_first, "First year of the calibration window");
    calibrate->add_option("--to", cal_last, "Last year of the calibration window");
    calibrate->add_option("--breakpoints", breakpoints, "Years closing each RMSFE segment")->delimiter(',');
    calibrate->callback([&] { action = [&] { return cmd_calibrate(cfg, cal_first, cal_last, breakpoints); }; });

    std::string amplitudes = "0.005,0.01,0.02,0.03,0.05,0.075,0.1";
    auto* synthetic = app.add_subcommand("synthetic", "Spurious-regression experiment");
    synthetic->add_option("--amplitudes", amplitudes, "Comma-separated amplitudes (may be empty)");
    synthetic->callback([&] { action = [&] { return cmd_synthetic(cfg, parse_amplitudes(amplitudes)); }; });

    std::string suite = "size";
    int reps = 5000;
    auto* mc = app.add_subcommand("montecarlo", "Size and power simulations");
    mc->add_option("--suite", suite)->check(CLI::IsMember({"size", "power"}));
    mc->add_option("--reps", reps);
    mc->callback([&] {
        action = [&] { return cmd_montecarlo(cfg, suite == "size" ? McSuite::size : McSuite::power, reps); };
    });

    const std::map<std::string, TrendSpec> trend_specs = {
        {"none", TrendSpec::none}, {"constant", TrendSpec::constant}, {"trend", TrendSpec::trend}};
    const std::map<std::string, JohansenTrend> johansen_trends = {
        {"constant", JohansenTrend::constant}, {"rconstant", JohansenTrend::rconstant}, {"none", JohansenTrend::none}};

    std::string input;
    std::string test = "adf";
    std::string spec = "constant";
    int ur_lags = 0;
    auto* ur = app.add_subcommand("unit-root", "ADF or DF-GLS test on one series");
    ur->add_option("--input", input)->required();
    ur->add_option("--test", test)->check(CLI::IsMember({"adf", "dfgls"}));
    ur->add_option("--spec", spec)->check(CLI::IsMember({"none", "constant", "trend"}));
    ur->add_option("--lags", ur_lags);
    ur->callback([&] {
        action = [&] {
            return cmd_unit_root(cfg, input, test == "adf" ? UnitRootTest::adf : UnitRootTest::dfgls,
                                 trend_specs.at(spec), ur_lags);
        };
    });

    std::string y;
    std::string x;
    std::string jtrend = "constant";
    int sys_lags = 2;
    auto add_pair = [&](CLI::App* sub, bool with_trend) {
        sub->add_option("--y", y)->required();
        sub->add_option("--x", x)->required();
        sub->add_option("--lags", sys_lags);
        if (with_trend) {
            sub->add_option("--trend", jtrend)->check(CLI::IsMember({"constant", "rconstant", "none"}));
        }
    };
    auto* coint = app.add_subcommand("cointegrate", "Engle-Granger and Johansen tests");
    add_pair(coint, true);
    coint->callback([&] { action = [&] { return cmd_cointegrate(cfg, y, x, johansen_trends.at(jtrend), sys_lags); }; });
    auto* vecm = app.add_subcommand("vecm", "Rank-one VECM");
    add_pair(vecm, true);
    vecm->callback([&] { action = [&] { return cmd_vecm(cfg, y, x, johansen_trends.at(jtrend), sys_lags); }; });
    auto* granger = app.add_subcommand("granger", "Granger causality in a bivariate VAR");
    add_pair(granger, false);
    granger->callback([&] { action = [&] { return cmd_granger(cfg, y, x, sys_lags); }; });

    std::vector<std::string> endog;
    std::vector<std::string> exog;
    int lm_lags = 4;
    auto* var = app.add_subcommand("var", "VAR with optional exogenous regressors");
    var->add_option("--endog", endog)->required()->delimiter(',');
    var->add_option("--exog", exog)->delimiter(',');
    var->add_option("--lags", sys_lags);
    var->add_option("--lm-lags", lm_lags);
    var->callback([&] { action = [&] { return cmd_var(cfg, endog, exog, sys_lags, lm_lags); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return 2;
    }
    cfg.significance = alpha < 0.05 ? SignificanceLevel::pct1
                       : alpha < 0.1 ? SignificanceLevel::pct5
                                     : SignificanceLevel::pct10;
    try {
        const json result = action();
        out << result.dump(2) << '\n';
        return 0;
    } catch (const Error& e) {
        emit_error(err, e.kind(), e.what());
    } catch (const json::exception& e) {
        emit_error(err, "ParseError", e.what());
    } catch (const std::exception& e) {
        emit_error(err, "InternalError", e.what());
    }
    return 1;
}

}  // namespace tsecon::cli
