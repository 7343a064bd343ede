#include "tsecon/unit_root.hpp"

#include <Eigen/Dense>
#include <array>
#include <cfloat>
#include <cmath>
#include <string>

#include "tsecon/error.hpp"
#include "tsecon/linalg.hpp"

namespace tsecon {

std::string_view to_string(TrendSpec spec) {
    switch (spec) {
        case TrendSpec::none: return "none";
        case TrendSpec::constant: return "constant";
        case TrendSpec::trend: return "trend";
    }
    return "?";
}

std::string_view to_string(UnitRootTest test) {
    return test == UnitRootTest::adf ? "ADF" : "DF-GLS";
}

std::string_view to_string(SignificanceLevel level) {
    switch (level) {
        case SignificanceLevel::pct1: return "1%";
        case SignificanceLevel::pct5: return "5%";
        case SignificanceLevel::pct10: return "10%";
    }
    return "?";
}

double CriticalValues::at(SignificanceLevel level) const {
    switch (level) {
        case SignificanceLevel::pct1: return pct1;
        case SignificanceLevel::pct5: return pct5;
        case SignificanceLevel::pct10: return pct10;
    }
    return pct5;
}

namespace {

struct TableRow {
    double n;  // 0 marks the asymptotic row
    CriticalValues cv;
};

// Fuller (1976), Table 8.5.2: tau, tau_mu and tau_tau.
constexpr std::array<TableRow, 6> kFullerNone{{
    {25, {-2.66, -1.95, -1.60}},
    {50, {-2.62, -1.95, -1.61}},
    {100, {-2.60, -1.95, -1.61}},
    {250, {-2.58, -1.95, -1.62}},
    {500, {-2.58, -1.95, -1.62}},
    {0, {-2.58, -1.95, -1.62}},
}};
constexpr std::array<TableRow, 6> kFullerConstant{{
    {25, {-3.75, -3.00, -2.63}},
    {50, {-3.58, -2.93, -2.60}},
    {100, {-3.51, -2.89, -2.58}},
    {250, {-3.46, -2.88, -2.57}},
    {500, {-3.44, -2.87, -2.57}},
    {0, {-3.43, -2.86, -2.57}},
}};
constexpr std::array<TableRow, 6> kFullerTrend{{
    {25, {-4.38, -3.60, -3.24}},
    {50, {-4.15, -3.50, -3.18}},
    {100, {-4.04, -3.45, -3.15}},
    {250, {-3.99, -3.43, -3.13}},
    {500, {-3.98, -3.42, -3.13}},
    {0, {-3.96, -3.41, -3.12}},
}};
// Elliott, Rothenberg and Stock (1996), Table 1, DF-GLS with linear trend.
constexpr std::array<TableRow, 4> kErsTrend{{
    {50, {-3.77, -3.19, -2.89}},
    {100, {-3.58, -3.03, -2.74}},
    {200, {-3.46, -2.93, -2.64}},
    {0, {-3.48, -2.89, -2.57}},
}};

CriticalValues lerp(const CriticalValues& a, const CriticalValues& b, double w) {
    return {a.pct1 + w * (b.pct1 - a.pct1), a.pct5 + w * (b.pct5 - a.pct5),
            a.pct10 + w * (b.pct10 - a.pct10)};
}

template <std::size_t N>
CriticalValues interpolate(const std::array<TableRow, N>& table, double n) {
    if (n <= table.front().n) {
        return table.front().cv;
    }
    for (std::size_t i = 1; i + 1 < N; ++i) {
        if (n <= table[i].n) {
            const double w = (n - table[i - 1].n) / (table[i].n - table[i - 1].n);
            return lerp(table[i - 1].cv, table[i].cv, w);
        }
    }
    // Beyond the last finite row: interpolate in 1/n towards the limit.
    const auto& last = table[N - 2];
    return lerp(table[N - 1].cv, last.cv, last.n / n);
}

Eigen::VectorXd differences(const Eigen::VectorXd& s) {
    return s.tail(s.size() - 1) - s.head(s.size() - 1);
}

// t-ratio on the lagged level in the (A)DF regression; `spec` controls the
// deterministic columns.
double df_t_ratio(const Eigen::VectorXd& s, int lags, TrendSpec spec, std::size_t& n_eff) {
    const Eigen::Index n = s.size();
    const Eigen::VectorXd ds = differences(s);
    const Eigen::Index rows = n - lags - 1;
    const Eigen::Index det = spec == TrendSpec::none ? 0 : (spec == TrendSpec::constant ? 1 : 2);
    const Eigen::Index k = 1 + lags + det;
    if (rows <= k) {
        throw DofError("unit-root regression has " + std::to_string(rows) + " observations for " +
                       std::to_string(k) + " regressors");
    }
    Eigen::MatrixXd x(rows, k);
    // Row r corresponds to ds at index lags + r (i.e. s_t with t = lags + r + 1).
    x.col(0) = s.segment(lags, rows);
    for (int i = 1; i <= lags; ++i) {
        x.col(i) = ds.segment(lags - i, rows);
    }
    if (det >= 1) {
        x.col(1 + lags).setOnes();
    }
    if (det == 2) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            x(r, 2 + lags) = static_cast<double>(lags + r + 2);
        }
    }
    const Eigen::VectorXd y = ds.segment(lags, rows);
    linalg::LeastSquares ls;
    try {
        ls = linalg::least_squares(x, y);
    } catch (const CollinearError& e) {
        throw DegenerateInput(std::string("deterministic input: ") + e.what());
    }
    if (ls.ssr <= 1e-24 * std::max(y.squaredNorm(), DBL_MIN)) {
        throw DegenerateInput("test regression has zero residual variance");
    }
    n_eff = static_cast<std::size_t>(rows);
    return ls.coef(0) / ls.se(0);
}

Eigen::VectorXd as_vector(std::span<const double> s) {
    return Eigen::Map<const Eigen::VectorXd>(s.data(), static_cast<Eigen::Index>(s.size()));
}

}  // namespace

CriticalValues critical_values(UnitRootTest test, TrendSpec spec, std::size_t n) {
    if (n < 20) {
        throw RangeError("critical values are tabulated for n >= 20 (got " + std::to_string(n) + ")");
    }
    const double nn = static_cast<double>(n);
    if (test == UnitRootTest::adf) {
        switch (spec) {
            case TrendSpec::none: return interpolate(kFullerNone, nn);
            case TrendSpec::constant: return interpolate(kFullerConstant, nn);
            case TrendSpec::trend: return interpolate(kFullerTrend, nn);
        }
    }
    switch (spec) {
        case TrendSpec::none: break;
        case TrendSpec::constant: return interpolate(kFullerNone, nn);
        case TrendSpec::trend: return interpolate(kErsTrend, nn);
    }
    throw RangeError("DF-GLS requires a constant or trend specification");
}

double critical_value(UnitRootTest test, TrendSpec spec, std::size_t n, SignificanceLevel level) {
    return critical_values(test, spec, n).at(level);
}

UnitRootResult adf_test(std::span<const double> s, int lags, TrendSpec spec) {
    if (lags < 0) {
        throw RangeError("lag order must be non-negative");
    }
    UnitRootResult out;
    out.test = UnitRootTest::adf;
    out.lags = lags;
    out.spec = spec;
    out.statistic = df_t_ratio(as_vector(s), lags, spec, out.n_effective);
    out.critical_values = critical_values(UnitRootTest::adf, spec, std::max<std::size_t>(out.n_effective, 20));
    return out;
}

UnitRootResult adf_test(const Series& s, int lags, TrendSpec spec) { return adf_test(s.values(), lags, spec); }

std::vector<double> gls_detrend(std::span<const double> s, TrendSpec spec) {
    if (spec == TrendSpec::none) {
        throw RangeError("DF-GLS requires a constant or trend specification");
    }
    const auto n = static_cast<Eigen::Index>(s.size());
    if (n < 3) {
        throw DofError("GLS detrending needs at least 3 observations");
    }
    const double cbar = spec == TrendSpec::constant ? -7.0 : -13.5;
    const double alpha = 1.0 + cbar / static_cast<double>(n);
    const Eigen::Index kz = spec == TrendSpec::constant ? 1 : 2;

    const Eigen::VectorXd y = as_vector(s);
    Eigen::MatrixXd z(n, kz);
    z.col(0).setOnes();
    if (kz == 2) {
        z.col(1) = Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n));
    }
    Eigen::VectorXd yq(n);
    Eigen::MatrixXd zq(n, kz);
    yq(0) = y(0);
    zq.row(0) = z.row(0);
    yq.tail(n - 1) = y.tail(n - 1) - alpha * y.head(n - 1);
    zq.bottomRows(n - 1) = z.bottomRows(n - 1) - alpha * z.topRows(n - 1);

    const auto ls = linalg::least_squares(zq, yq);
    const Eigen::VectorXd yd = y - z * ls.coef;
    return {yd.data(), yd.data() + yd.size()};
}

UnitRootResult dfgls_test(std::span<const double> s, int lags, TrendSpec spec) {
    if (lags < 0) {
        throw RangeError("lag order must be non-negative");
    }
    if (spec == TrendSpec::none) {
        throw RangeError("DF-GLS requires a constant or trend specification");
    }
    const auto detrended = gls_detrend(s, spec);
    const Eigen::VectorXd yd = as_vector(detrended);
    const Eigen::VectorXd y = as_vector(s);
    const double scale = std::max(y.squaredNorm(), DBL_MIN);
    if (yd.squaredNorm() <= 1e-24 * scale) {
        throw DegenerateInput("GLS-detrended series is identically zero");
    }
    UnitRootResult out;
    out.test = UnitRootTest::dfgls;
    out.lags = lags;
    out.spec = spec;
    out.statistic = df_t_ratio(yd, lags, TrendSpec::none, out.n_effective);
    out.critical_values = critical_values(UnitRootTest::dfgls, spec, std::max<std::size_t>(out.n_effective, 20));
    return out;
}

UnitRootResult dfgls_test(const Series& s, int lags, TrendSpec spec) { return dfgls_test(s.values(), lags, spec); }

}  // namespace tsecon
