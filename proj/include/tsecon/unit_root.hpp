#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon {

/// Deterministic terms in a unit-root regression; `trend` implies a constant.
enum class TrendSpec { none, constant, trend };

enum class UnitRootTest { adf, dfgls };

enum class SignificanceLevel { pct1, pct5, pct10 };

[[nodiscard]] std::string_view to_string(TrendSpec spec);
[[nodiscard]] std::string_view to_string(UnitRootTest test);
[[nodiscard]] std::string_view to_string(SignificanceLevel level);

struct CriticalValues {
    double pct1;
    double pct5;
    double pct10;

    [[nodiscard]] double at(SignificanceLevel level) const;
};

struct UnitRootResult {
    UnitRootTest test = UnitRootTest::adf;
    double statistic = 0.0;
    int lags = 0;
    TrendSpec spec = TrendSpec::constant;
    CriticalValues critical_values{};
    std::size_t n_effective = 0;  // n - lags - 1

    /// True when the unit-root null is rejected at `level`.
    [[nodiscard]] bool rejects(SignificanceLevel level) const {
        return statistic < critical_values.at(level);
    }
};

/// Augmented Dickey-Fuller t-test on the lagged level in
///   ds_t = rho s_{t-1} + sum_i gamma_i ds_{t-i} + deterministics + e_t.
/// The trend regressor is the 1-based observation index.
/// Throws DofError, DegenerateInput.
[[nodiscard]] UnitRootResult adf_test(std::span<const double> s, int lags, TrendSpec spec);
[[nodiscard]] UnitRootResult adf_test(const Series& s, int lags, TrendSpec spec);

/// Elliott-Rothenberg-Stock DF-GLS test: GLS demeaning (cbar = -7) or
/// detrending (cbar = -13.5) with alpha = 1 + cbar / n, followed by a DF
/// regression without deterministic terms. `spec` must be constant or trend.
[[nodiscard]] UnitRootResult dfgls_test(std::span<const double> s, int lags, TrendSpec spec);
[[nodiscard]] UnitRootResult dfgls_test(const Series& s, int lags, TrendSpec spec);

/// GLS-detrended series used by `dfgls_test`.
[[nodiscard]] std::vector<double> gls_detrend(std::span<const double> s, TrendSpec spec);

/// Small-sample critical values for `n` observations in the test regression.
///
/// ADF: Fuller's tables, linearly interpolated in n (n >= 500 interpolated in
/// 1/n towards the asymptotic row). DF-GLS with trend: the ERS simulation
/// table (values for n < 50 use the n = 50 row). DF-GLS with constant: the
/// no-deterministics Dickey-Fuller table. Throws RangeError for n < 20 or a
/// DF-GLS request with `none`.
[[nodiscard]] CriticalValues critical_values(UnitRootTest test, TrendSpec spec, std::size_t n);
[[nodiscard]] double critical_value(UnitRootTest test, TrendSpec spec, std::size_t n,
                                    SignificanceLevel level);

}  // namespace tsecon
