#include "tsecon/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsecon/error.hpp"
#include "tsecon/var.hpp"

namespace tsecon {

Series predict_inflation(const Series& labor_force, const ModelCoefficients& c) {
    if (c.lag < 0) {
        throw RangeError("model lag must be non-negative");
    }
    if (labor_force.size() < static_cast<std::size_t>(c.lag) + 2) {
        throw LengthError("labor force series too short for lag " + std::to_string(c.lag));
    }
    const Series g = growth_rate(labor_force);
    return shift(scale(g, c.a1, c.a2), c.lag).renamed("predicted");
}

Calibration calibrate_cumulative(const Series& measured, const Series& labor_force, int lag) {
    if (lag < 0) {
        throw RangeError("model lag must be non-negative");
    }
    const Series g = shift(growth_rate(labor_force), lag);
    const Series pair[] = {measured, g};
    const auto [first, last] = common_range(pair);
    const int n = last - first + 1;
    if (n < 3) {
        throw LengthError("calibration needs at least 3 overlapping years");
    }

    double cm = 0.0;
    double cg = 0.0;
    std::vector<double> m_cum(static_cast<std::size_t>(n));
    std::vector<double> g_cum(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cm += measured.at_year(first + i);
        cg += g.at_year(first + i);
        m_cum[static_cast<std::size_t>(i)] = cm;
        g_cum[static_cast<std::size_t>(i)] = cg;
    }
    // Remove the chord k/N * C(N) so the terminal constraint holds for any a1.
    double num = 0.0;
    double den = 0.0;
    double g_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = static_cast<double>(i + 1) / n;
        const double u = m_cum[static_cast<std::size_t>(i)] - w * cm;
        const double v = g_cum[static_cast<std::size_t>(i)] - w * cg;
        num += u * v;
        den += v * v;
        g_scale += g_cum[static_cast<std::size_t>(i)] * g_cum[static_cast<std::size_t>(i)];
    }
    if (den <= 1e-24 * std::max(g_scale, 1e-300)) {
        throw CollinearError("labor-force growth rate is constant over the calibration window");
    }
    const double a1 = num / den;
    const double a2 = (cm - a1 * cg) / n;

    double predicted_sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        predicted_sum += a1 * g.at_year(first + i) + a2;
        abs_sum += std::abs(measured.at_year(first + i));
    }
    const double mismatch = std::abs(cm - predicted_sum) / std::max(abs_sum, 1e-300);
    return {{a1, a2, lag}, first, last, mismatch};
}

PredictorSet build_predictor_set(const Series& labor_force, const std::optional<Series>& labor_force_halfyear,
                                 const ModelCoefficients& c) {
    const Series predicted = predict_inflation(labor_force, c).renamed("predicted");
    std::optional<Series> shifted;
    std::optional<Series> shifted2;
    if (labor_force_halfyear) {
        shifted = predict_inflation(*labor_force_halfyear, c).renamed("shifted");
        shifted2 = shift(*shifted, -c.lag).renamed("shifted2");
    }
    return {
        predicted,
        shift(predicted, -c.lag).renamed("predicted2"),
        shifted,
        shifted2,
        moving_average(predicted, 2).renamed("MA(2)"),
        moving_average(predicted, 3).renamed("MA(3)"),
    };
}

Series redistribute_revisions(const Series& labor_force, std::span<const int> revision_years) {
    std::vector<double> v(labor_force.values().begin(), labor_force.values().end());
    const int start = labor_force.start_year();
    int previous = start;
    for (int r : revision_years) {
        if (r <= previous || !labor_force.contains(r)) {
            throw RangeError("revision year " + std::to_string(r) +
                             " must lie inside the series, after the previous revision");
        }
        const int m = r - previous;
        if (m >= 2) {
            const auto at = [&](int year) { return labor_force.at_year(year); };
            const double jump = at(r) - at(r - 1);
            const double trend = (at(r - 1) - at(previous)) / (m - 1);
            const double excess = jump - trend;
            for (int t = previous + 1; t < r; ++t) {
                v[static_cast<std::size_t>(t - start)] += excess * (t - previous) / m;
            }
        }
        previous = r;
    }
    return Series(labor_force.name(), start, std::move(v));
}

SubperiodReport evaluate_subperiods(const Series& measured, const Series& predicted,
                                    std::span<const int> breakpoints) {
    const Series pair[] = {measured, predicted};
    const auto [first, last] = common_range(pair);
    SubperiodReport out;
    int seg_start = first;
    auto close = [&](int seg_end) {
        if (seg_end < seg_start) {
            throw LengthError("empty segment ending at " + std::to_string(seg_end));
        }
        out.segments.push_back({seg_start, seg_end,
                                rmsfe(predicted.slice(seg_start, seg_end), measured.slice(seg_start, seg_end))});
        seg_start = seg_end + 1;
    };
    for (int b : breakpoints) {
        if (b < first || b > last) {
            throw RangeError("breakpoint " + std::to_string(b) + " outside the overlap");
        }
        if (b < seg_start - 1) {
            throw RangeError("breakpoints must be increasing");
        }
        close(b);
    }
    close(last);
    out.full = {first, last, rmsfe(predicted.slice(first, last), measured.slice(first, last))};
    return out;
}

}  // namespace tsecon
