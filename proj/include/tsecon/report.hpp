#pragma once

#include <json.hpp>
#include <string>

#include "tsecon/cointegration.hpp"
#include "tsecon/demographics.hpp"
#include "tsecon/inflation.hpp"
#include "tsecon/montecarlo.hpp"
#include "tsecon/ols.hpp"
#include "tsecon/series.hpp"
#include "tsecon/unit_root.hpp"
#include "tsecon/var.hpp"

namespace tsecon::report {

using nlohmann::json;

[[nodiscard]] json to_json(const Series& s);
[[nodiscard]] json to_json(const SummaryStats& s);
[[nodiscard]] json to_json(const TestResult& t);
[[nodiscard]] json to_json(const SkewKurtResult& r);
[[nodiscard]] json to_json(const RegressionFit& fit);
[[nodiscard]] json to_json(const UnitRootResult& r);
[[nodiscard]] json to_json(const DifferenceTestResult& r);
[[nodiscard]] json to_json(const EGResult& r);
[[nodiscard]] json to_json(const RankTestResult& r);
[[nodiscard]] json to_json(const VarModel& m);
[[nodiscard]] json to_json(const GrangerResult& g);
[[nodiscard]] json to_json(const VecmModel& m);
[[nodiscard]] json to_json(const Calibration& c);
[[nodiscard]] json to_json(const SubperiodReport& r);
[[nodiscard]] json to_json(const SpuriousRow& r);
[[nodiscard]] json to_json(const SpuriousReport& r);
[[nodiscard]] json to_json(const McRow& r);

/// Relative deviation (computed - published) / |published|; null when the
/// published value is zero.
[[nodiscard]] json relative_deviation(double computed, double published);

/// Writes `value` with a trailing newline; throws RangeError if the file
/// cannot be opened.
void write_json(const std::string& path, const json& value);

}  // namespace tsecon::report
