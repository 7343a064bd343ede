#pragma once

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tsecon/cointegration.hpp"
#include "tsecon/montecarlo.hpp"
#include "tsecon/series.hpp"
#include "tsecon/unit_root.hpp"

namespace tsecon::cli {

using nlohmann::json;

struct RunConfig {
    std::string data_dir = "data";
    std::string output_dir = "out";
    int lag = 2;
    SignificanceLevel significance = SignificanceLevel::pct5;
    std::uint64_t seed = 1;
};

/// Fixture files expected in the data directory.
struct Fixtures {
    explicit Fixtures(std::string dir) : dir_(std::move(dir)) {}

    [[nodiscard]] std::string path(const std::string& file) const;
    [[nodiscard]] bool has(const std::string& file) const;

    [[nodiscard]] Series measured() const;      // gdp_deflator.csv, inflation rate
    [[nodiscard]] Series labor_force() const;   // labor_force.csv, revisions redistributed if listed
    [[nodiscard]] Series raw_labor_force() const;
    [[nodiscard]] std::optional<Series> labor_force_halfyear() const;
    [[nodiscard]] std::optional<std::vector<int>> revision_years() const;
    [[nodiscard]] Series n15() const;
    [[nodiscard]] Series n14() const;
    [[nodiscard]] std::vector<int> census_years() const;
    [[nodiscard]] Series participation_rate() const;

private:
    [[nodiscard]] Series series(const std::string& file, const std::string& name) const;
    std::string dir_;
};

/// Pairs computed values with the published ones of a table.
class Comparison {
public:
    explicit Comparison(std::string table) : table_(std::move(table)) {}
    void add(const std::string& row, const std::string& column, std::optional<double> computed);
    [[nodiscard]] json to_json() const;
    void write_csv(std::ostream& out) const;

private:
    struct Cell {
        std::string row;
        std::string column;
        std::optional<double> computed;
        std::optional<double> published;
    };
    [[nodiscard]] std::vector<Cell> cells() const;
    std::string table_;
    std::vector<Cell> computed_;
};

/// Table identifiers accepted by `reproduce-table`.
[[nodiscard]] const std::vector<std::string>& table_ids();

[[nodiscard]] json cmd_ingest(const RunConfig& cfg);
[[nodiscard]] json cmd_reproduce_table(const std::string& id, const RunConfig& cfg);
[[nodiscard]] json cmd_calibrate(const RunConfig& cfg, int first_year, int last_year, std::vector<int> breakpoints);
[[nodiscard]] json cmd_synthetic(const RunConfig& cfg, const std::vector<double>& amplitudes);
[[nodiscard]] json cmd_montecarlo(const RunConfig& cfg, McSuite suite, int reps);
[[nodiscard]] json cmd_unit_root(const RunConfig& cfg, const std::string& input, UnitRootTest test, TrendSpec spec,
                                 int lags);
[[nodiscard]] json cmd_cointegrate(const RunConfig& cfg, const std::string& y, const std::string& x,
                                   JohansenTrend trend, int lags);
[[nodiscard]] json cmd_var(const RunConfig& cfg, const std::vector<std::string>& endog,
                           const std::vector<std::string>& exog, int lags, int lm_lags);
[[nodiscard]] json cmd_vecm(const RunConfig& cfg, const std::string& y, const std::string& x, JohansenTrend trend,
                            int lags);
[[nodiscard]] json cmd_granger(const RunConfig& cfg, const std::string& y, const std::string& x, int lags);

/// Parses arguments and dispatches. Errors are written to `err` as a single
/// JSON object; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsecon::cli
