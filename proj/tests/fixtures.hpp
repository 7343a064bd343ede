#pragma once

// Writes a complete, US-shaped synthetic fixture directory: labor force with
// decennial level revisions, inflation built from a planted linear link,
// cohort counts with census controls and a trending participation rate.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tsecon/inflation.hpp"
#include "tsecon/series.hpp"

namespace fixture {

struct Options {
    std::uint64_t seed = 7;
    double a1 = 4.0;
    double a2 = -0.03075;
    double noise_sd = 0.005;   // added to inflation
    bool halfyear = true;
    bool revisions = true;
    bool flat_labor_force = false;  // constant growth rate: calibration is collinear
};

inline void write_series(const std::filesystem::path& file, const tsecon::Series& s) {
    std::ofstream out(file);
    tsecon::write_csv(out, s);
}

inline void write_years(const std::filesystem::path& file, const std::vector<int>& years) {
    std::ofstream out(file);
    for (int y : years) out << y << '\n';
}

inline tsecon::Series labor_force(oracle::Gen& g, const Options& o) {
    std::vector<double> v{66000.0};
    double drift = 0.0;
    for (int year = 1956; year <= 2004; ++year) {
        drift = 0.8 * drift + (o.flat_labor_force ? 0.0 : g.normal(0.004));
        v.push_back(v.back() * (1.0 + 0.018 + drift));
    }
    return tsecon::Series("labor_force", 1955, std::move(v));
}

/// Creates `dir` (replacing its content) and returns the planted labor force.
inline tsecon::Series write(const std::filesystem::path& dir, const Options& o = {}) {
    namespace fs = std::filesystem;
    fs::remove_all(dir);
    fs::create_directories(dir);
    oracle::Gen g(o.seed);

    const tsecon::Series lf = labor_force(g, o);
    const tsecon::Series predicted = tsecon::predict_inflation(lf, {o.a1, o.a2, 2});
    std::vector<double> pi;
    for (int year = 1960; year <= 2004; ++year) pi.push_back(predicted.at_year(year) + g.normal(o.noise_sd));
    write_series(dir / "gdp_deflator.csv", tsecon::Series("measured", 1960, pi));

    std::vector<double> raw(lf.values().begin(), lf.values().end());
    if (o.revisions) {
        for (int r : {1972, 1980, 1990, 2000}) {
            const double step = 0.01 * raw[static_cast<std::size_t>(r - 1955)];
            for (int year = r; year <= 2004; ++year) raw[static_cast<std::size_t>(year - 1955)] += step;
        }
        write_years(dir / "revision_years.txt", {1972, 1980, 1990, 2000});
    }
    write_series(dir / "labor_force.csv", tsecon::Series("labor_force", 1955, raw));
    if (o.halfyear) {
        std::vector<double> half;
        for (std::size_t i = 0; i + 1 < raw.size(); ++i) half.push_back(0.5 * (raw[i] + raw[i + 1]));
        half.push_back(raw.back() * 1.009);
        write_series(dir / "labor_force_halfyear.csv", tsecon::Series("labor_force_halfyear", 1955, half));
    }

    std::vector<double> n14{3.4e6};
    for (int year = 1961; year <= 2004; ++year) n14.push_back(n14.back() * (1.0 + 0.012 + g.normal(0.015)));
    std::vector<double> n15{3.35e6};
    for (std::size_t t = 1; t < n14.size(); ++t) n15.push_back(n14[t - 1] * 0.998 + g.normal(2200.0));
    for (int c : {1970, 1980, 1990, 2000}) {
        for (int year = c; year <= 2004; ++year) {
            n14[static_cast<std::size_t>(year - 1960)] *= 1.015;
            n15[static_cast<std::size_t>(year - 1960)] *= 1.015;
        }
    }
    write_series(dir / "n14.csv", tsecon::Series("N14", 1960, n14));
    write_series(dir / "n15.csv", tsecon::Series("N15", 1960, n15));
    write_years(dir / "census_years.txt", {1970, 1980, 1990, 2000});

    std::vector<double> rate;
    for (int year = 1960; year <= 2004; ++year) rate.push_back(0.59 + 0.0035 * (year - 1960) + g.normal(0.002));
    write_series(dir / "participation_rate.csv", tsecon::Series("participation_rate", 1960, rate));
    return lf;
}

}  // namespace fixture
