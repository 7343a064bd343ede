#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tsecon {

enum class McSuite { size, power };

struct McConfig {
    int reps = 5000;             // unit-root replications
    int diagnostic_reps = 1000;  // replications for the residual diagnostics (size suite)
    int n = 100;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct McRow {
    std::string test;
    std::string process;
    double level = 0.0;
    int reps = 0;
    int rejections = 0;
    [[nodiscard]] double rate() const { return reps ? static_cast<double>(rejections) / reps : 0.0; }
};

/// Rejection frequencies for the unit-root tests and residual diagnostics.
///
/// size: ADF and DF-GLS (constant, lag 0, 5%) on Gaussian random walks;
///   Breusch-Godfrey, ARCH-LM and the skewness/kurtosis test at 1% on the
///   residuals of a correctly specified regression with iid normal errors.
/// power: ADF and DF-GLS (constant, lag 0, 5%) on AR(1), phi = 0.5.
///
/// Replication i draws from its own generator seeded from (seed, i), so the
/// table does not depend on the thread count. Throws RangeError for fewer
/// than 100 replications or n < 20.
[[nodiscard]] std::vector<McRow> run_montecarlo(McSuite suite, const McConfig& cfg);

/// Seed for replication `index` of stream `stream`.
[[nodiscard]] std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace tsecon
