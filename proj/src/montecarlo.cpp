#include "tsecon/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "tsecon/error.hpp"
#include "tsecon/ols.hpp"
#include "tsecon/unit_root.hpp"

namespace tsecon {

std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    // splitmix64 over a combined key
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream * 0x100000001b3ULL + index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

using Trial = std::function<bool(std::mt19937_64&)>;

int count_rejections(int reps, const McConfig& cfg, std::uint64_t stream, const Trial& trial) {
    std::vector<char> rejected(static_cast<std::size_t>(reps), 0);
    unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(reps));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < reps; i = next++) {
            try {
                std::mt19937_64 rng(replication_seed(cfg.seed, stream, static_cast<std::uint64_t>(i)));
                rejected[static_cast<std::size_t>(i)] = trial(rng) ? 1 : 0;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = reps;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return static_cast<int>(std::count(rejected.begin(), rejected.end(), 1));
}

std::vector<double> ar1(std::mt19937_64& rng, int n, double phi) {
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> y(static_cast<std::size_t>(n));
    double prev = 0.0;
    for (auto& v : y) {
        prev = phi * prev + z(rng);
        v = prev;
    }
    return y;
}

RegressionFit conforming_regression(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = z(rng);
        y[static_cast<std::size_t>(i)] = 1.0 + 0.5 * x[static_cast<std::size_t>(i)] + z(rng);
    }
    const Series regressors[] = {Series("x", 1, std::move(x))};
    return ols_fit(Series("y", 1, std::move(y)), regressors, true);
}

}  // namespace

std::vector<McRow> run_montecarlo(McSuite suite, const McConfig& cfg) {
    if (cfg.reps < 100 || (suite == McSuite::size && cfg.diagnostic_reps < 100)) {
        throw RangeError("Monte Carlo needs at least 100 replications");
    }
    if (cfg.n < 20) {
        throw RangeError("Monte Carlo series need n >= 20");
    }
    const int n = cfg.n;
    const double phi = suite == McSuite::size ? 1.0 : 0.5;
    const std::string process = suite == McSuite::size ? "random walk" : "AR(1) phi=0.5";

    std::vector<McRow> rows;
    auto add = [&](std::string test, std::string proc, double level, int reps, std::uint64_t stream,
                   const Trial& trial) {
        rows.push_back({std::move(test), std::move(proc), level, reps, count_rejections(reps, cfg, stream, trial)});
    };

    add("ADF", process, 0.05, cfg.reps, 1, [&](std::mt19937_64& rng) {
        return adf_test(ar1(rng, n, phi), 0, TrendSpec::constant).rejects(SignificanceLevel::pct5);
    });
    add("DF-GLS", process, 0.05, cfg.reps, 2, [&](std::mt19937_64& rng) {
        return dfgls_test(ar1(rng, n, phi), 0, TrendSpec::constant).rejects(SignificanceLevel::pct5);
    });
    if (suite == McSuite::size) {
        const std::string reg = "iid normal regression";
        add("Breusch-Godfrey", reg, 0.01, cfg.diagnostic_reps, 3, [&](std::mt19937_64& rng) {
            return breusch_godfrey(conforming_regression(rng, n), 1).p_value < 0.01;
        });
        add("ARCH-LM", reg, 0.01, cfg.diagnostic_reps, 4, [&](std::mt19937_64& rng) {
            return arch_lm(conforming_regression(rng, n), 1).p_value < 0.01;
        });
        add("skewness-kurtosis", reg, 0.01, cfg.diagnostic_reps, 5, [&](std::mt19937_64& rng) {
            return skew_kurt_test(conforming_regression(rng, n).residuals).joint.p_value < 0.01;
        });
    }
    return rows;
}

}  // namespace tsecon
