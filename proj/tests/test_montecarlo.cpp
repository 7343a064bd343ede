#include <doctest.h>

#include <set>

#include "tsecon/error.hpp"
#include "tsecon/montecarlo.hpp"

using namespace tsecon;

TEST_SUITE("montecarlo") {

TEST_CASE("tables are deterministic and independent of the thread count") {
    McConfig one;
    one.reps = 300;
    one.diagnostic_reps = 200;
    one.seed = 42;
    one.threads = 1;
    McConfig many = one;
    many.threads = 7;
    const auto a = run_montecarlo(McSuite::size, one);
    const auto b = run_montecarlo(McSuite::size, many);
    const auto c = run_montecarlo(McSuite::size, one);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].test == b[i].test);
        CHECK(a[i].rejections == b[i].rejections);
        CHECK(a[i].rejections == c[i].rejections);
    }
    McConfig other = one;
    other.seed = 43;
    const auto d = run_montecarlo(McSuite::size, other);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].rejections != d[i].rejections;
    CHECK(differs);
}

TEST_CASE("suite layout") {
    McConfig cfg;
    cfg.reps = 100;
    cfg.diagnostic_reps = 100;
    const auto size = run_montecarlo(McSuite::size, cfg);
    std::set<std::string> tests;
    for (const auto& r : size) {
        tests.insert(r.test);
        CHECK(r.rate() >= 0.0);
        CHECK(r.rate() <= 1.0);
    }
    CHECK(tests.size() == 5);
    const auto power = run_montecarlo(McSuite::power, cfg);
    CHECK(power.size() == 2);
    for (const auto& r : power) CHECK(r.level == 0.05);
}

TEST_CASE("replication seeds differ across streams and indices") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t stream = 0; stream < 5; ++stream)
        for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(replication_seed(1, stream, i));
    CHECK(seen.size() == 5000);
    CHECK(replication_seed(9, 2, 3) == replication_seed(9, 2, 3));
}

TEST_CASE("invalid configurations") {
    McConfig cfg;
    cfg.reps = 10;
    CHECK_THROWS_AS((void)run_montecarlo(McSuite::size, cfg), RangeError);
    cfg.reps = 100;
    cfg.n = 10;
    CHECK_THROWS_AS((void)run_montecarlo(McSuite::power, cfg), RangeError);
}

}
