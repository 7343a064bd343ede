#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tsecon/error.hpp"
#include "tsecon/series.hpp"

using namespace tsecon;

namespace {

Series make(std::vector<double> v, int start = 2000) { return Series("s", start, std::move(v)); }

void check_values(const Series& s, const std::vector<double>& expected, double tol = 1e-12) {
    REQUIRE(s.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(s[i] == doctest::Approx(expected[i]).epsilon(tol));
    }
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("construction rejects empty and non-finite input") {
    CHECK_THROWS_AS(Series("x", 1960, {}), EmptyInput);
    CHECK_THROWS_AS(Series("x", 1960, {1.0, NAN}), RangeError);
    CHECK_THROWS_AS(Series("x", 1960, {INFINITY}), RangeError);
    const Series s("x", 1960, {1.0, 2.0});
    CHECK(s.end_year() == 1961);
    CHECK(s.at_year(1961) == 2.0);
    CHECK_THROWS_AS((void)s.at_year(1962), RangeError);
}

TEST_CASE("load_csv parses consecutive years") {
    std::istringstream in("year,value\n1960,0.014\n1961,0.011");
    const Series s = load_csv(in, "m");
    CHECK(s.start_year() == 1960);
    check_values(s, {0.014, 0.011});
}

TEST_CASE("load_csv reports the missing year") {
    std::istringstream in("year,value\n1960,0.01\n1962,0.02");
    try {
        (void)load_csv(in, "m");
        FAIL("expected GapError");
    } catch (const GapError& e) {
        CHECK(e.year() == 1961);
    }
}

TEST_CASE("load_csv rejects empty bodies, bad headers and bad values") {
    std::istringstream empty("year,value\n");
    CHECK_THROWS_AS((void)load_csv(empty, "m"), EmptyInput);
    std::istringstream header("yr,val\n1960,1\n");
    CHECK_THROWS_AS((void)load_csv(header, "m"), ParseError);
    std::istringstream value("year,value\n1960,abc\n");
    try {
        (void)load_csv(value, "m");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream nan("year,value\n1960,nan\n");
    CHECK_THROWS_AS((void)load_csv(nan, "m"), ParseError);
}

TEST_CASE("write_csv round-trips exactly") {
    const Series s("x", 1990, {0.1, -1.0 / 3.0, 1e-300, 12345.678});
    std::stringstream buf;
    write_csv(buf, s);
    const Series back = load_csv(buf, "x");
    CHECK(back == s);
}

TEST_CASE("diff") {
    check_values(diff(make({5, 5, 5})), {0, 0});
    const Series d2 = diff(make({1, 2, 4, 8}), 2);
    check_values(d2, {1, 2});
    CHECK(d2.start_year() == 2002);
    CHECK_THROWS_AS((void)diff(make({1, 2}), 2), LengthError);
    CHECK_THROWS_AS((void)diff(make({1, 2}), 0), RangeError);
}

TEST_CASE("growth_rate") {
    check_values(growth_rate(make({100, 102})), {0.02});
    check_values(growth_rate(make({100, 100, 100})), {0, 0});
    try {
        (void)growth_rate(make({100, 0, 50}, 1990));
        FAIL("expected DivideByZero");
    } catch (const DivideByZero& e) {
        CHECK(e.year() == 1991);
    }
    CHECK_THROWS_AS((void)growth_rate(make({1})), LengthError);
}

TEST_CASE("moving_average is trailing") {
    const Series m = moving_average(make({1, 3, 5}), 2);
    check_values(m, {2, 4});
    CHECK(m.start_year() == 2001);
    check_values(moving_average(make({7, 7, 7, 7}), 3), {7, 7});
    CHECK(moving_average(make({1, 2, 3}), 1) == make({1, 2, 3}));
    CHECK_THROWS_AS((void)moving_average(make({1, 2}), 3), LengthError);
}

TEST_CASE("shift relabels years") {
    const Series s = make({1, 2}, 1958);
    CHECK(shift(s, 2).start_year() == 1960);
    CHECK(shift(s, 0) == s);
    CHECK(shift(shift(s, 3), -3) == s);
}

TEST_CASE("summary") {
    const auto a = summary(make({1, 1, 1}));
    CHECK(a.mean == 1.0);
    CHECK(a.stdev == 0.0);
    const auto b = summary(make({-1, 1}));
    CHECK(b.mean == 0.0);
    CHECK(b.stdev == doctest::Approx(std::sqrt(2.0)));
    CHECK(b.min == -1.0);
    CHECK(b.max == 1.0);
    CHECK_THROWS_AS((void)summary(make({1})), LengthError);
}

TEST_CASE("alignment intersects year ranges") {
    const Series a("a", 1960, std::vector<double>(10, 1.0));
    const Series b("b", 1965, std::vector<double>(10, 2.0));
    const Series ab[] = {a, b};
    const auto [first, last] = common_range(ab);
    CHECK(first == 1965);
    CHECK(last == 1969);
    const Series diffs = subtract(a, b);
    CHECK(diffs.start_year() == 1965);
    CHECK(diffs.size() == 5);
    const Series c("c", 1990, {1.0});
    const Series ac[] = {a, c};
    CHECK_THROWS_AS((void)common_range(ac), AlignmentError);
}

TEST_CASE("property: diff inverts cumsum") {
    oracle::Gen g(11);
    for (int rep = 0; rep < 200; ++rep) {
        const auto n = static_cast<std::size_t>(g.integer(2, 60));
        const Series s("s", g.integer(1900, 2000), g.normals(n, g.uniform(0.01, 1000)));
        const Series back = diff(cumsum(s));
        const Series tail = s.slice(s.start_year() + 1, s.end_year());
        REQUIRE(back.start_year() == tail.start_year());
        double scale = 0.0;
        for (double v : s.values()) scale = std::max(scale, std::abs(v));
        for (std::size_t i = 0; i < tail.size(); ++i) {
            CHECK(std::abs(back[i] - tail[i]) <= 1e-12 * scale * static_cast<double>(n));
        }
    }
}

TEST_CASE("property: moving average of a constant is the constant") {
    oracle::Gen g(12);
    for (int rep = 0; rep < 100; ++rep) {
        const double c = g.uniform(-1e3, 1e3);
        const auto n = static_cast<std::size_t>(g.integer(1, 40));
        const int w = g.integer(1, static_cast<int>(n));
        const Series m = moving_average(Series("c", 1950, std::vector<double>(n, c)), w);
        for (double v : m.values()) CHECK(v == doctest::Approx(c).epsilon(1e-14));
    }
}

TEST_CASE("property: growth rate is scale invariant") {
    oracle::Gen g(13);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> v(static_cast<std::size_t>(g.integer(2, 50)));
        for (auto& x : v) x = g.uniform(1.0, 100.0);
        const double a = g.uniform(1e-3, 1e3);
        std::vector<double> scaled = v;
        for (auto& x : scaled) x *= a;
        const Series r1 = growth_rate(Series("s", 1960, v));
        const Series r2 = growth_rate(Series("s", 1960, scaled));
        for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r2[i] == doctest::Approx(r1[i]).epsilon(1e-12));
    }
}

TEST_CASE("property: alignment is commutative") {
    oracle::Gen g(14);
    for (int rep = 0; rep < 200; ++rep) {
        const Series a("a", g.integer(1900, 1950), std::vector<double>(static_cast<std::size_t>(g.integer(1, 80)), 0.0));
        const Series b("b", g.integer(1900, 1950), std::vector<double>(static_cast<std::size_t>(g.integer(1, 80)), 0.0));
        const Series ab[] = {a, b};
        const Series ba[] = {b, a};
        bool threw_ab = false;
        bool threw_ba = false;
        std::pair<int, int> r1{};
        std::pair<int, int> r2{};
        try { r1 = common_range(ab); } catch (const AlignmentError&) { threw_ab = true; }
        try { r2 = common_range(ba); } catch (const AlignmentError&) { threw_ba = true; }
        CHECK(threw_ab == threw_ba);
        CHECK(r1 == r2);
    }
}

}
