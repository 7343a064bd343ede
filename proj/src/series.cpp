#include "tsecon/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "tsecon/error.hpp"

namespace tsecon {

namespace {

std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

bool parse_int(const std::string& text, int& out) {
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_double(const std::string& text, double& out) {
    if (text.empty()) {
        return false;
    }
    // strtod accepts leading '+' and exponent forms; from_chars for double is
    // incomplete in older libstdc++.
    char* end = nullptr;
    out = std::strtod(text.c_str(), &end);
    return end == text.c_str() + text.size() && std::isfinite(out);
}

}  // namespace

Series::Series(std::string name, int start_year, std::vector<double> values)
    : name_(std::move(name)), start_year_(start_year), values_(std::move(values)) {
    if (values_.empty()) {
        throw EmptyInput("series '" + name_ + "' has no values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw RangeError("series '" + name_ + "' has a non-finite value at year " +
                             std::to_string(start_year_ + static_cast<int>(i)));
        }
    }
}

double Series::at_year(int year) const {
    if (!contains(year)) {
        throw RangeError("year " + std::to_string(year) + " outside series '" + name_ + "'");
    }
    return values_[static_cast<std::size_t>(year - start_year_)];
}

Series Series::slice(int first, int last) const {
    if (first > last || !contains(first) || !contains(last)) {
        throw RangeError("slice [" + std::to_string(first) + ", " + std::to_string(last) +
                         "] outside series '" + name_ + "'");
    }
    const auto begin = values_.begin() + (first - start_year_);
    return Series(name_, first, std::vector<double>(begin, begin + (last - first + 1)));
}

Series Series::renamed(std::string name) const { return Series(std::move(name), start_year_, values_); }

Series load_csv(std::istream& source, std::string name) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<double> values;
    int start_year = 0;
    int expected_year = 0;

    while (std::getline(source, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (!header_seen) {
            if (text != "year,value") {
                throw ParseError(line_no, "expected header 'year,value'");
            }
            header_seen = true;
            continue;
        }
        if (text.empty()) {
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw ParseError(line_no, "expected two comma-separated fields");
        }
        int year = 0;
        double value = 0.0;
        if (!parse_int(trim(text.substr(0, comma)), year)) {
            throw ParseError(line_no, "unparseable year");
        }
        if (!parse_double(trim(text.substr(comma + 1)), value)) {
            throw ParseError(line_no, "unparseable value");
        }
        if (values.empty()) {
            start_year = year;
        } else if (year != expected_year) {
            if (year > expected_year) {
                throw GapError(expected_year);
            }
            throw ParseError(line_no, "years must be strictly increasing");
        }
        values.push_back(value);
        expected_year = year + 1;
    }
    if (!header_seen) {
        throw EmptyInput("input has no header");
    }
    if (values.empty()) {
        throw EmptyInput("input has a header but no rows");
    }
    return Series(std::move(name), start_year, std::move(values));
}

Series load_csv_file(const std::string& path, std::string name) {
    std::ifstream in(path);
    if (!in) {
        throw MissingFixture(path);
    }
    return load_csv(in, std::move(name));
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Series& s) {
    out << "year,value\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << s.start_year() + static_cast<int>(i) << ',' << format_double(s[i]) << '\n';
    }
}

std::vector<int> load_year_list(std::istream& source) {
    std::vector<int> years;
    std::string line;
    int line_no = 0;
    while (std::getline(source, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        int year = 0;
        if (!parse_int(text, year)) {
            throw ParseError(line_no, "unparseable year");
        }
        years.push_back(year);
    }
    return years;
}

Series diff(const Series& s, int order) {
    if (order < 1) {
        throw RangeError("difference order must be positive");
    }
    if (s.size() <= static_cast<std::size_t>(order)) {
        throw LengthError("series '" + s.name() + "' too short for difference of order " +
                          std::to_string(order));
    }
    std::vector<double> v(s.values().begin(), s.values().end());
    for (int k = 0; k < order; ++k) {
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            v[i] -= v[i - 1];
        }
        v.erase(v.begin());
    }
    return Series(s.name(), s.start_year() + order, std::move(v));
}

Series cumsum(const Series& s) {
    std::vector<double> v(s.size());
    std::partial_sum(s.values().begin(), s.values().end(), v.begin());
    return Series(s.name(), s.start_year(), std::move(v));
}

Series growth_rate(const Series& s) {
    if (s.size() < 2) {
        throw LengthError("growth rate needs at least two values");
    }
    std::vector<double> v(s.size() - 1);
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1] == 0.0) {
            throw DivideByZero(s.start_year() + static_cast<int>(i) - 1);
        }
        v[i - 1] = (s[i] - s[i - 1]) / s[i - 1];
    }
    return Series(s.name(), s.start_year() + 1, std::move(v));
}

Series moving_average(const Series& s, int window) {
    if (window < 1) {
        throw RangeError("moving-average window must be positive");
    }
    const auto w = static_cast<std::size_t>(window);
    if (w > s.size()) {
        throw LengthError("window longer than series '" + s.name() + "'");
    }
    std::vector<double> v(s.size() - w + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < w; ++j) {
            sum += s[i + j];
        }
        v[i] = sum / static_cast<double>(w);
    }
    return Series(s.name(), s.start_year() + window - 1, std::move(v));
}

Series shift(const Series& s, int k) {
    return Series(s.name(), s.start_year() + k, std::vector<double>(s.values().begin(), s.values().end()));
}

SummaryStats summary(const Series& s) {
    if (s.size() < 2) {
        throw LengthError("summary statistics need at least two values");
    }
    const auto v = s.values();
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    // Rounding can push the mean of a constant series a hair outside [min, max].
    return {std::clamp(mean, *lo, *hi), std::sqrt(ss / (n - 1.0)), *lo, *hi, v.size()};
}

std::pair<int, int> common_range(std::span<const Series> series) {
    if (series.empty()) {
        throw AlignmentError("no series to align");
    }
    int first = series.front().start_year();
    int last = series.front().end_year();
    for (const auto& s : series) {
        first = std::max(first, s.start_year());
        last = std::min(last, s.end_year());
    }
    if (first > last) {
        throw AlignmentError("series have no common years");
    }
    return {first, last};
}

std::vector<Series> align(std::span<const Series> series) {
    const auto [first, last] = common_range(series);
    std::vector<Series> out;
    out.reserve(series.size());
    for (const auto& s : series) {
        out.push_back(s.slice(first, last));
    }
    return out;
}

namespace {

template <typename Op>
Series combine(const Series& a, const Series& b, Op op, const std::string& name) {
    const Series pair[] = {a, b};
    const auto [first, last] = common_range(pair);
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(last - first + 1));
    for (int y = first; y <= last; ++y) {
        v.push_back(op(a.at_year(y), b.at_year(y)));
    }
    return Series(name, first, std::move(v));
}

}  // namespace

Series subtract(const Series& a, const Series& b) {
    return combine(a, b, std::minus<>{}, a.name() + "-" + b.name());
}

Series add(const Series& a, const Series& b) {
    return combine(a, b, std::plus<>{}, a.name() + "+" + b.name());
}

Series scale(const Series& s, double factor, double offset) {
    std::vector<double> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[i] = factor * s[i] + offset;
    }
    return Series(s.name(), s.start_year(), std::move(v));
}

}  // namespace tsecon
