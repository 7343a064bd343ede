#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tsecon {

/// Annual, year-indexed sequence of finite values with no gaps.
///
/// Values are immutable after construction; every transformation returns a
/// new Series.
class Series {
public:
    /// Throws EmptyInput for an empty value list and RangeError for a
    /// non-finite value.
    Series(std::string name, int start_year, std::vector<double> values);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] int start_year() const noexcept { return start_year_; }
    [[nodiscard]] int end_year() const noexcept {
        return start_year_ + static_cast<int>(values_.size()) - 1;
    }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] bool contains(int year) const noexcept {
        return year >= start_year_ && year <= end_year();
    }
    /// Value at a calendar year; throws RangeError outside the span.
    [[nodiscard]] double at_year(int year) const;

    /// Sub-series over [first, last], both inclusive; RangeError if outside.
    [[nodiscard]] Series slice(int first, int last) const;
    [[nodiscard]] Series renamed(std::string name) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::string name_;
    int start_year_;
    std::vector<double> values_;
};

struct SummaryStats {
    double mean;
    double stdev;  // sample (n-1) standard deviation
    double min;
    double max;
    std::size_t n;
};

/// Reads `year,value` CSV. Throws EmptyInput, GapError, ParseError.
[[nodiscard]] Series load_csv(std::istream& source, std::string name);
[[nodiscard]] Series load_csv_file(const std::string& path, std::string name);
void write_csv(std::ostream& out, const Series& s);

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_double(double v);

/// One year per line; blank lines and `#` comments are ignored.
[[nodiscard]] std::vector<int> load_year_list(std::istream& source);

[[nodiscard]] Series diff(const Series& s, int order = 1);
[[nodiscard]] Series cumsum(const Series& s);
[[nodiscard]] Series growth_rate(const Series& s);
/// Trailing moving average: result at year t averages years t-window+1..t.
[[nodiscard]] Series moving_average(const Series& s, int window);
/// Relabels years by k; values unchanged.
[[nodiscard]] Series shift(const Series& s, int k);
[[nodiscard]] SummaryStats summary(const Series& s);

/// Elementwise operations over the common year range. Throw AlignmentError
/// when the ranges do not overlap.
[[nodiscard]] Series subtract(const Series& a, const Series& b);
[[nodiscard]] Series add(const Series& a, const Series& b);
[[nodiscard]] Series scale(const Series& s, double factor, double offset = 0.0);

/// Common year range of a set of series; AlignmentError if empty.
[[nodiscard]] std::pair<int, int> common_range(std::span<const Series> series);
/// Restricts every series to the common year range.
[[nodiscard]] std::vector<Series> align(std::span<const Series> series);

}  // namespace tsecon
