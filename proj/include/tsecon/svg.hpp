#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tsecon/series.hpp"

namespace tsecon::svg {

struct Line {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

[[nodiscard]] Line from_series(const Series& s);

/// Static line chart with axes, tick labels and a legend. Output is
/// byte-stable for identical input.
void line_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                const std::vector<Line>& lines);

/// Throws RangeError if the file cannot be opened.
void write_line_chart(const std::string& path, const std::string& title, const std::string& x_label,
                      const std::vector<Line>& lines);

}  // namespace tsecon::svg
