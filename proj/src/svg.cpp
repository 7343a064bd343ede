#include "tsecon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "tsecon/error.hpp"

namespace tsecon::svg {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Line from_series(const Series& s) {
    Line l{s.name(), {}, {}};
    for (std::size_t i = 0; i < s.size(); ++i) {
        l.x.push_back(s.start_year() + static_cast<double>(i));
        l.y.push_back(s[i]);
    }
    return l;
}

void line_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                const std::vector<Line>& lines) {
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    for (const auto& l : lines) {
        for (double v : l.x) {
            x0 = std::min(x0, v);
            x1 = std::max(x1, v);
        }
        for (double v : l.y) {
            y0 = std::min(y0, v);
            y1 = std::max(y1, v);
        }
    }
    if (!std::isfinite(x0)) {
        x0 = 0;
        x1 = 1;
        y0 = 0;
        y1 = 1;
    }
    if (x1 == x0) {
        x1 = x0 + 1;
    }
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fmt(kLeft) << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
    out << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw) << "\" height=\""
        << fmt(ph) << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0;
        const double yv = y0 + (y1 - y0) * i / 4.0;
        out << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << fmt(kTop + ph + 16)
            << "\" text-anchor=\"middle\">" << tick(xv) << "</text>\n";
        out << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(py(yv) + 4) << "\" text-anchor=\"end\">"
            << tick(yv) << "</text>\n";
        out << "<line x1=\"" << fmt(kLeft) << "\" x2=\"" << fmt(kLeft + pw) << "\" y1=\"" << fmt(py(yv))
            << "\" y2=\"" << fmt(py(yv)) << "\" stroke=\"#ddd\"/>\n";
    }
    out << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 10) << "\" text-anchor=\"middle\">"
        << escape(x_label) << "</text>\n";
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto& l = lines[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        const std::size_t n = std::min(l.x.size(), l.y.size());
        for (std::size_t i = 0; i < n; ++i) {
            out << (i ? " " : "") << fmt(px(l.x[i])) << ',' << fmt(py(l.y[i]));
        }
        out << "\"/>\n";
        const double ly = kTop + 14 + 18 * static_cast<double>(k);
        out << "<line x1=\"" << fmt(kLeft + pw + 12) << "\" x2=\"" << fmt(kLeft + pw + 32) << "\" y1=\""
            << fmt(ly - 4) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(kLeft + pw + 38) << "\" y=\"" << fmt(ly) << "\">" << escape(l.label)
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_line_chart(const std::string& path, const std::string& title, const std::string& x_label,
                      const std::vector<Line>& lines) {
    std::ofstream out(path);
    if (!out) {
        throw RangeError("cannot write " + path);
    }
    line_chart(out, title, x_label, lines);
}

}  // namespace tsecon::svg
