#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pslab/error.hpp"
#include "pslab/exactfloor.hpp"
#include "pslab/lab/experiments.hpp"

namespace pslab::lab {

inline std::string format_real(double v) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v);
    return buf.data();
}

inline std::string to_csv(std::vector<ExperimentRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), row_less);
    std::string out = "alpha,N,count,rhs,ratio\n";
    for (const auto& r : rows) {
        out += r.alpha + ',' + std::to_string(r.N) + ',' + std::to_string(r.count) + ',' + format_real(r.rhs) + ',' +
               format_real(r.ratio) + '\n';
    }
    return out;
}

inline std::string to_csv(const std::vector<ProbeRow>& rows) {
    std::string out = "kind,x,count,main_term,ratio\n";
    for (const auto& r : rows) {
        out += r.kind + ',' + std::to_string(r.x) + ',' + std::to_string(r.count) + ',' + format_real(r.main_term) +
               ',' + format_real(r.ratio) + '\n';
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << content;
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

inline void emit_csv(const std::vector<ExperimentRow>& rows, const std::string& path) {
    if (rows.empty()) throw IoError("no rows to write");
    write_file(path, to_csv(rows));
}

inline void emit_csv(const std::vector<ProbeRow>& rows, const std::string& path) {
    if (rows.empty()) throw IoError("no rows to write");
    write_file(path, to_csv(rows));
}

/// Scatter of ratio against alpha, one colored series per N, with a dashed line at 1.
inline std::string to_svg(const std::vector<ExperimentRow>& rows, const std::string& title) {
    constexpr double width = 640.0, height = 420.0;
    constexpr double left = 70.0, right = 130.0, top = 40.0, bottom = 55.0;
    constexpr std::array<const char*, 6> palette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

    std::map<std::uint64_t, std::vector<std::pair<double, double>>> series;
    double xmin = 1e300, xmax = -1e300, ymin = 1.0, ymax = 1.0;
    for (const auto& r : rows) {
        const double a = parse_alpha(r.alpha).value();
        series[r.N].push_back({a, r.ratio});
        xmin = std::min(xmin, a);
        xmax = std::max(xmax, a);
        ymin = std::min(ymin, r.ratio);
        ymax = std::max(ymax, r.ratio);
    }
    if (xmax <= xmin) {
        xmin -= 0.05;
        xmax += 0.05;
    }
    const double pad = 0.05 * (ymax - ymin > 0 ? ymax - ymin : 1.0);
    ymin -= pad;
    ymax += pad;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto sx = [&](double a) { return left + (a - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) { return top + (ymax - v) / (ymax - ymin) * ph; };
    auto num = [](double v) {
        std::array<char, 32> buf{};
        std::snprintf(buf.data(), buf.size(), "%.2f", v);
        return std::string(buf.data());
    };
    auto fmt4 = [](double v) {
        std::array<char, 32> buf{};
        std::snprintf(buf.data(), buf.size(), "%.4g", v);
        return std::string(buf.data());
    };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title
      << "</text>\n";
    s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double a = xmin + (xmax - xmin) * i / 4.0;
        const double v = ymin + (ymax - ymin) * i / 4.0;
        s << "<text x=\"" << sx(a) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << num(a)
          << "</text>\n";
        s << "<text x=\"" << left - 6 << "\" y=\"" << sy(v) + 4 << "\" text-anchor=\"end\">" << fmt4(v)
          << "</text>\n";
    }
    s << "<line x1=\"" << left << "\" y1=\"" << sy(1.0) << "\" x2=\"" << left + pw << "\" y2=\"" << sy(1.0)
      << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    s << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">alpha</text>\n";
    s << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << top + ph / 2 << ")\">ratio</text>\n";
    std::size_t k = 0;
    for (const auto& [N, pts] : series) {
        const char* color = palette[k % palette.size()];
        for (const auto& [a, v] : pts)
            s << "<circle cx=\"" << sx(a) << "\" cy=\"" << sy(v) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        const double ly = top + 14 + 18.0 * static_cast<double>(k);
        s << "<circle cx=\"" << left + pw + 18 << "\" cy=\"" << ly - 4 << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        s << "<text x=\"" << left + pw + 28 << "\" y=\"" << ly << "\">N = " << N << "</text>\n";
        ++k;
    }
    s << "</svg>\n";
    return s.str();
}

inline void emit_svg(const std::vector<ExperimentRow>& rows, const std::string& path, const std::string& title = "") {
    if (rows.empty()) throw IoError("no rows to plot");
    write_file(path, to_svg(rows, title));
}

}  // namespace pslab::lab
