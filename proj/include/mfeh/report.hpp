#pragma once

// CSV table emission and an optional single-file SVG line chart derived
// from the already-written table. CSV is the source of truth; every number
// goes through format_g9 so repeated runs are byte-identical.

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mfeh/common.hpp"
#include "mfeh/optimize.hpp"
#include "mfeh/scenario.hpp"
#include "mfeh/traces.hpp"

namespace mfeh {

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows,
                            bool power_table) {
    if (power_table) {
        os << "coil,f_hz,r_m,i_a,p_w\n";
        for (const auto& row : rows)
            os << row.coil_label << ',' << format_g9(row.frequency) << ','
               << format_g9(row.distance) << ',' << format_g9(row.i_a) << ','
               << format_g9(row.value) << '\n';
    } else {
        os << "coil,f_hz,r_m,k_uw_per_a2\n";
        for (const auto& row : rows)
            os << row.coil_label << ',' << format_g9(row.frequency) << ','
               << format_g9(row.distance) << ',' << format_g9(row.value) << '\n';
    }
}

inline void write_coefficient_csv(std::ostream& os, const CoefficientTable& table) {
    os << "coil,f_hz,r_m,k_uw_per_a2\n";
    for (const auto& row : table)
        os << row.coil_label << ',' << format_g9(row.frequency) << ','
           << format_g9(row.distance) << ',' << format_g9(row.k_uw_per_a2) << '\n';
}

inline void write_energy_csv(std::ostream& os, const EnergyReport& report) {
    os << "label,energy_j\n";
    for (const auto& [label, joules] : report.per_event)
        os << label << ',' << format_g9(joules) << '\n';
}

inline void write_detection_csv(std::ostream& os, const PassDetection& detection) {
    os << "t_start_s,t_end_s,peak_w,energy_j\n";
    for (const auto& iv : detection.intervals)
        os << format_g9(iv.t_start) << ',' << format_g9(iv.t_end) << ','
           << format_g9(iv.peak_power) << ',' << format_g9(iv.energy) << '\n';
}

/// A named polyline for the SVG chart.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Minimal deterministic SVG line chart: one polyline per series, framed
/// axes, min/max tick labels. Intended for quick inspection, not publication.
inline void write_svg_chart(std::ostream& os, const std::string& title,
                            const std::string& x_label, const std::string& y_label,
                            const std::vector<PlotSeries>& series) {
    constexpr double width = 720.0, height = 480.0;
    constexpr double ml = 80.0, mr = 24.0, mt = 40.0, mb = 56.0;

    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                y_min = y_max = y;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const auto px = [&](double x) {
        return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr);
    };
    const auto py = [&](double y) {
        return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb);
    };

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
       << "</text>\n";
    os << "<text x=\"18\" y=\"" << height / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
       << "transform=\"rotate(-90 18 " << height / 2 << ")\">" << y_label << "</text>\n";
    os << "<text x=\"" << ml << "\" y=\"" << height - mb + 16
       << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_g9(x_min) << "</text>\n";
    os << "<text x=\"" << width - mr << "\" y=\"" << height - mb + 16
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << format_g9(x_max) << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << height - mb
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << format_g9(y_min) << "</text>\n";
    os << "<text x=\"" << ml - 6 << "\" y=\"" << mt + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
       << format_g9(y_max) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = palette[i % (sizeof(palette) / sizeof(palette[0]))];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : series[i].points)
            os << format_g9(px(x)) << ',' << format_g9(py(y)) << ' ';
        os << "\"/>\n";
        os << "<text x=\"" << width - mr - 4 << "\" y=\"" << mt + 16.0 * double(i + 1)
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
           << color << "\">" << series[i].label << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace mfeh
