// Copyright 2026 colorproj Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "colorproj_tools/cli.h"

namespace colorproj::cli {

namespace {

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(const char *pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<TrialStats> &rows, bool log_y) {
    const double width = 640;
    const double height = 420;
    const double left = 70;
    const double right = 130;
    const double top = 30;
    const double bottom = 50;

    std::map<std::pair<std::string, int>, std::vector<const TrialStats *>> curves;
    double p_min = 1;
    double p_max = 0;
    double y_max = 0;
    double y_min_pos = 1;
    for (const auto &s : rows) {
        curves[{s.code, s.r}].push_back(&s);
        p_min = std::min(p_min, s.p);
        p_max = std::max(p_max, s.p);
        y_max = std::max(y_max, s.logical_rate);
        if (s.logical_rate > 0) {
            y_min_pos = std::min(y_min_pos, s.logical_rate);
        }
    }
    if (rows.empty()) {
        p_min = 0;
        p_max = 1;
    }
    if (p_max <= p_min) {
        p_max = p_min + 1e-3;
    }
    double y_lo = 0;
    double y_hi = y_max > 0 ? y_max * 1.05 : 1;
    if (log_y) {
        y_lo = std::pow(10, std::floor(std::log10(y_min_pos)));
        y_hi = 1;
    }
    auto px = [&](double p) { return left + (p - p_min) / (p_max - p_min) * (width - left - right); };
    auto py = [&](double y) {
        double t;
        if (log_y) {
            y = std::max(y, y_lo);
            t = (std::log10(y) - std::log10(y_lo)) / (std::log10(y_hi) - std::log10(y_lo));
        } else {
            t = (y - y_lo) / (y_hi - y_lo);
        }
        return height - bottom - t * (height - top - bottom);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
        << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 4; i++) {
        double p = p_min + (p_max - p_min) * i / 4;
        svg << "<text x=\"" << fmt("%.1f", px(p)) << "\" y=\"" << height - bottom + 16
            << "\" text-anchor=\"middle\">" << fmt("%.4g", p) << "</text>\n";
    }
    if (log_y) {
        for (double y = y_lo; y <= y_hi * 1.0001; y *= 10) {
            svg << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.1f", py(y) + 4) << "\" text-anchor=\"end\">"
                << fmt("%g", y) << "</text>\n";
        }
    } else {
        for (int i = 0; i <= 4; i++) {
            double y = y_lo + (y_hi - y_lo) * i / 4;
            svg << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.1f", py(y) + 4) << "\" text-anchor=\"end\">"
                << fmt("%.3g", y) << "</text>\n";
        }
    }
    svg << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">physical error rate p</text>\n";
    svg << "<text x=\"16\" y=\"" << (top + height - bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (top + height - bottom) / 2 << ")\">logical error rate</text>\n";

    size_t index = 0;
    for (const auto &[key, pts] : curves) {
        const char *color = kPalette[index % std::size(kPalette)];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < pts.size(); i++) {
            svg << (i ? " " : "") << fmt("%.2f", px(pts[i]->p)) << "," << fmt("%.2f", py(pts[i]->logical_rate));
        }
        svg << "\"/>\n";
        double ly = top + 14 + 16 * static_cast<double>(index);
        svg << "<line x1=\"" << width - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << width - right + 30
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << width - right + 34 << "\" y=\"" << ly + 4 << "\">" << key.first << " r=" << key.second
            << "</text>\n";
        index++;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace colorproj::cli
