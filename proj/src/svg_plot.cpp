/*
Copyright 2026 The varnet Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "varnet/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace varnet::svg {

namespace {

constexpr double margin_left = 70, margin_right = 20, margin_top = 40, margin_bottom = 55;

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

bool usable(Scale s, double v) { return std::isfinite(v) && (s == Scale::linear || v > 0.0); }

double transform(Scale s, double v) { return s == Scale::log10 ? std::log10(v) : v; }

// Range in transformed coordinates.
std::pair<double, double> axis_range(const Axis& axis, std::span<const Series> series, bool is_x) {
    double lo, hi;
    if (axis.range) {
        lo = transform(axis.scale, axis.range->first);
        hi = transform(axis.scale, axis.range->second);
    } else {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (const auto& s : series)
            for (const auto& [x, y] : s.points) {
                const double v = is_x ? x : y;
                if (!usable(axis.scale, v) || !usable(Scale::linear, is_x ? y : x)) continue;
                lo = std::min(lo, transform(axis.scale, v));
                hi = std::max(hi, transform(axis.scale, v));
            }
        if (!std::isfinite(lo)) lo = 0, hi = 1;
        if (axis.scale == Scale::log10) {
            lo = std::floor(lo);
            hi = std::max(std::ceil(hi), lo + 1);
        }
    }
    if (hi <= lo) hi = lo + 1;
    return {lo, hi};
}

std::vector<double> ticks(Scale scale, double lo, double hi) {
    std::vector<double> out;
    if (scale == Scale::log10) {
        const double step = std::max(1.0, std::ceil((hi - lo) / 8));
        for (double t = std::ceil(lo); t <= hi + 1e-9; t += step) out.push_back(t);
        return out;
    }
    const double raw = (hi - lo) / 5;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) out.push_back(t);
    return out;
}

std::string tick_label(Scale scale, double t) {
    if (scale == Scale::log10) return fmt::format("1e{}", static_cast<int>(std::lround(t)));
    if (std::abs(t) < 1e-12) return "0";
    return fmt::format("{:g}", t);
}

}  // namespace

std::string render(const Plot& plot, std::span<const Series> series) {
    const double w = plot.width, h = plot.height;
    const double pw = w - margin_left - margin_right, ph = h - margin_top - margin_bottom;
    const auto [x0, x1] = axis_range(plot.x, series, true);
    const auto [y0, y1] = axis_range(plot.y, series, false);
    auto px = [&](double v) { return margin_left + (transform(plot.x.scale, v) - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return margin_top + ph - (transform(plot.y.scale, v) - y0) / (y1 - y0) * ph; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        plot.width, plot.height, plot.width, plot.height);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", plot.width, plot.height);
    out += fmt::format("<text x=\"{:.2f}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", w / 2,
                       escape(plot.title));
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       margin_left, margin_top, pw, ph);

    for (double t : ticks(plot.x.scale, x0, x1)) {
        const double x = margin_left + (t - x0) / (x1 - x0) * pw;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#ddd\"/>\n", x,
                           margin_top, margin_top + ph);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x,
                           margin_top + ph + 16, tick_label(plot.x.scale, t));
    }
    for (double t : ticks(plot.y.scale, y0, y1)) {
        const double y = margin_top + ph - (t - y0) / (y1 - y0) * ph;
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#ddd\"/>\n",
                           margin_left, y, margin_left + pw);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", margin_left - 6,
                           y + 4, tick_label(plot.y.scale, t));
    }
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", margin_left + pw / 2,
                       h - 12, escape(plot.x.label));
    out += fmt::format("<text x=\"16\" y=\"{0:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0:.2f})\">{1}"
                       "</text>\n",
                       margin_top + ph / 2, escape(plot.y.label));

    out += fmt::format("<clipPath id=\"area\"><rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/>"
                       "</clipPath>\n<g clip-path=\"url(#area)\">\n",
                       margin_left, margin_top, pw, ph);
    for (const auto& s : series) {
        std::vector<std::pair<double, double>> shown;
        for (const auto& [x, y] : s.points)
            if (usable(plot.x.scale, x) && usable(plot.y.scale, y)) shown.emplace_back(px(x), py(y));
        if (s.line && shown.size() >= 2) {
            out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < shown.size(); ++i)
                out += fmt::format("{}{:.2f},{:.2f}", i ? " " : "", shown[i].first, shown[i].second);
            out += "\"/>\n";
        }
        if (s.markers)
            for (const auto& [x, y] : shown)
                out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\" fill=\"{}\"/>\n", x, y, s.color);
    }
    out += "</g>\n";

    double ly = margin_top + 14;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        const double lx = margin_left + pw - 150;
        out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n", lx, ly - 9,
                           s.color);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 14, ly, escape(s.label));
        ly += 16;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace varnet::svg
