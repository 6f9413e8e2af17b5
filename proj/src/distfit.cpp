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

#include "varnet/distfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "varnet/ingest.hpp"
#include "varnet/network.hpp"

namespace varnet {

std::string_view to_string(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::variable_occurrence: return "variable_occurrence";
        case DistributionKind::variables_per_dataset: return "variables_per_dataset";
        case DistributionKind::degree: return "degree";
    }
    return "unknown";
}

FrequencyDistribution FrequencyDistribution::from_values(std::span<const std::uint64_t> values,
                                                         DistributionKind kind) {
    FrequencyDistribution dist;
    dist.kind = kind;
    for (std::uint64_t v : values) ++dist.counts[v];
    dist.total_items = values.size();
    return dist;
}

FrequencyDistribution variable_occurrence_distribution(const Catalog& catalog) {
    if (catalog.empty()) throw InvalidArgument("variable occurrence distribution of an empty catalog");
    std::vector<std::uint64_t> values;
    values.reserve(catalog.index().size());
    for (const auto& [label, positions] : catalog.index()) values.push_back(positions.size());
    return FrequencyDistribution::from_values(values, DistributionKind::variable_occurrence);
}

FrequencyDistribution variables_per_dataset_distribution(const Catalog& catalog) {
    if (catalog.empty()) throw InvalidArgument("variables-per-dataset distribution of an empty catalog");
    std::vector<std::uint64_t> values;
    values.reserve(catalog.size());
    for (const auto& r : catalog.records()) values.push_back(r.variables.size());
    return FrequencyDistribution::from_values(values, DistributionKind::variables_per_dataset);
}

FrequencyDistribution degree_distribution(const DataNetwork& network) {
    if (network.empty()) throw GraphError("degree distribution of an empty network");
    std::vector<std::uint64_t> values(network.node_count());
    for (NodeIndex v = 0; v < network.node_count(); ++v) values[v] = network.degree(v);
    return FrequencyDistribution::from_values(values, DistributionKind::degree);
}

CcdfPoints ccdf(const FrequencyDistribution& dist) {
    CcdfPoints points;
    if (dist.empty()) throw InvalidArgument("ccdf of an empty distribution");
    points.reserve(dist.counts.size());
    const double total = static_cast<double>(dist.total_items);
    std::uint64_t at_least = dist.total_items;
    for (const auto& [value, count] : dist.counts) {
        points.push_back({static_cast<double>(value), static_cast<double>(at_least) / total});
        at_least -= count;
    }
    return points;
}

double cumulative_share(const FrequencyDistribution& dist, std::uint64_t m) {
    if (dist.empty()) throw InvalidArgument("cumulative share of an empty distribution");
    std::uint64_t at_most = 0;
    for (auto it = dist.counts.begin(); it != dist.counts.end() && it->first <= m; ++it) at_most += it->second;
    return static_cast<double>(at_most) / static_cast<double>(dist.total_items);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw InvalidArgument("line fit needs at least two paired points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw InvalidArgument("line fit needs at least two distinct x values");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.sse += r * r;
    }
    fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - fit.sse / syy, 0.0, 1.0);
    return fit;
}

namespace {

struct LogPoints {
    std::vector<double> x, y;
};

LogPoints to_log10(std::span<const CcdfPoint> points) {
    LogPoints out;
    out.x.reserve(points.size());
    out.y.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.value > 0.0) || !(p.ccdf > 0.0) || !std::isfinite(p.value) || !std::isfinite(p.ccdf))
            throw InvalidArgument("power-law fits need strictly positive, finite points");
        out.x.push_back(std::log10(p.value));
        out.y.push_back(std::log10(p.ccdf));
    }
    return out;
}

PowerLawFit to_power_law(const LineFit& line, FitWindow window) {
    PowerLawFit fit;
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.gamma = 1.0 - line.slope;
    fit.r_squared = line.r_squared;
    fit.window = window;
    return fit;
}

LineFit fit_window(const LogPoints& pts, FitWindow w) {
    return fit_line(std::span(pts.x).subspan(w.begin, w.size()), std::span(pts.y).subspan(w.begin, w.size()));
}

// Prefix sums over globally centered coordinates for O(1) window R^2.
class WindowScanner {
public:
    explicit WindowScanner(const LogPoints& pts) {
        const std::size_t n = pts.x.size();
        long double mx = 0, my = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mx += pts.x[i];
            my += pts.y[i];
        }
        mx /= n;
        my /= n;
        sx_.assign(n + 1, 0);
        sy_ = sxx_ = syy_ = sxy_ = sx_;
        for (std::size_t i = 0; i < n; ++i) {
            const long double x = pts.x[i] - mx, y = pts.y[i] - my;
            sx_[i + 1] = sx_[i] + x;
            sy_[i + 1] = sy_[i] + y;
            sxx_[i + 1] = sxx_[i] + x * x;
            syy_[i + 1] = syy_[i] + y * y;
            sxy_[i + 1] = sxy_[i] + x * y;
        }
    }

    double r_squared(FitWindow w) const {
        const long double len = static_cast<long double>(w.size());
        auto range = [&](const std::vector<long double>& s) { return s[w.end] - s[w.begin]; };
        const long double sx = range(sx_), sy = range(sy_);
        const long double cxx = range(sxx_) - sx * sx / len;
        const long double cyy = range(syy_) - sy * sy / len;
        const long double cxy = range(sxy_) - sx * sy / len;
        if (cxx <= 0) return 0.0;
        if (cyy <= 0) return 1.0;
        return static_cast<double>(std::clamp<long double>(cxy * cxy / (cxx * cyy), 0, 1));
    }

private:
    std::vector<long double> sx_, sy_, sxx_, syy_, sxy_;
};

}  // namespace

PowerLawFit fit_power_law(std::span<const CcdfPoint> points, const PowerLawOptions& options) {
    if (options.min_window < 2) throw InvalidArgument("min_window must be at least 2");
    if (!(options.r2_min >= 0.0 && options.r2_min <= 1.0)) throw InvalidArgument("r2_min must lie in [0, 1]");
    const std::size_t n = points.size();
    if (n < options.min_window)
        throw InvalidArgument("power-law fit needs at least " + std::to_string(options.min_window) +
                              " points, got " + std::to_string(n));
    const LogPoints pts = to_log10(points);
    const WindowScanner scanner(pts);

    // Prefix-sum R^2 screens candidates; the exact R^2 of each screened
    // window decides qualification and ties.
    constexpr double screen_slack = 1e-9;
    FitWindow best_seen;
    double best_seen_r2 = -1.0;
    for (std::size_t len = n; len >= options.min_window; --len) {
        std::optional<std::pair<FitWindow, LineFit>> chosen;
        for (std::size_t begin = 0; begin + len <= n; ++begin) {
            const FitWindow w{begin, begin + len};
            const double screened = scanner.r_squared(w);
            if (screened > best_seen_r2 + screen_slack) {
                best_seen = w;
                best_seen_r2 = screened;
            }
            if (screened < options.r2_min - screen_slack) continue;
            const LineFit line = fit_window(pts, w);
            if (line.r_squared < options.r2_min) continue;
            if (!chosen || line.r_squared > chosen->second.r_squared) chosen.emplace(w, line);
        }
        if (chosen) return to_power_law(chosen->second, chosen->first);
    }
    best_seen_r2 = fit_window(pts, best_seen).r_squared;
    throw FitError("no window of at least " + std::to_string(options.min_window) + " points reaches R^2 >= " +
                       std::to_string(options.r2_min) + " (best " + std::to_string(best_seen_r2) + " on [" +
                       std::to_string(best_seen.begin) + ", " + std::to_string(best_seen.end) + "))",
                   best_seen, best_seen_r2);
}

TwoRegimeFit fit_two_regime(std::span<const CcdfPoint> points, std::size_t min_segment) {
    if (min_segment < 2) throw InvalidArgument("min_segment must be at least 2");
    const std::size_t n = points.size();
    if (n < 2 * min_segment)
        throw InvalidArgument("two-regime fit needs at least " + std::to_string(2 * min_segment) + " points, got " +
                              std::to_string(n));
    const LogPoints pts = to_log10(points);

    std::optional<TwoRegimeFit> best;
    for (std::size_t split = min_segment; split + min_segment <= n; ++split) {
        const FitWindow head_w{0, split}, tail_w{split, n};
        const LineFit head = fit_window(pts, head_w);
        const LineFit tail = fit_window(pts, tail_w);
        const double sse = head.sse + tail.sse;
        if (best && sse >= best->sse - 1e-12 * (1.0 + best->sse)) continue;
        best = TwoRegimeFit{to_power_law(head, head_w), to_power_law(tail, tail_w), split, points[split].value, sse};
    }
    return *best;
}

}  // namespace varnet
