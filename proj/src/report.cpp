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

#include "varnet/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace varnet {

nlohmann::ordered_json to_json(const CatalogStats& stats) {
    return {
        {"total_data", stats.total_data},
        {"total_variables", stats.total_variables},
        {"variable_types", stats.variable_types},
        {"max_variables", stats.max_variables},
        {"min_variables", stats.min_variables},
    };
}

nlohmann::ordered_json to_json(const MetricsReport& report) {
    nlohmann::ordered_json out;
    out["n_nodes"] = report.n_nodes;
    out["n_edges"] = report.n_edges;
    out["average_degree"] = report.average_degree;
    out["density"] = report.density;
    out["average_clustering"] = report.average_clustering;
    out["assortativity"] = report.assortativity ? nlohmann::ordered_json(*report.assortativity) : nullptr;
    out["average_path_length"] = report.average_path_length;
    out["diameter"] = report.diameter;
    return out;
}

nlohmann::ordered_json to_json(const PowerLawFit& fit) {
    return {
        {"gamma", fit.gamma},
        {"slope", fit.slope},
        {"intercept", fit.intercept},
        {"r_squared", fit.r_squared},
        {"window_begin", fit.window.begin},
        {"window_end", fit.window.end},
    };
}

nlohmann::ordered_json to_json(const TwoRegimeFit& fit) {
    return {
        {"breakpoint", fit.breakpoint},
        {"split", fit.split},
        {"sse", fit.sse},
        {"head", to_json(fit.head)},
        {"tail", to_json(fit.tail)},
    };
}

std::string format_number(double value) { return fmt::format("{}", value); }

std::string ccdf_csv(const CcdfPoints& points) {
    std::string out = "m,ccdf\n";
    for (const auto& p : points) out += fmt::format("{},{}\n", p.value, p.ccdf);
    return out;
}

std::string knn_csv(const std::map<std::size_t, double>& knn) {
    std::string out = "k,knn\n";
    for (const auto& [k, value] : knn) out += fmt::format("{},{}\n", k, value);
    return out;
}

std::string curve_csv(const RobustnessCurve& curve, int f_decimals) {
    std::string out = "f,mean_ratio,std_ratio\n";
    for (std::size_t i = 0; i < curve.f.size(); ++i)
        out += fmt::format("{:.{}f},{},{}\n", curve.f[i], f_decimals, curve.mean_ratio[i], curve.std_ratio[i]);
    return out;
}

int decimals_for_step(double step) {
    for (int d = 0; d < 9; ++d) {
        const double scaled = step * std::pow(10.0, d);
        if (std::abs(scaled - std::round(scaled)) < 1e-9 * std::max(1.0, scaled)) return d;
    }
    return 9;
}

}  // namespace varnet
