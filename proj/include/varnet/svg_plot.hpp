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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace varnet::svg {

enum class Scale { linear, log10 };

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f77b4";
    bool markers = true;
    bool line = false;
};

struct Axis {
    std::string label;
    Scale scale = Scale::linear;
    /// Data range; derived from the series when absent.
    std::optional<std::pair<double, double>> range;
};

struct Plot {
    std::string title;
    Axis x;
    Axis y;
    int width = 640;
    int height = 480;
};

/// Scatter/line chart as a standalone SVG document. Points that cannot be
/// shown on a log axis (<= 0) are dropped.
std::string render(const Plot& plot, std::span<const Series> series);

}  // namespace varnet::svg
