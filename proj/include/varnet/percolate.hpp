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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "varnet/error.hpp"
#include "varnet/network.hpp"

namespace varnet {

enum class TargetedMode { static_degree, adaptive_degree };

/// Ascending grid 0, step, 2 step, ..., 1. `step` must divide 1 up to
/// rounding (0.02 -> 51 points). Throws InvalidArgument otherwise.
std::vector<double> make_f_grid(double step);

/// Validates a removal grid: strictly ascending, within [0, 1], contains
/// both 0 and 1.
void check_f_grid(std::span<const double> f_grid);

/// Number of nodes removed at fraction f: floor(f * n), with a 1e-12
/// relative slack absorbing grid round-off (0.58 * 100 -> 58).
std::size_t removal_count(double f, std::size_t n);

/// Relative size of the largest component after removing a fraction f of
/// the nodes, P(f)/P(0), for one strategy.
struct RobustnessCurve {
    std::string strategy;
    std::vector<double> f;
    std::vector<double> mean_ratio;
    std::vector<double> std_ratio;
    std::size_t n_runs = 1;
};

/// Largest component size; 0 for an empty network.
std::size_t largest_component_size(const DataNetwork& network);

/// Largest component size among nodes with removed[v] == 0.
std::size_t largest_component_size(const DataNetwork& network, std::span<const char> removed);

/// Uniform random removal. Each (run, f) cell draws its own removal set
/// from a seed derived from (seed, run, f index), so cells are independent
/// and may be evaluated on `threads` threads without changing the result.
/// std_ratio is the population standard deviation over runs. Throws
/// GraphError unless the network is connected with |V| >= 2.
RobustnessCurve random_removal_curve(const DataNetwork& network, std::span<const double> f_grid,
                                     std::size_t n_runs, std::uint64_t seed, unsigned threads = 1);

/// Removal in descending degree order, ties by ascending id. Static mode
/// ranks by the initial degrees; adaptive mode re-ranks after every
/// removal. Deterministic: n_runs = 1, std_ratio = 0.
RobustnessCurve targeted_removal_curve(const DataNetwork& network, std::span<const double> f_grid,
                                       TargetedMode mode = TargetedMode::static_degree);

/// The node removal order used by targeted_removal_curve.
std::vector<NodeIndex> targeted_removal_order(const DataNetwork& network, TargetedMode mode);

}  // namespace varnet
