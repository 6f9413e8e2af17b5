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
#include <map>
#include <optional>

#include "varnet/error.hpp"
#include "varnet/network.hpp"

namespace varnet {

/// Structural summary of one connected network.
struct MetricsReport {
    std::size_t n_nodes = 0;
    std::size_t n_edges = 0;
    double average_degree = 0.0;
    double density = 0.0;
    double average_clustering = 0.0;
    /// Absent when every edge endpoint has the same degree.
    std::optional<double> assortativity;
    double average_path_length = 0.0;
    std::size_t diameter = 0;
};

/// 2|E|/|V|. Throws GraphError on an empty network.
double average_degree(const DataNetwork& network);

/// <k>/(|V|-1). Throws GraphError when |V| < 2.
double density(const DataNetwork& network);

/// 2 L_v / (k_v (k_v - 1)), with 0 for k_v < 2.
double local_clustering(const DataNetwork& network, NodeIndex v);

/// Mean of local_clustering over all nodes. Throws GraphError when empty.
double average_clustering(const DataNetwork& network);

/// Degree assortativity over the edge list:
///
///   r = (<k_p k_q> - <(k_p + k_q)/2>^2) / (<(k_p^2 + k_q^2)/2> - <(k_p + k_q)/2>^2)
///
/// with averages over edges. Sums are accumulated exactly in integers, so
/// a zero denominator (regular graphs) is detected exactly and reported as
/// nullopt. Throws GraphError when there are no edges.
std::optional<double> assortativity(const DataNetwork& network);

/// k -> mean over degree-k nodes of their neighbors' mean degree.
/// Isolates are skipped. Throws GraphError when there are no edges.
std::map<std::size_t, double> degree_correlation(const DataNetwork& network);

/// Sum of shortest-path distances over ordered pairs, and the diameter.
struct DistanceSummary {
    std::uint64_t distance_sum = 0;
    std::size_t diameter = 0;
};

/// One BFS per source, optionally split across threads. Throws GraphError
/// on a disconnected or empty network.
DistanceSummary distance_summary(const DataNetwork& network, unsigned threads = 1);

/// Mean distance over ordered pairs, sum / (|V| (|V| - 1)). Requires a
/// connected network with at least two nodes.
double average_path_length(const DataNetwork& network, unsigned threads = 1);

/// Largest BFS eccentricity. Requires a connected, nonempty network.
std::size_t diameter(const DataNetwork& network, unsigned threads = 1);

/// All of the above with a single all-sources BFS sweep. Requires a
/// connected network with |V| >= 2.
MetricsReport full_report(const DataNetwork& network, unsigned threads = 1);

}  // namespace varnet
