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

#include "varnet/metrics.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "varnet/error.hpp"
#include "varnet/parallel.hpp"

namespace varnet {

namespace {

__extension__ typedef unsigned __int128 Wide;

// Number of edges among the neighbors of v, using a marker array.
std::uint64_t neighbor_links(const DataNetwork& network, NodeIndex v, std::vector<char>& mark) {
    const auto nbrs = network.neighbors(v);
    for (NodeIndex w : nbrs) mark[w] = 1;
    std::uint64_t twice = 0;
    for (NodeIndex w : nbrs)
        for (NodeIndex x : network.neighbors(w)) twice += static_cast<std::uint64_t>(mark[x]);
    for (NodeIndex w : nbrs) mark[w] = 0;
    return twice / 2;
}

double clustering_from_links(std::uint64_t links, std::size_t k) {
    if (k < 2) return 0.0;
    return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

void require_connected(const DataNetwork& network) {
    if (network.empty()) throw GraphError("path metrics need a nonempty network");
    std::vector<char> seen(network.node_count(), 0);
    std::vector<NodeIndex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeIndex v = stack.back();
        stack.pop_back();
        for (NodeIndex w : network.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != network.node_count())
        throw GraphError("network is disconnected (" + std::to_string(reached) + " of " +
                         std::to_string(network.node_count()) + " nodes reachable); extract a component first");
}

double wide_to_double(Wide x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const auto lo = static_cast<std::uint64_t>(x);
    return static_cast<double>(static_cast<long double>(hi) * 0x1.0p64L + static_cast<long double>(lo));
}

}  // namespace

double average_degree(const DataNetwork& network) {
    if (network.empty()) throw GraphError("average degree of an empty network");
    return 2.0 * static_cast<double>(network.edge_count()) / static_cast<double>(network.node_count());
}

double density(const DataNetwork& network) {
    if (network.node_count() < 2) throw GraphError("density needs at least two nodes");
    return average_degree(network) / static_cast<double>(network.node_count() - 1);
}

double local_clustering(const DataNetwork& network, NodeIndex v) {
    if (v >= network.node_count()) throw InvalidArgument("node index out of range");
    std::vector<char> mark(network.node_count(), 0);
    return clustering_from_links(neighbor_links(network, v, mark), network.degree(v));
}

double average_clustering(const DataNetwork& network) {
    if (network.empty()) throw GraphError("clustering of an empty network");
    std::vector<char> mark(network.node_count(), 0);
    double sum = 0.0;
    for (NodeIndex v = 0; v < network.node_count(); ++v)
        sum += clustering_from_links(neighbor_links(network, v, mark), network.degree(v));
    return sum / static_cast<double>(network.node_count());
}

std::optional<double> assortativity(const DataNetwork& network) {
    if (network.edge_count() == 0) throw GraphError("assortativity needs at least one edge");
    // With m edges, S1 = sum(kp + kq), S2 = sum(kp^2 + kq^2), P = sum(kp kq):
    //   numerator   * 4 m^2 = 4 m P  - S1^2
    //   denominator * 4 m^2 = 2 m S2 - S1^2
    Wide s1 = 0, s2 = 0, p = 0;
    for (NodeIndex u = 0; u < network.node_count(); ++u) {
        const Wide ku = network.degree(u);
        for (NodeIndex v : network.neighbors(u)) {
            if (v < u) continue;
            const Wide kv = network.degree(v);
            s1 += ku + kv;
            s2 += ku * ku + kv * kv;
            p += ku * kv;
        }
    }
    const Wide m = network.edge_count();
    const Wide s1_sq = s1 * s1;
    const Wide den_scaled = 2 * m * s2 - s1_sq;  // >= 0 by Cauchy-Schwarz
    if (den_scaled == 0) return std::nullopt;
    const Wide num_pos = 4 * m * p;
    const double num = num_pos >= s1_sq ? wide_to_double(num_pos - s1_sq) : -wide_to_double(s1_sq - num_pos);
    return num / wide_to_double(den_scaled);
}

std::map<std::size_t, double> degree_correlation(const DataNetwork& network) {
    if (network.edge_count() == 0) throw GraphError("degree correlation needs at least one edge");
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeIndex v = 0; v < network.node_count(); ++v) {
        const std::size_t k = network.degree(v);
        if (k == 0) continue;
        std::uint64_t neighbor_degrees = 0;
        for (NodeIndex w : network.neighbors(v)) neighbor_degrees += network.degree(w);
        auto& [sum, count] = acc[k];
        sum += static_cast<double>(neighbor_degrees) / static_cast<double>(k);
        ++count;
    }
    std::map<std::size_t, double> out;
    for (const auto& [k, entry] : acc) out.emplace(k, entry.first / static_cast<double>(entry.second));
    return out;
}

DistanceSummary distance_summary(const DataNetwork& network, unsigned threads) {
    require_connected(network);
    const std::size_t n = network.node_count();

    std::vector<DistanceSummary> partial(std::max(1u, threads));
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, unsigned worker) {
        constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
        std::vector<std::uint32_t> dist(n, unvisited);
        std::vector<NodeIndex> queue(n);
        DistanceSummary local;
        for (std::size_t s = begin; s < end; ++s) {
            std::fill(dist.begin(), dist.end(), unvisited);
            std::size_t head = 0, tail = 0;
            queue[tail++] = static_cast<NodeIndex>(s);
            dist[s] = 0;
            while (head < tail) {
                const NodeIndex v = queue[head++];
                const std::uint32_t next = dist[v] + 1;
                for (NodeIndex w : network.neighbors(v))
                    if (dist[w] == unvisited) {
                        dist[w] = next;
                        local.distance_sum += next;
                        queue[tail++] = w;
                    }
            }
            local.diameter = std::max<std::size_t>(local.diameter, dist[queue[tail - 1]]);
        }
        partial[worker] = local;
    });

    DistanceSummary total;
    for (const auto& p : partial) {
        total.distance_sum += p.distance_sum;
        total.diameter = std::max(total.diameter, p.diameter);
    }
    return total;
}

double average_path_length(const DataNetwork& network, unsigned threads) {
    if (network.node_count() < 2) throw GraphError("average path length needs at least two nodes");
    const auto summary = distance_summary(network, threads);
    const double n = static_cast<double>(network.node_count());
    return static_cast<double>(summary.distance_sum) / (n * (n - 1.0));
}

std::size_t diameter(const DataNetwork& network, unsigned threads) {
    return distance_summary(network, threads).diameter;
}

MetricsReport full_report(const DataNetwork& network, unsigned threads) {
    if (network.node_count() < 2) throw GraphError("metrics report needs a connected network with at least two nodes");
    const auto summary = distance_summary(network, threads);
    const double n = static_cast<double>(network.node_count());

    MetricsReport report;
    report.n_nodes = network.node_count();
    report.n_edges = network.edge_count();
    report.average_degree = average_degree(network);
    report.density = density(network);
    report.average_clustering = average_clustering(network);
    report.assortativity = assortativity(network);
    report.average_path_length = static_cast<double>(summary.distance_sum) / (n * (n - 1.0));
    report.diameter = summary.diameter;
    return report;
}

}  // namespace varnet
