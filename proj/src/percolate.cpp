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

#include "varnet/percolate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "varnet/error.hpp"
#include "varnet/parallel.hpp"
#include "varnet/random.hpp"

namespace varnet {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), NodeIndex{0});
    }

    NodeIndex find(NodeIndex v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    std::size_t unite(NodeIndex a, NodeIndex b) {
        a = find(a);
        b = find(b);
        if (a == b) return size_[a];
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return size_[a];
    }

private:
    std::vector<NodeIndex> parent_;
    std::vector<std::size_t> size_;
};

void require_percolation_input(const DataNetwork& network) {
    if (network.node_count() < 2) throw GraphError("robustness curves need at least two nodes");
    if (largest_component_size(network) != network.node_count())
        throw GraphError("robustness curves need a connected network; extract the largest component first");
}

// lcc[i] = largest component size once order[0..i) has been removed.
std::vector<std::size_t> lcc_after_prefix_removal(const DataNetwork& network, std::span<const NodeIndex> order) {
    const std::size_t n = network.node_count();
    std::vector<std::size_t> lcc(n + 1, 0);
    std::vector<char> present(n, 0);
    DisjointSets sets(n);
    std::size_t largest = 0;
    for (std::size_t i = n; i-- > 0;) {
        const NodeIndex v = order[i];
        present[v] = 1;
        largest = std::max<std::size_t>(largest, 1);
        for (NodeIndex w : network.neighbors(v))
            if (present[w]) largest = std::max(largest, sets.unite(v, w));
        lcc[i] = largest;
    }
    return lcc;
}

}  // namespace

std::vector<double> make_f_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw InvalidArgument("f grid step must lie in (0, 1]");
    const double steps = std::round(1.0 / step);
    if (std::abs(steps * step - 1.0) > 1e-9) throw InvalidArgument("f grid step must divide 1");
    const auto count = static_cast<std::size_t>(steps);
    std::vector<double> grid(count + 1);
    for (std::size_t i = 0; i <= count; ++i) grid[i] = static_cast<double>(i) / steps;
    return grid;
}

void check_f_grid(std::span<const double> f_grid) {
    if (f_grid.size() < 2 || f_grid.front() != 0.0 || f_grid.back() != 1.0)
        throw InvalidArgument("f grid must start at 0 and end at 1");
    for (std::size_t i = 1; i < f_grid.size(); ++i)
        if (!(f_grid[i] > f_grid[i - 1])) throw InvalidArgument("f grid must be strictly ascending");
}

std::size_t removal_count(double f, std::size_t n) {
    if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("removal fraction must lie in [0, 1]");
    const double exact = f * static_cast<double>(n);
    const auto count = static_cast<std::size_t>(std::floor(exact * (1.0 + 1e-12)));
    return std::min(count, n);
}

std::size_t largest_component_size(const DataNetwork& network) {
    const std::vector<char> none(network.node_count(), 0);
    return largest_component_size(network, none);
}

std::size_t largest_component_size(const DataNetwork& network, std::span<const char> removed) {
    const std::size_t n = network.node_count();
    if (removed.size() != n) throw InvalidArgument("removal mask size differs from the node count");
    std::vector<char> seen(removed.begin(), removed.end());
    std::vector<NodeIndex> stack;
    std::size_t largest = 0;
    for (NodeIndex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
        std::size_t size = 0;
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            ++size;
            for (NodeIndex w : network.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        largest = std::max(largest, size);
    }
    return largest;
}

RobustnessCurve random_removal_curve(const DataNetwork& network, std::span<const double> f_grid,
                                     std::size_t n_runs, std::uint64_t seed, unsigned threads) {
    check_f_grid(f_grid);
    if (n_runs < 1) throw InvalidArgument("n_runs must be at least 1");
    require_percolation_input(network);

    const std::size_t n = network.node_count();
    const std::size_t cells = n_runs * f_grid.size();
    const double base = static_cast<double>(n);  // S(0) of a connected network
    std::vector<double> ratio(cells);

    parallel_chunks(cells, threads, [&](std::size_t begin, std::size_t end, unsigned) {
        std::vector<NodeIndex> pool(n);
        std::vector<char> removed(n);
        for (std::size_t cell = begin; cell < end; ++cell) {
            const std::size_t run = cell / f_grid.size();
            const std::size_t fi = cell % f_grid.size();
            const std::size_t r = removal_count(f_grid[fi], n);
            Rng rng(derive_seed(seed, {run, fi}));
            std::iota(pool.begin(), pool.end(), NodeIndex{0});
            std::fill(removed.begin(), removed.end(), 0);
            for (std::size_t i = 0; i < r; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
                std::swap(pool[i], pool[j]);
                removed[pool[i]] = 1;
            }
            ratio[cell] = static_cast<double>(largest_component_size(network, removed)) / base;
        }
    });

    RobustnessCurve curve;
    curve.strategy = "random";
    curve.n_runs = n_runs;
    curve.f.assign(f_grid.begin(), f_grid.end());
    for (std::size_t fi = 0; fi < f_grid.size(); ++fi) {
        double sum = 0.0;
        for (std::size_t run = 0; run < n_runs; ++run) sum += ratio[run * f_grid.size() + fi];
        const double mean = sum / static_cast<double>(n_runs);
        double var = 0.0;
        for (std::size_t run = 0; run < n_runs; ++run) {
            const double d = ratio[run * f_grid.size() + fi] - mean;
            var += d * d;
        }
        curve.mean_ratio.push_back(mean);
        curve.std_ratio.push_back(std::sqrt(var / static_cast<double>(n_runs)));
    }
    return curve;
}

std::vector<NodeIndex> targeted_removal_order(const DataNetwork& network, TargetedMode mode) {
    const std::size_t n = network.node_count();
    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    if (mode == TargetedMode::static_degree) {
        std::stable_sort(order.begin(), order.end(),
                         [&](NodeIndex a, NodeIndex b) { return network.degree(a) > network.degree(b); });
        return order;
    }

    std::vector<std::size_t> degree(n);
    for (NodeIndex v = 0; v < n; ++v) degree[v] = network.degree(v);
    auto by_priority = [](const std::pair<std::size_t, NodeIndex>& a, const std::pair<std::size_t, NodeIndex>& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    std::set<std::pair<std::size_t, NodeIndex>, decltype(by_priority)> queue(by_priority);
    for (NodeIndex v = 0; v < n; ++v) queue.emplace(degree[v], v);
    std::vector<char> removed(n, 0);
    order.clear();
    while (!queue.empty()) {
        const NodeIndex v = queue.begin()->second;
        queue.erase(queue.begin());
        removed[v] = 1;
        order.push_back(v);
        for (NodeIndex w : network.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({degree[w], w});
            queue.emplace(--degree[w], w);
        }
    }
    return order;
}

RobustnessCurve targeted_removal_curve(const DataNetwork& network, std::span<const double> f_grid,
                                       TargetedMode mode) {
    check_f_grid(f_grid);
    require_percolation_input(network);
    const std::size_t n = network.node_count();
    const auto order = targeted_removal_order(network, mode);
    const auto lcc = lcc_after_prefix_removal(network, order);

    RobustnessCurve curve;
    curve.strategy = mode == TargetedMode::static_degree ? "targeted_static" : "targeted_adaptive";
    curve.n_runs = 1;
    curve.f.assign(f_grid.begin(), f_grid.end());
    for (double f : f_grid) {
        curve.mean_ratio.push_back(static_cast<double>(lcc[removal_count(f, n)]) / static_cast<double>(n));
        curve.std_ratio.push_back(0.0);
    }
    return curve;
}

}  // namespace varnet
