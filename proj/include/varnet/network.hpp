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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "varnet/error.hpp"

namespace varnet {

class Catalog;

using NodeIndex = std::uint32_t;

/// An undirected edge between two node indices with the number of shared
/// variables. Stored with u < v.
struct Edge {
    NodeIndex u = 0;
    NodeIndex v = 0;
    std::uint32_t overlap = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph of datasets.
///
/// Nodes are kept sorted by id, so node index order and id order agree.
/// Neighbor lists are sorted and duplicate-free; every stored edge has
/// overlap >= 1. Instances are immutable once built.
class DataNetwork {
public:
    DataNetwork() = default;

    /// Builds a network from ids and an edge list given in terms of
    /// positions in `ids`. Ids are re-sorted; edges are remapped. Throws
    /// InvalidArgument on duplicate or empty ids, self-loops, out-of-range
    /// endpoints, repeated edges or zero overlap.
    DataNetwork(std::vector<std::string> ids, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return ids_.empty(); }

    const std::string& id(NodeIndex v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    std::optional<NodeIndex> find(std::string_view id) const;

    std::size_t degree(NodeIndex v) const { return adjacency_[v].size(); }
    std::span<const NodeIndex> neighbors(NodeIndex v) const { return adjacency_[v]; }
    /// Overlap counts parallel to neighbors(v).
    std::span<const std::uint32_t> overlaps(NodeIndex v) const { return overlap_[v]; }
    bool has_edge(NodeIndex u, NodeIndex v) const;

    /// All edges once, u < v, sorted.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `nodes` (any order, no duplicates).
    DataNetwork induced(std::span<const NodeIndex> nodes) const;

    friend bool operator==(const DataNetwork&, const DataNetwork&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<NodeIndex>> adjacency_;
    std::vector<std::vector<std::uint32_t>> overlap_;
    std::size_t edge_count_ = 0;
};

struct BuildOptions {
    std::uint32_t min_overlap = 1;
    /// Labels held by more than this many datasets trigger a warning.
    std::size_t hub_warn_threshold = 2000;
    /// Receives warnings; when empty they go to standard error.
    std::function<void(const std::string&)> warn;
};

/// Links every pair of datasets sharing at least `min_overlap` variables.
/// Pairs are enumerated from the catalog's inverted index, one visit per
/// (label, pair); isolated datasets are kept as nodes.
DataNetwork build_network(const Catalog& catalog, const BuildOptions& options = {});

/// Connected components, largest first; equal sizes ordered by the smallest
/// member id. Members of each component are sorted.
struct ComponentDecomposition {
    std::vector<std::vector<NodeIndex>> components;
    std::vector<std::size_t> component_of;
};

ComponentDecomposition components(const DataNetwork& network);

/// Induced subgraph on the largest component. Throws GraphError when the
/// network is empty.
DataNetwork largest_component(const DataNetwork& network);

/// Edge list as CSV `src,dst,overlap`, src < dst by id, rows sorted.
std::string to_edge_list_csv(const DataNetwork& network);

}  // namespace varnet
