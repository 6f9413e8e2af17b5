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

#include "varnet/network.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <queue>

#include "varnet/error.hpp"
#include "varnet/ingest.hpp"

namespace varnet {

DataNetwork::DataNetwork(std::vector<std::string> ids, std::vector<Edge> edges) {
    const std::size_t n = ids.size();
    std::vector<NodeIndex> order(n);
    std::iota(order.begin(), order.end(), NodeIndex{0});
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) { return ids[a] < ids[b]; });

    std::vector<NodeIndex> rank(n);
    ids_.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank[order[r]] = static_cast<NodeIndex>(r);
        if (ids[order[r]].empty()) throw InvalidArgument("node id must be nonempty");
        if (r > 0 && ids_.back() == ids[order[r]]) throw InvalidArgument("duplicate node id '" + ids_.back() + "'");
        ids_.push_back(std::move(ids[order[r]]));
    }

    std::vector<std::vector<std::pair<NodeIndex, std::uint32_t>>> lists(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) throw InvalidArgument("edge endpoint out of range");
        if (e.u == e.v) throw InvalidArgument("self-loop on node '" + ids_[rank[e.u]] + "'");
        if (e.overlap == 0) throw InvalidArgument("edge overlap must be >= 1");
        lists[rank[e.u]].emplace_back(rank[e.v], e.overlap);
        lists[rank[e.v]].emplace_back(rank[e.u], e.overlap);
    }

    adjacency_.resize(n);
    overlap_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = lists[v];
        std::sort(list.begin(), list.end());
        for (std::size_t i = 1; i < list.size(); ++i)
            if (list[i].first == list[i - 1].first)
                throw InvalidArgument("repeated edge between '" + ids_[v] + "' and '" + ids_[list[i].first] + "'");
        adjacency_[v].reserve(list.size());
        overlap_[v].reserve(list.size());
        for (const auto& [w, o] : list) {
            adjacency_[v].push_back(w);
            overlap_[v].push_back(o);
        }
    }
    edge_count_ = edges.size();
}

std::optional<NodeIndex> DataNetwork::find(std::string_view id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<NodeIndex>(it - ids_.begin());
}

bool DataNetwork::has_edge(NodeIndex u, NodeIndex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> DataNetwork::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeIndex u = 0; u < adjacency_.size(); ++u)
        for (std::size_t i = 0; i < adjacency_[u].size(); ++i)
            if (adjacency_[u][i] > u) out.push_back({u, adjacency_[u][i], overlap_[u][i]});
    return out;
}

DataNetwork DataNetwork::induced(std::span<const NodeIndex> nodes) const {
    constexpr NodeIndex absent = static_cast<NodeIndex>(-1);
    std::vector<NodeIndex> local(node_count(), absent);
    std::vector<std::string> ids;
    ids.reserve(nodes.size());
    for (NodeIndex v : nodes) {
        if (v >= node_count()) throw InvalidArgument("node index out of range");
        if (local[v] != absent) throw InvalidArgument("duplicate node in induced subgraph request");
        local[v] = static_cast<NodeIndex>(ids.size());
        ids.push_back(ids_[v]);
    }
    std::vector<Edge> edges;
    for (NodeIndex v : nodes)
        for (std::size_t i = 0; i < adjacency_[v].size(); ++i) {
            const NodeIndex w = adjacency_[v][i];
            if (w > v && local[w] != absent) edges.push_back({local[v], local[w], overlap_[v][i]});
        }
    return DataNetwork(std::move(ids), std::move(edges));
}

DataNetwork build_network(const Catalog& catalog, const BuildOptions& options) {
    if (options.min_overlap < 1) throw InvalidArgument("min_overlap must be >= 1");
    const auto& records = catalog.records();
    const std::size_t n = records.size();

    // Node index = rank of the record id.
    std::vector<NodeIndex> node_of(n);
    {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return records[a].id < records[b].id; });
        for (std::size_t r = 0; r < n; ++r) node_of[order[r]] = static_cast<NodeIndex>(r);
    }

    // Postings in node-index order, and the postings each node belongs to.
    std::vector<std::vector<NodeIndex>> postings;
    postings.reserve(catalog.index().size());
    std::vector<std::vector<std::uint32_t>> labels_of(n);
    for (const auto& [label, positions] : catalog.index()) {
        if (positions.size() > options.hub_warn_threshold) {
            const std::string msg = "variable '" + label + "' is held by " + std::to_string(positions.size()) +
                                    " datasets and contributes " +
                                    std::to_string(positions.size() * (positions.size() - 1) / 2) + " pairs";
            if (options.warn) options.warn(msg);
            else std::cerr << "warning: " << msg << '\n';
        }
        if (positions.size() < 2) continue;
        const auto label_index = static_cast<std::uint32_t>(postings.size());
        auto& posting = postings.emplace_back();
        posting.reserve(positions.size());
        for (std::size_t pos : positions) {
            posting.push_back(node_of[pos]);
            labels_of[node_of[pos]].push_back(label_index);
        }
        std::sort(posting.begin(), posting.end());
    }

    std::vector<std::string> ids(n);
    for (std::size_t pos = 0; pos < n; ++pos) ids[node_of[pos]] = records[pos].id;

    // For each node, count shared labels with every higher-index partner.
    std::vector<std::uint32_t> shared(n, 0);
    std::vector<NodeIndex> touched;
    std::vector<Edge> edges;
    for (NodeIndex v = 0; v < n; ++v) {
        for (std::uint32_t label : labels_of[v]) {
            const auto& posting = postings[label];
            auto it = std::upper_bound(posting.begin(), posting.end(), v);
            for (; it != posting.end(); ++it) {
                if (shared[*it]++ == 0) touched.push_back(*it);
            }
        }
        for (NodeIndex w : touched) {
            if (shared[w] >= options.min_overlap) edges.push_back({v, w, shared[w]});
            shared[w] = 0;
        }
        touched.clear();
    }
    return DataNetwork(std::move(ids), std::move(edges));
}

ComponentDecomposition components(const DataNetwork& network) {
    const std::size_t n = network.node_count();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::vector<std::vector<NodeIndex>> found;
    std::queue<NodeIndex> frontier;
    for (NodeIndex s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        const std::size_t c = found.size();
        auto& members = found.emplace_back();
        label[s] = c;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeIndex v = frontier.front();
            frontier.pop();
            members.push_back(v);
            for (NodeIndex w : network.neighbors(v))
                if (label[w] == unset) {
                    label[w] = c;
                    frontier.push(w);
                }
        }
        std::sort(members.begin(), members.end());
    }
    // Index order is id order, so front() is the smallest member id.
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    ComponentDecomposition out;
    out.component_of.assign(n, 0);
    for (std::size_t c = 0; c < found.size(); ++c)
        for (NodeIndex v : found[c]) out.component_of[v] = c;
    out.components = std::move(found);
    return out;
}

DataNetwork largest_component(const DataNetwork& network) {
    if (network.empty()) throw GraphError("largest component of an empty network");
    const auto decomposition = components(network);
    return network.induced(decomposition.components.front());
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

}  // namespace

std::string to_edge_list_csv(const DataNetwork& network) {
    std::string out = "src,dst,overlap\n";
    for (const Edge& e : network.edges()) {
        out += csv_field(network.id(e.u));
        out += ',';
        out += csv_field(network.id(e.v));
        out += ',';
        out += std::to_string(e.overlap);
        out += '\n';
    }
    return out;
}

}  // namespace varnet
