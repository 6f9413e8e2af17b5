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

#include "varnet/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "varnet/error.hpp"

namespace varnet::gen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string padded(char prefix, std::size_t i, std::size_t count) {
    std::size_t width = 3;
    for (std::size_t x = count > 0 ? count - 1 : 0; x >= 1000; x /= 10) ++width;
    std::string digits = std::to_string(i);
    return prefix + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

std::vector<std::string> node_ids(std::size_t n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = padded('n', i, n);
    return ids;
}

DataNetwork make(std::size_t n, std::vector<Edge> edges) { return DataNetwork(node_ids(n), std::move(edges)); }

NodeIndex idx(std::size_t i) { return static_cast<NodeIndex>(i); }

DataNetwork complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({idx(i), idx(j), 1});
    return make(n, std::move(edges));
}

DataNetwork pref_attach(const PrefAttach& spec) {
    const std::size_t m = spec.m_new;
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    std::vector<NodeIndex> endpoints;  // each node repeated degree times
    for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
            edges.push_back({idx(i), idx(j), 1});
            endpoints.push_back(idx(i));
            endpoints.push_back(idx(j));
        }
    std::vector<NodeIndex> targets;
    for (std::size_t v = m + 1; v < spec.n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const NodeIndex t = endpoints[rng.below(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeIndex t : targets) {
            edges.push_back({t, idx(v), 1});
            endpoints.push_back(t);
            endpoints.push_back(idx(v));
        }
    }
    return make(spec.n, std::move(edges));
}

}  // namespace

ZipfSampler::ZipfSampler(double gamma, std::size_t support) : gamma_(gamma), cdf_(support) {
    if (!(gamma > 1.0)) throw InvalidArgument("zipf exponent must exceed 1");
    if (support < 1) throw InvalidArgument("zipf support must be nonempty");
    // Accumulate from the small tail terms upward, then normalize.
    std::vector<double> weight(support);
    for (std::size_t m = 1; m <= support; ++m) weight[m - 1] = std::pow(static_cast<double>(m), -gamma);
    long double total = 0;
    for (std::size_t i = support; i-- > 0;) total += weight[i];
    long double running = 0;
    for (std::size_t i = 0; i < support; ++i) {
        running += weight[i];
        cdf_[i] = static_cast<double>(running / total);
    }
    cdf_.back() = 1.0;
}

std::uint64_t ZipfSampler::operator()(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::uint64_t>(it - cdf_.begin()) + 1;
}

void validate(const GenSpec& spec) {
    std::visit(overloaded{
                   [](const Complete& s) { if (s.n < 1) throw InvalidArgument("complete: n must be >= 1"); },
                   [](const Star& s) { if (s.leaves < 1) throw InvalidArgument("star: leaves must be >= 1"); },
                   [](const Path& s) { if (s.n < 1) throw InvalidArgument("path: n must be >= 1"); },
                   [](const Cycle& s) { if (s.n < 3) throw InvalidArgument("cycle: n must be >= 3"); },
                   [](const ErdosRenyi& s) {
                       if (s.n < 1) throw InvalidArgument("er: n must be >= 1");
                       if (!(s.p >= 0.0 && s.p <= 1.0)) throw InvalidArgument("er: p must lie in [0, 1]");
                   },
                   [](const PrefAttach& s) {
                       if (s.m_new < 1) throw InvalidArgument("pref_attach: m_new must be >= 1");
                       if (s.n < s.m_new + 1) throw InvalidArgument("pref_attach: n must be >= m_new + 1");
                   },
                   [](const ZipfCatalog& s) {
                       if (s.n_datasets < 1) throw InvalidArgument("zipf: n_datasets must be >= 1");
                       if (s.n_draws < 1) throw InvalidArgument("zipf: n_draws must be >= 1");
                       if (!(s.gamma > 1.0)) throw InvalidArgument("zipf: gamma must exceed 1");
                   },
               },
               spec);
}

DataNetwork generate_graph(const GenSpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const Complete& s) { return complete(s.n); },
            [](const Star& s) {
                std::vector<Edge> edges;
                for (std::size_t i = 1; i <= s.leaves; ++i) edges.push_back({0, idx(i), 1});
                return make(s.leaves + 1, std::move(edges));
            },
            [](const Path& s) {
                std::vector<Edge> edges;
                for (std::size_t i = 1; i < s.n; ++i) edges.push_back({idx(i - 1), idx(i), 1});
                return make(s.n, std::move(edges));
            },
            [](const Cycle& s) {
                std::vector<Edge> edges;
                for (std::size_t i = 1; i < s.n; ++i) edges.push_back({idx(i - 1), idx(i), 1});
                edges.push_back({0, idx(s.n - 1), 1});
                return make(s.n, std::move(edges));
            },
            [](const ErdosRenyi& s) {
                Rng rng(s.seed);
                std::vector<Edge> edges;
                for (std::size_t i = 0; i < s.n; ++i)
                    for (std::size_t j = i + 1; j < s.n; ++j)
                        if (rng.uniform01() < s.p) edges.push_back({idx(i), idx(j), 1});
                return make(s.n, std::move(edges));
            },
            [](const PrefAttach& s) { return pref_attach(s); },
            [](const ZipfCatalog&) -> DataNetwork {
                throw InvalidArgument("zipf_catalog generates a catalog, not a graph");
            },
        },
        spec);
}

Catalog generate_catalog(const GenSpec& spec) {
    validate(spec);
    const auto* zipf = std::get_if<ZipfCatalog>(&spec);
    if (zipf == nullptr) throw InvalidArgument("only zipf_catalog generates a catalog");

    const ZipfSampler sampler(zipf->gamma);
    Rng rng(zipf->seed);
    std::vector<std::vector<std::string>> labels(zipf->n_datasets);
    std::size_t left = zipf->n_draws;
    std::size_t cursor = 0;
    for (std::size_t label = 0; left > 0; ++label) {
        const std::size_t m = std::min<std::size_t>(sampler(rng), left);
        const std::size_t start = (cursor + rng.below(zipf->n_datasets)) % zipf->n_datasets;
        const std::string name = padded('v', label, 1'000'000);
        for (std::size_t j = 0; j < m; ++j) labels[(start + j) % zipf->n_datasets].push_back(name);
        cursor = (start + m) % zipf->n_datasets;
        left -= m;
    }

    std::vector<DatasetRecord> records;
    for (std::size_t d = 0; d < zipf->n_datasets; ++d) {
        if (labels[d].empty()) continue;
        records.push_back({padded('d', d, zipf->n_datasets), std::nullopt, std::move(labels[d])});
    }
    return Catalog(std::move(records));
}

Catalog graph_to_catalog(const DataNetwork& network) {
    std::vector<DatasetRecord> records(network.node_count());
    for (NodeIndex v = 0; v < network.node_count(); ++v) records[v].id = network.id(v);
    for (const Edge& e : network.edges()) {
        const std::string label = network.id(e.u) + "~" + network.id(e.v);
        records[e.u].variables.push_back(label);
        records[e.v].variables.push_back(label);
    }
    for (auto& r : records)
        if (r.variables.empty()) r.variables.push_back(r.id);
    return Catalog(std::move(records));
}

}  // namespace varnet::gen
