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
#include <string>
#include <variant>
#include <vector>

#include "varnet/error.hpp"
#include "varnet/ingest.hpp"
#include "varnet/network.hpp"
#include "varnet/random.hpp"

namespace varnet::gen {

struct Complete { std::size_t n; };
struct Star { std::size_t leaves; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct ErdosRenyi { std::size_t n; double p; std::uint64_t seed; };
/// Starts from a clique of m_new + 1 nodes; every later node links to
/// m_new distinct existing nodes drawn proportionally to degree. Yields
/// m_new (n - m_new) + m_new (m_new - 1) / 2 edges.
struct PrefAttach { std::size_t n; std::size_t m_new; std::uint64_t seed; };
/// n_draws label occurrences; each label's occurrence count is drawn from
/// p(m) ~ m^-gamma on 1..10^6 and its occurrences are dealt round-robin to
/// consecutive datasets from a random offset.
struct ZipfCatalog { std::size_t n_datasets; std::size_t n_draws; double gamma; std::uint64_t seed; };

using GenSpec = std::variant<Complete, Star, Path, Cycle, ErdosRenyi, PrefAttach, ZipfCatalog>;

/// Throws InvalidArgument when parameters are out of range.
void validate(const GenSpec& spec);

/// Graph kinds only. Node ids are "n" + zero-padded index (width >= 3).
DataNetwork generate_graph(const GenSpec& spec);

/// ZipfCatalog only. Datasets that receive no label are omitted.
Catalog generate_catalog(const GenSpec& spec);

/// Encodes a graph as a catalog: each edge becomes a label shared by its
/// two endpoints, isolated nodes get a private label. build_network on the
/// result reproduces the graph with overlap 1 on every edge.
Catalog graph_to_catalog(const DataNetwork& network);

/// Inverse-CDF sampler for p(m) ~ m^-gamma on 1..support.
class ZipfSampler {
public:
    static constexpr std::size_t default_support = 1'000'000;

    explicit ZipfSampler(double gamma, std::size_t support = default_support);

    std::uint64_t operator()(Rng& rng) const;
    double gamma() const noexcept { return gamma_; }

private:
    double gamma_;
    std::vector<double> cdf_;
};

}  // namespace varnet::gen
