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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "varnet/distfit.hpp"
#include "varnet/metrics.hpp"
#include "varnet/network.hpp"
#include "varnet/percolate.hpp"
#include "varnet/synthgen.hpp"

using namespace varnet;
namespace fs = std::filesystem;

namespace {

/// Thrown by check() with the first mismatch.
struct Mismatch {
    std::string what;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw Mismatch{what};
}

void check_near(double actual, double expected, double tol, const std::string& what) {
    check(std::abs(actual - expected) <= tol, fmt::format("{}: got {}, expected {} (tol {})", what, actual, expected, tol));
}

struct Criterion {
    int number;
    std::string title;
    double time_limit_s;  // <= 0: none
    std::function<std::string()> body;  // returns a short summary
};

// 1 ------------------------------------------------------------------------

std::string small_graph_suite() {
    struct Case {
        std::string name;
        DataNetwork graph;
        double k, rho, c;
        std::optional<double> r;
        double d;
        std::size_t dmax;
    };
    const std::vector<Case> cases{
        {"complete(5)", gen::generate_graph(gen::Complete{5}), 4, 1, 1, std::nullopt, 1, 1},
        {"star(3)", gen::generate_graph(gen::Star{3}), 1.5, 0.5, 0, -1.0, 1.5, 2},
        {"path(3)", gen::generate_graph(gen::Path{3}), 4.0 / 3, 2.0 / 3, 0, -1.0, 4.0 / 3, 2},
        {"triangle+pendant", oracle::triangle_with_pendant(), 2, 2.0 / 3, 7.0 / 12, -5.0 / 7, 4.0 / 3, 2},
        {"K4-minus-edge", oracle::k4_minus_edge(), 2.5, 5.0 / 6, 5.0 / 6, -2.0 / 3, 7.0 / 6, 2},
    };
    for (const auto& c : cases) {
        const MetricsReport r = full_report(c.graph);
        check_near(r.average_degree, c.k, 1e-12, c.name + " <k>");
        check_near(r.density, c.rho, 1e-12, c.name + " density");
        check_near(r.average_clustering, c.c, 1e-12, c.name + " <C>");
        check(r.assortativity.has_value() == c.r.has_value(), c.name + " assortativity definedness");
        if (c.r) check_near(*r.assortativity, *c.r, 1e-12, c.name + " r");
        check_near(r.average_path_length, c.d, 1e-12, c.name + " <d>");
        check(r.diameter == c.dmax, c.name + " d_max");
    }
    return fmt::format("{} graphs, 6 metrics each", cases.size());
}

// 2 ------------------------------------------------------------------------

std::string assortativity_oracle() {
    Rng rng(2024);
    std::size_t graphs = 0, undefined = 0, attempt = 0;
    double worst = 0.0;
    while (graphs < 100) {
        const std::size_t n = 2 + rng.below(49);
        const double p = 0.03 + 0.4 * rng.uniform01();
        const DataNetwork g = gen::generate_graph(gen::ErdosRenyi{n, p, derive_seed(7, {attempt++})});
        if (g.edge_count() == 0) continue;
        ++graphs;
        const auto expected = oracle::pearson_assortativity(g);
        const auto actual = assortativity(g);
        check(expected.has_value() == actual.has_value(), fmt::format("graph {}: definedness differs", graphs));
        if (!expected) {
            ++undefined;
            continue;
        }
        worst = std::max(worst, std::abs(*actual - *expected));
        check_near(*actual, *expected, 1e-12, fmt::format("graph {} (n={}, m={})", graphs, n, g.edge_count()));
    }
    return fmt::format("100 ER graphs, max |diff| {:.1e}, {} regular", worst, undefined);
}

// 3 ------------------------------------------------------------------------

std::string path_oracle() {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = 2 + rng.below(49);
        const DataNetwork g = oracle::random_graph(rng, n, 0.02 + 0.2 * rng.uniform01(), true);
        const auto fw = oracle::path_oracle(g);
        check(fw.connected, "oracle graph not connected");
        const double nn = static_cast<double>(n);
        const double expected = static_cast<double>(fw.distance_sum) / (nn * (nn - 1));
        check(average_path_length(g) == expected, fmt::format("graph {}: <d> differs", i));
        check(diameter(g) == static_cast<std::size_t>(fw.diameter), fmt::format("graph {}: d_max differs", i));
    }
    return "50 connected graphs, exact";
}

// 4 ------------------------------------------------------------------------

std::string construction_oracle() {
    Rng rng(4);
    std::size_t edges = 0;
    for (int i = 0; i < 200; ++i) {
        const Catalog catalog = oracle::random_catalog(rng, 12, 8, 20);
        for (std::uint32_t k : {1u, 2u}) {
            BuildOptions options;
            options.min_overlap = k;
            const DataNetwork g = build_network(catalog, options);
            const auto expected = oracle::brute_force_edges(catalog, k);
            check(oracle::edge_set(g) == expected, fmt::format("catalog {} min_overlap {}", i, k));
            check(g.node_count() == catalog.size(), fmt::format("catalog {}: node count", i));
            edges += expected.size();
        }
    }
    return fmt::format("200 catalogs x 2 thresholds, {} edges compared", edges);
}

// 5 ------------------------------------------------------------------------

std::string power_law_recovery() {
    for (double gamma : {2.3, 2.0, 1.7, 3.0}) {
        CcdfPoints points;
        for (int m = 1; m <= 50; ++m) points.push_back({double(m), std::pow(double(m), -(gamma - 1.0))});
        const PowerLawFit fit = fit_power_law(points);
        check_near(fit.gamma, gamma, 1e-9, fmt::format("exact gamma {}", gamma));
        check_near(fit.r_squared, 1.0, 1e-12, fmt::format("exact gamma {} R^2", gamma));
    }
    const gen::ZipfSampler sampler(2.0);
    Rng rng(11);
    std::vector<std::uint64_t> values(100'000);
    for (auto& v : values) v = sampler(rng);
    const auto points = ccdf(FrequencyDistribution::from_values(values, DistributionKind::variable_occurrence));
    const PowerLawFit fit = fit_power_law(points);
    check_near(fit.gamma, 2.0, 0.15, "Zipf sample gamma");
    return fmt::format("exact to 1e-9; Zipf(2.0) n=1e5 -> gamma {:.4f} (R^2 {:.4f}, window [{}, {}) of {})", fit.gamma,
                       fit.r_squared, fit.window.begin, fit.window.end, points.size());
}

// 6 ------------------------------------------------------------------------

std::string two_regime_recovery() {
    CcdfPoints points;
    const double knee = std::log10(50.0);
    for (int i = 0; i < 30; ++i) {
        const double lx = knee * i / 30.0;
        points.push_back({std::pow(10.0, lx), std::pow(10.0, -0.2 * lx)});
    }
    for (int j = 0; j < 30; ++j) {
        const double lx = knee + 0.05 * j;
        points.push_back({j == 0 ? 50.0 : std::pow(10.0, lx), std::pow(10.0, -0.2 * knee - 2.0 * (lx - knee))});
    }
    const TwoRegimeFit fit = fit_two_regime(points);
    check(fit.breakpoint == 50.0, fmt::format("breakpoint {}", fit.breakpoint));
    check_near(fit.head.slope, -0.2, 1e-9, "head slope");
    check_near(fit.tail.slope, -2.0, 1e-9, "tail slope");
    return fmt::format("breakpoint {}, slopes {:.12f} / {:.12f}", fit.breakpoint, fit.head.slope, fit.tail.slope);
}

// 7 ------------------------------------------------------------------------

void check_endpoints(const RobustnessCurve& c, const std::string& what) {
    check(c.mean_ratio.front() == 1.0, what + ": ratio at f = 0 is not 1");
    check(c.mean_ratio.back() == 0.0, what + ": ratio at f = 1 is not 0");
}

std::string percolation_checks() {
    const auto grid = make_f_grid(0.02);
    const DataNetwork k100 = gen::generate_graph(gen::Complete{100});
    const auto random = random_removal_curve(k100, grid, 10, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double expected = (100.0 - std::floor(100.0 * grid[i] + 1e-9)) / 100.0;
        check_near(random.mean_ratio[i], expected, 1e-12, fmt::format("K_100 at f = {}", grid[i]));
    }
    const DataNetwork star = gen::generate_graph(gen::Star{9});
    const auto star_curve = targeted_removal_curve(star, std::vector<double>{0.0, 0.1, 1.0});
    check(star_curve.mean_ratio[1] == 0.1, fmt::format("star(9) at f = 0.1: {}", star_curve.mean_ratio[1]));

    check_endpoints(random, "K_100 random");
    check_endpoints(targeted_removal_curve(k100, grid), "K_100 targeted");
    check_endpoints(star_curve, "star(9) targeted");
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        const DataNetwork g = oracle::random_graph(rng, 2 + rng.below(80), 0.05, true);
        check_endpoints(random_removal_curve(g, grid, 5, i), "random graph, random removal");
        check_endpoints(targeted_removal_curve(g, grid), "random graph, static targeted");
        check_endpoints(targeted_removal_curve(g, grid, TargetedMode::adaptive_degree),
                        "random graph, adaptive targeted");
    }
    return "K_100 curve exact, star(9) = 0.1, endpoints on 32 curves";
}

// 8 ------------------------------------------------------------------------

std::string hub_ordering() {
    const DataNetwork g = gen::generate_graph(gen::PrefAttach{1000, 2, 5});
    const auto grid = make_f_grid(0.02);
    const auto targeted = targeted_removal_curve(g, grid);
    const auto random = random_removal_curve(g, grid, 10, 5);
    std::size_t checked = 0;
    double min_gap = 1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.05 - 1e-12 || grid[i] > 0.5 + 1e-12) continue;
        ++checked;
        min_gap = std::min(min_gap, random.mean_ratio[i] - targeted.mean_ratio[i]);
        check(targeted.mean_ratio[i] <= random.mean_ratio[i],
              fmt::format("f = {}: targeted {} > random {}", grid[i], targeted.mean_ratio[i], random.mean_ratio[i]));
    }
    return fmt::format("{} grid points, smallest gap {:.4f}", checked, min_gap);
}

// 9 ------------------------------------------------------------------------

std::map<std::string, std::string> run_cli(const fs::path& dir, const std::vector<std::string>& extra) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string fixture = std::string(VARNET_TEST_DATA) + "/fixture_catalog.jsonl";
    for (const char* command : {"analyze", "robust"}) {
        std::vector<std::string> args{command, fixture, "-d", dir.string(), "--seed", "42", "--formats", "json,csv,svg"};
        args.insert(args.end(), extra.begin(), extra.end());
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        check(code == 0, fmt::format("{} exited {}: {}", command, code, err.str()));
    }
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        files[entry.path().filename().string()] = buffer.str();
    }
    fs::remove_all(dir);
    return files;
}

std::string determinism() {
    const fs::path base = fs::temp_directory_path() / fmt::format("varnet_acceptance_{}", std::chrono::steady_clock::now().time_since_epoch().count());
    const auto first = run_cli(base / "a", {});
    const auto second = run_cli(base / "b", {});
    const auto parallel = run_cli(base / "c", {"--threads", "4"});
    fs::remove_all(base);
    check(first.size() >= 13, fmt::format("only {} output files", first.size()));
    check(first == second, "two sequential invocations differ");
    check(first == parallel, "parallel and sequential outputs differ");
    return fmt::format("{} files byte-identical across 3 runs", first.size());
}

// 10 -----------------------------------------------------------------------

std::string cumulative_share_arithmetic() {
    std::vector<std::uint64_t> values;
    values.insert(values.end(), 875, 1);
    values.insert(values.end(), 80, 2);
    values.insert(values.end(), 45, 3);
    const auto dist = FrequencyDistribution::from_values(values, DistributionKind::variable_occurrence);
    check(cumulative_share(dist, 1) == 0.875, fmt::format("share(1) = {}", cumulative_share(dist, 1)));
    check(cumulative_share(dist, 2) == 0.955, fmt::format("share(2) = {}", cumulative_share(dist, 2)));
    return "0.875 and 0.955 exactly";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "analytic small-graph metrics", 1, small_graph_suite},
        {2, "assortativity vs Pearson oracle", 5, assortativity_oracle},
        {3, "path metrics vs Floyd-Warshall", 5, path_oracle},
        {4, "network construction vs brute force", 5, construction_oracle},
        {5, "power-law exponent recovery", 10, power_law_recovery},
        {6, "two-regime breakpoint recovery", 1, two_regime_recovery},
        {7, "percolation analytic checks", 5, percolation_checks},
        {8, "targeted below random on preferential attachment", 10, hub_ordering},
        {9, "byte-identical CLI outputs", 0, determinism},
        {10, "cumulative share arithmetic", 0, cumulative_share_arithmetic},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.body();
        } catch (const Mismatch& m) {
            ok = false;
            detail = m.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_s > 0 && seconds >= c.time_limit_s) {
            ok = false;
            detail += fmt::format("; over the {} s limit", c.time_limit_s);
        }
        failures += ok ? 0 : 1;
        std::cout << fmt::format("[{}] AC{:<2} {} ({:.3f} s): {}\n", ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                                 detail);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
