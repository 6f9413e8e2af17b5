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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <type_traits>
#include <utility>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "varnet/distfit.hpp"
#include "varnet/error.hpp"
#include "varnet/metrics.hpp"
#include "varnet/network.hpp"
#include "varnet/random.hpp"
#include "varnet/report.hpp"
#include "varnet/svg_plot.hpp"
#include "varnet/synthgen.hpp"

namespace varnet::cli {

namespace {

using Json = nlohmann::ordered_json;
using OutputFiles = std::vector<std::pair<std::string, std::string>>;

constexpr const char* blue = "#1f77b4";
constexpr const char* orange = "#ff7f0e";
constexpr const char* green = "#2ca02c";

bool wants(const RunConfig& cfg, const char* format) { return cfg.output_formats.count(format) > 0; }

void write_outputs(const RunConfig& cfg, const OutputFiles& files, std::ostream& log) {
    std::filesystem::create_directories(cfg.output_dir);
    for (const auto& [name, content] : files) {
        const auto path = (std::filesystem::path(cfg.output_dir) / name).string();
        write_file_atomic(path, content);
        log << "wrote " << path << '\n';
    }
}

Catalog load_catalog(const RunConfig& cfg) {
    ParseOptions options;
    options.normalize = cfg.normalize;
    Catalog catalog = read_catalog(cfg.input, cfg.format.value_or(format_from_path(cfg.input)), options);
    if (cfg.sample_n) catalog = sample(catalog, *cfg.sample_n, derive_seed(cfg.seed, "sample"));
    return catalog;
}

DataNetwork load_component(const RunConfig& cfg, const Catalog& catalog, std::ostream& err) {
    BuildOptions options;
    options.min_overlap = cfg.min_overlap;
    options.hub_warn_threshold = cfg.hub_warn_threshold;
    options.warn = [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };
    const DataNetwork network = build_network(catalog, options);
    if (network.empty()) throw GraphError("the catalog is empty; there is no network to analyze");
    DataNetwork component = largest_component(network);
    if (component.node_count() < 2)
        throw GraphError("largest component has 1 node: no two datasets share " +
                         std::string(cfg.min_overlap == 1 ? "a variable" : "enough variables"));
    return component;
}

Json fit_section(DistributionKind kind, const CcdfPoints& points, const RunConfig& cfg, bool two_regime,
                 std::optional<PowerLawFit>& fit_out, std::optional<TwoRegimeFit>& two_out) {
    Json j;
    j["kind"] = std::string(to_string(kind));
    j["points"] = points.size();
    j["r2_min"] = cfg.r2_min;
    j["min_window"] = cfg.min_window;
    try {
        fit_out = fit_power_law(points, {cfg.r2_min, cfg.min_window});
        j["power_law"] = to_json(*fit_out);
    } catch (const FitError& e) {
        j["power_law"] = nullptr;
        j["power_law_error"] = e.what();
        j["best_window_begin"] = e.best_window().begin;
        j["best_window_end"] = e.best_window().end;
        j["best_r_squared"] = e.best_r_squared();
    } catch (const InvalidArgument& e) {
        j["power_law"] = nullptr;
        j["power_law_error"] = e.what();
    }
    if (two_regime) {
        j["min_segment"] = cfg.min_segment;
        try {
            two_out = fit_two_regime(points, cfg.min_segment);
            j["two_regime"] = to_json(*two_out);
        } catch (const InvalidArgument& e) {
            j["two_regime"] = nullptr;
            j["two_regime_error"] = e.what();
        }
    }
    return j;
}

svg::Series points_series(const CcdfPoints& points, std::string label) {
    svg::Series s;
    s.label = std::move(label);
    for (const auto& p : points) s.points.emplace_back(p.value, p.ccdf);
    return s;
}

svg::Series fit_series(const CcdfPoints& points, const PowerLawFit& fit, std::string label, const char* color) {
    svg::Series s;
    s.label = std::move(label);
    s.color = color;
    s.markers = false;
    s.line = true;
    for (std::size_t i = fit.window.begin; i < fit.window.end; ++i) {
        const double m = points[i].value;
        s.points.emplace_back(m, std::pow(10.0, fit.intercept + fit.slope * std::log10(m)));
    }
    return s;
}

std::string ccdf_svg(const std::string& title, const std::string& x_label, const CcdfPoints& points,
                     const std::optional<PowerLawFit>& fit, const std::optional<TwoRegimeFit>& two) {
    std::vector<svg::Series> series{points_series(points, "data")};
    if (fit) series.push_back(fit_series(points, *fit, fmt::format("fit, gamma = {:.2f}", fit->gamma), orange));
    if (two) {
        series.push_back(fit_series(points, two->head, "head regime", green));
        series.push_back(fit_series(points, two->tail, fmt::format("tail from {}", two->breakpoint), "#d62728"));
    }
    svg::Plot plot;
    plot.title = title;
    plot.x = {x_label, svg::Scale::log10, std::nullopt};
    plot.y = {"ccdf", svg::Scale::log10, std::nullopt};
    return svg::render(plot, series);
}

int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Catalog catalog = load_catalog(cfg);
    const std::string json = to_json(catalog_stats(catalog)).dump(2) + "\n";
    write_outputs(cfg, {{"stats.json", json}}, err);
    out << json;
    return ok;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Catalog catalog = load_catalog(cfg);
    const DataNetwork component = load_component(cfg, catalog, err);
    const MetricsReport report = full_report(component, cfg.threads);

    const CcdfPoints var_freq = ccdf(variable_occurrence_distribution(catalog));
    const CcdfPoints vars_per_data = ccdf(variables_per_dataset_distribution(catalog));
    const CcdfPoints degree = ccdf(degree_distribution(component));
    const auto knn = degree_correlation(component);

    std::optional<PowerLawFit> var_fit, vpd_fit, degree_fit;
    std::optional<TwoRegimeFit> unused, degree_two;
    const Json var_json = fit_section(DistributionKind::variable_occurrence, var_freq, cfg, false, var_fit, unused);
    const Json vpd_json = fit_section(DistributionKind::variables_per_dataset, vars_per_data, cfg, false, vpd_fit, unused);
    const Json degree_json = fit_section(DistributionKind::degree, degree, cfg, true, degree_fit, degree_two);

    const std::string metrics = to_json(report).dump(2) + "\n";
    OutputFiles files;
    if (wants(cfg, "json")) {
        files.emplace_back("metrics.json", metrics);
        files.emplace_back("var_freq_fit.json", var_json.dump(2) + "\n");
        files.emplace_back("vars_per_data_fit.json", vpd_json.dump(2) + "\n");
        files.emplace_back("degree_fit.json", degree_json.dump(2) + "\n");
    }
    if (wants(cfg, "csv")) {
        files.emplace_back("var_freq_ccdf.csv", ccdf_csv(var_freq));
        files.emplace_back("vars_per_data_ccdf.csv", ccdf_csv(vars_per_data));
        files.emplace_back("degree_ccdf.csv", ccdf_csv(degree));
        files.emplace_back("knn.csv", knn_csv(knn));
    }
    if (wants(cfg, "svg")) {
        files.emplace_back("var_freq_ccdf.svg",
                           ccdf_svg("(a) variable occurrences", "m", var_freq, var_fit, std::nullopt));
        files.emplace_back("vars_per_data_ccdf.svg",
                           ccdf_svg("(b) variables per dataset", "l", vars_per_data, vpd_fit, std::nullopt));
        svg::Series knn_points;
        knn_points.label = "k_nn(k)";
        for (const auto& [k, value] : knn) knn_points.points.emplace_back(static_cast<double>(k), value);
        svg::Plot plot;
        plot.title = "(c) degree correlation";
        plot.x = {"k", svg::Scale::log10, std::nullopt};
        plot.y = {"k_nn", svg::Scale::log10, std::nullopt};
        files.emplace_back("knn.svg", svg::render(plot, std::vector{knn_points}));
        files.emplace_back("degree_ccdf.svg", ccdf_svg("(d) degree", "k", degree, std::nullopt, degree_two));
    }
    write_outputs(cfg, files, err);
    out << metrics;
    return ok;
}

int cmd_robust(const RunConfig& cfg, std::ostream& err) {
    const Catalog catalog = load_catalog(cfg);
    const DataNetwork component = load_component(cfg, catalog, err);
    const auto grid = make_f_grid(cfg.f_step);
    const auto random = random_removal_curve(component, grid, cfg.n_runs, derive_seed(cfg.seed, "random_removal"),
                                             cfg.threads);
    const auto targeted = targeted_removal_curve(component, grid, cfg.targeted_mode);

    const int decimals = std::max(2, decimals_for_step(cfg.f_step));
    OutputFiles files{{"robust_random.csv", curve_csv(random, decimals)},
                      {"robust_targeted.csv", curve_csv(targeted, decimals)}};
    if (wants(cfg, "svg")) {
        std::vector<svg::Series> series(2);
        series[0].label = fmt::format("random ({} runs)", random.n_runs);
        series[1].label = targeted.strategy;
        series[1].color = orange;
        for (auto* s : {&series[0], &series[1]}) s->line = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            series[0].points.emplace_back(grid[i], random.mean_ratio[i]);
            series[1].points.emplace_back(grid[i], targeted.mean_ratio[i]);
        }
        svg::Plot plot;
        plot.title = "robustness of the largest component";
        plot.x = {"f", svg::Scale::linear, std::pair{0.0, 1.0}};
        plot.y = {"P(f)/P(0)", svg::Scale::linear, std::pair{0.0, 1.0}};
        files.emplace_back("robust.svg", svg::render(plot, series));
    }
    write_outputs(cfg, files, err);
    return ok;
}

template <class T>
T parse_param(const std::vector<std::string>& params, std::size_t i, const char* name) {
    if (i >= params.size()) throw InvalidArgument(std::string("missing parameter '") + name + "'");
    T value{};
    std::istringstream in(params[i]);
    in >> value;
    if (!in || !in.eof()) throw InvalidArgument(std::string("invalid value '") + params[i] + "' for " + name);
    if constexpr (std::is_unsigned_v<T>)
        if (params[i].starts_with("-")) throw InvalidArgument(std::string(name) + " must be nonnegative");
    return value;
}

gen::GenSpec parse_gen_spec(const std::string& kind, const std::vector<std::string>& p) {
    auto expect = [&](std::size_t n, const char* usage) {
        if (p.size() != n) throw InvalidArgument("usage: gen " + kind + " " + usage);
    };
    using Size = std::size_t;
    using Seed = std::uint64_t;
    if (kind == "complete") {
        expect(1, "<n>");
        return gen::Complete{parse_param<Size>(p, 0, "n")};
    }
    if (kind == "star") {
        expect(1, "<leaves>");
        return gen::Star{parse_param<Size>(p, 0, "leaves")};
    }
    if (kind == "path") {
        expect(1, "<n>");
        return gen::Path{parse_param<Size>(p, 0, "n")};
    }
    if (kind == "cycle") {
        expect(1, "<n>");
        return gen::Cycle{parse_param<Size>(p, 0, "n")};
    }
    if (kind == "er") {
        expect(3, "<n> <p> <seed>");
        return gen::ErdosRenyi{parse_param<Size>(p, 0, "n"), parse_param<double>(p, 1, "p"),
                               parse_param<Seed>(p, 2, "seed")};
    }
    if (kind == "pa" || kind == "pref_attach") {
        expect(3, "<n> <m_new> <seed>");
        return gen::PrefAttach{parse_param<Size>(p, 0, "n"), parse_param<Size>(p, 1, "m_new"),
                               parse_param<Seed>(p, 2, "seed")};
    }
    if (kind == "zipf" || kind == "zipf_catalog") {
        expect(4, "<n_datasets> <n_draws> <gamma> <seed>");
        return gen::ZipfCatalog{parse_param<Size>(p, 0, "n_datasets"), parse_param<Size>(p, 1, "n_draws"),
                                parse_param<double>(p, 2, "gamma"), parse_param<Seed>(p, 3, "seed")};
    }
    throw InvalidArgument("unknown generator '" + kind + "' (complete, star, path, cycle, er, pa, zipf)");
}

int cmd_gen(const std::string& kind, const std::vector<std::string>& params, const std::string& output,
            std::string as, std::ostream& out) {
    const gen::GenSpec spec = parse_gen_spec(kind, params);
    gen::validate(spec);
    const bool is_catalog = std::holds_alternative<gen::ZipfCatalog>(spec);
    const Catalog catalog = is_catalog ? gen::generate_catalog(spec) : gen::graph_to_catalog(gen::generate_graph(spec));

    if (as.empty()) as = output.ends_with(".csv") ? "csv" : "jsonl";
    std::string content;
    if (as == "jsonl") content = to_canonical_jsonl(catalog);
    else if (as == "csv") content = to_canonical_csv(catalog);
    else content = to_edge_list_csv(is_catalog ? build_network(catalog) : gen::generate_graph(spec));

    if (output.empty() || output == "-") {
        out << content;
    } else {
        if (const auto parent = std::filesystem::path(output).parent_path(); !parent.empty())
            std::filesystem::create_directories(parent);
        write_file_atomic(output, content);
    }
    return ok;
}

}  // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw Error("cannot write '" + tmp + "'");
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            file.close();
            std::filesystem::remove(tmp);
            throw Error("failed writing '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"varnet: variable-sharing networks of dataset catalogs"};
    app.name("varnet");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key = value file; command-line flags take precedence");

    RunConfig cfg;
    std::string format, mode = "static";
    std::vector<std::string> formats{"json", "csv"};
    bool no_normalize = false;
    std::size_t sample_n = 0;

    app.add_option("--format", format, "input format (default: from extension)")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_flag("--no-normalize", no_normalize, "match variable labels verbatim");
    app.add_option("--min-overlap", cfg.min_overlap, "shared variables needed for an edge")
        ->check(CLI::Range(1u, 1000000u));
    auto* sample_opt = app.add_option("--sample", sample_n, "analyze a uniform sample of N datasets");
    app.add_option("--seed", cfg.seed, "base seed for every random choice");
    app.add_option("--r2-min", cfg.r2_min, "R^2 a power-law fit window must reach")->check(CLI::Range(0.0, 1.0));
    app.add_option("--min-window", cfg.min_window, "fewest points in a fit window")->check(CLI::Range(2, 1 << 30));
    app.add_option("--min-segment", cfg.min_segment, "fewest points per two-regime segment")
        ->check(CLI::Range(2, 1 << 30));
    app.add_option("--f-step", cfg.f_step, "removal fraction grid step")->check(CLI::Range(1e-6, 1.0));
    app.add_option("--runs", cfg.n_runs, "random-removal repetitions")->check(CLI::Range(1, 1 << 20));
    app.add_option("--targeted-mode", mode, "static or adaptive degree ordering")
        ->check(CLI::IsMember({"static", "adaptive"}));
    app.add_option("-d,--out-dir", cfg.output_dir, "directory for output files");
    app.add_option("--formats", formats, "subset of json,csv,svg")
        ->delimiter(',')
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--hub-warn", cfg.hub_warn_threshold, "warn about labels held by more datasets than this");

    auto* stats = app.add_subcommand("stats", "catalog statistics -> stats.json");
    auto* analyze = app.add_subcommand("analyze", "network metrics, distributions and fits");
    auto* robust = app.add_subcommand("robust", "robustness under random and targeted removal");
    for (auto* sub : {stats, analyze, robust}) sub->add_option("input", cfg.input, "catalog file")->required();

    std::string kind, output, as;
    std::vector<std::string> params;
    auto* gen = app.add_subcommand("gen", "write a synthetic graph or catalog");
    gen->add_option("kind", kind, "complete, star, path, cycle, er, pa, zipf")->required();
    gen->add_option("params", params, "generator parameters");
    gen->add_option("-o,--output", output, "output file (default: stdout)");
    gen->add_option("--as", as, "jsonl, csv or edges (default: from extension)")
        ->check(CLI::IsMember({"jsonl", "csv", "edges"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    if (!format.empty()) cfg.format = format == "csv" ? CatalogFormat::csv : CatalogFormat::jsonl;
    cfg.normalize = !no_normalize;
    if (sample_opt->count() > 0) cfg.sample_n = sample_n;
    cfg.targeted_mode = mode == "adaptive" ? TargetedMode::adaptive_degree : TargetedMode::static_degree;
    cfg.output_formats = {formats.begin(), formats.end()};

    try {
        if (stats->parsed()) return cmd_stats(cfg, out, err);
        if (analyze->parsed()) return cmd_analyze(cfg, out, err);
        if (robust->parsed()) return cmd_robust(cfg, err);
        return cmd_gen(kind, params, output, as, out);
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return analysis_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
}

}  // namespace varnet::cli
