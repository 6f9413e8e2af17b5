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

#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "varnet/report.hpp"
#include "varnet/svg_plot.hpp"

using namespace varnet;

TEST(FormatNumber, RoundTrips) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(0.1), "0.1");
    std::mt19937_64 engine(1);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = dist(engine);
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
}

TEST(Csv, Ccdf) { EXPECT_EQ(ccdf_csv({{1, 1.0}, {2, 0.25}}), "m,ccdf\n1,1\n2,0.25\n"); }

TEST(Csv, Knn) { EXPECT_EQ(knn_csv({{1, 3.0}, {3, 1.5}}), "k,knn\n1,3\n3,1.5\n"); }

TEST(Csv, Curve) {
    RobustnessCurve curve;
    curve.f = {0.0, 0.5, 1.0};
    curve.mean_ratio = {1.0, 0.25, 0.0};
    curve.std_ratio = {0.0, 0.125, 0.0};
    EXPECT_EQ(curve_csv(curve), "f,mean_ratio,std_ratio\n0.00,1,0\n0.50,0.25,0.125\n1.00,0,0\n");
    EXPECT_EQ(curve_csv(curve, 1), "f,mean_ratio,std_ratio\n0.0,1,0\n0.5,0.25,0.125\n1.0,0,0\n");
}

TEST(Csv, DecimalsForStep) {
    EXPECT_EQ(decimals_for_step(0.02), 2);
    EXPECT_EQ(decimals_for_step(0.1), 1);
    EXPECT_EQ(decimals_for_step(0.25), 2);
    EXPECT_EQ(decimals_for_step(0.125), 3);
    EXPECT_EQ(decimals_for_step(1.0), 0);
}

TEST(Json, Metrics) {
    MetricsReport r{4, 3, 1.5, 0.5, 0.0, -1.0, 1.5, 2};
    EXPECT_EQ(to_json(r).dump(),
              R"({"n_nodes":4,"n_edges":3,"average_degree":1.5,"density":0.5,"average_clustering":0.0,)"
              R"("assortativity":-1.0,"average_path_length":1.5,"diameter":2})");
    r.assortativity.reset();
    EXPECT_TRUE(to_json(r)["assortativity"].is_null());
}

TEST(Json, Stats) {
    const CatalogStats stats{20, 76, 44, 5, 2};
    EXPECT_EQ(to_json(stats).dump(),
              R"({"total_data":20,"total_variables":76,"variable_types":44,"max_variables":5,"min_variables":2})");
}

TEST(Json, Fits) {
    PowerLawFit head{1.2, -0.2, 0.0, 1.0, {0, 30}};
    PowerLawFit tail{3.0, -2.0, 3.0, 1.0, {30, 60}};
    const auto j = to_json(TwoRegimeFit{head, tail, 30, 50.0, 0.0});
    EXPECT_EQ(j["breakpoint"], 50.0);
    EXPECT_EQ(j["split"], 30);
    EXPECT_EQ(j["head"]["window_end"], 30);
    EXPECT_EQ(j["tail"]["gamma"], 3.0);
}

TEST(Svg, RendersSeriesAndDropsNonPositivePointsOnLogAxes) {
    svg::Plot plot;
    plot.title = "a < b & c";
    plot.x = {"m", svg::Scale::log10, std::nullopt};
    plot.y = {"ccdf", svg::Scale::log10, std::nullopt};
    std::vector<svg::Series> series{{"data", {{1, 1}, {10, 0.1}, {0, 0.5}, {100, 0.01}}, "#000", true, false}};
    const std::string doc = svg::render(plot, series);
    EXPECT_EQ(doc.rfind("<svg", 0), 0u);
    EXPECT_NE(doc.find("</svg>"), std::string::npos);
    EXPECT_NE(doc.find("a &lt; b &amp; c"), std::string::npos);
    std::size_t circles = 0;
    for (std::size_t pos = doc.find("<circle"); pos != std::string::npos; pos = doc.find("<circle", pos + 1))
        ++circles;
    EXPECT_EQ(circles, 3u);
    EXPECT_EQ(doc.find("nan"), std::string::npos);
    EXPECT_EQ(doc.find("inf"), std::string::npos);
}

TEST(Svg, EmptyAndDegenerateSeries) {
    svg::Plot plot;
    EXPECT_NO_THROW(svg::render(plot, std::vector<svg::Series>{}));
    std::vector<svg::Series> one{{"single", {{2, 2}}, "#000", true, true}};
    const std::string doc = svg::render(plot, one);
    EXPECT_EQ(doc.find("nan"), std::string::npos);
}
