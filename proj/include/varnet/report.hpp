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
#include <map>
#include <string>

#include <json.hpp>

#include "varnet/distfit.hpp"
#include "varnet/ingest.hpp"
#include "varnet/metrics.hpp"
#include "varnet/percolate.hpp"

namespace varnet {

nlohmann::ordered_json to_json(const CatalogStats& stats);
/// Flat object; assortativity is null when undefined.
nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const PowerLawFit& fit);
nlohmann::ordered_json to_json(const TwoRegimeFit& fit);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

/// `m,ccdf` rows.
std::string ccdf_csv(const CcdfPoints& points);

/// `k,knn` rows.
std::string knn_csv(const std::map<std::size_t, double>& knn);

/// `f,mean_ratio,std_ratio` rows; f printed with `f_decimals` digits.
std::string curve_csv(const RobustnessCurve& curve, int f_decimals = 2);

/// Decimal digits needed to print multiples of `step` exactly (max 9).
int decimals_for_step(double step);

}  // namespace varnet
