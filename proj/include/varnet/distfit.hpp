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
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "varnet/error.hpp"

namespace varnet {

class Catalog;
class DataNetwork;

enum class DistributionKind { variable_occurrence, variables_per_dataset, degree };

std::string_view to_string(DistributionKind kind);

/// Histogram value -> number of items with that value. Every stored count
/// is >= 1 and the counts sum to total_items.
struct FrequencyDistribution {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total_items = 0;
    DistributionKind kind = DistributionKind::degree;

    static FrequencyDistribution from_values(std::span<const std::uint64_t> values, DistributionKind kind);
    bool empty() const noexcept { return total_items == 0; }
};

/// p(m): m = number of datasets holding a label, one item per label.
/// Throws InvalidArgument on an empty catalog.
FrequencyDistribution variable_occurrence_distribution(const Catalog& catalog);

/// p(l): l = variables per dataset, one item per dataset.
FrequencyDistribution variables_per_dataset_distribution(const Catalog& catalog);

/// p(k): node degrees. Throws GraphError on an empty network.
FrequencyDistribution degree_distribution(const DataNetwork& network);

struct CcdfPoint {
    double value;
    double ccdf;

    friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

/// One point per distinct value, values ascending, ccdf strictly
/// decreasing from exactly 1.
using CcdfPoints = std::vector<CcdfPoint>;

/// Fraction of items with value >= m at every distinct m.
CcdfPoints ccdf(const FrequencyDistribution& dist);

/// Fraction of items with value <= m.
double cumulative_share(const FrequencyDistribution& dist, std::uint64_t m);

/// Half-open index range [begin, end) into a CcdfPoints list.
struct FitWindow {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const FitWindow&, const FitWindow&) = default;
};

/// Straight line in (log10 m, log10 ccdf). gamma = 1 - slope.
struct PowerLawFit {
    double gamma = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    FitWindow window;
};

/// No window reached the requested R^2; carries the best one seen.
class FitError : public Error {
public:
    FitError(const std::string& what, FitWindow best_window, double best_r_squared)
        : Error(what), best_window_(best_window), best_r_squared_(best_r_squared) {}

    FitWindow best_window() const noexcept { return best_window_; }
    double best_r_squared() const noexcept { return best_r_squared_; }

private:
    FitWindow best_window_;
    double best_r_squared_;
};

struct PowerLawOptions {
    double r2_min = 0.97;
    std::size_t min_window = 10;
};

/// OLS line in log-log space over the longest contiguous window whose R^2
/// reaches r2_min. Equal lengths prefer higher R^2, then the earliest start.
///
/// Throws InvalidArgument when there are fewer than min_window points or a
/// point is not strictly positive, and FitError when no window qualifies.
PowerLawFit fit_power_law(std::span<const CcdfPoint> points, const PowerLawOptions& options = {});

/// Two log-log lines split at `split`: head = [0, split), tail = [split, n).
struct TwoRegimeFit {
    PowerLawFit head;
    PowerLawFit tail;
    std::size_t split = 0;
    /// Value of the first tail point.
    double breakpoint = 0.0;
    /// Sum of squared residuals of both segments in log10 space.
    double sse = 0.0;
};

/// Exhaustive scan over split positions with at least min_segment points
/// on each side; minimal total SSE wins. Splits whose SSE is within
/// 1e-12 * (1 + best) of the best are ties and the earlier one is kept.
/// Throws InvalidArgument when there are fewer than 2 * min_segment points.
TwoRegimeFit fit_two_regime(std::span<const CcdfPoint> points, std::size_t min_segment = 5);

/// Least-squares line y = intercept + slope * x with its R^2 and SSE.
/// Two-pass centered sums; x must not be constant.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double sse = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace varnet
