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
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "varnet/ingest.hpp"
#include "varnet/percolate.hpp"

namespace varnet::cli {

/// Exit codes of the varnet tool.
enum ExitCode : int {
    ok = 0,
    analysis_failed = 1,  ///< the input is valid but the requested analysis is undefined on it
    bad_input = 2,        ///< usage, I/O, parse or parameter errors
};

/// Every tunable of a run. Defaults match the library defaults.
struct RunConfig {
    std::string input;
    std::optional<CatalogFormat> format;
    bool normalize = true;
    std::uint32_t min_overlap = 1;
    std::optional<std::size_t> sample_n;
    std::uint64_t seed = 1;
    double r2_min = 0.97;
    std::size_t min_window = 10;
    std::size_t min_segment = 5;
    double f_step = 0.02;
    std::size_t n_runs = 10;
    TargetedMode targeted_mode = TargetedMode::static_degree;
    std::string output_dir = ".";
    std::set<std::string> output_formats{"json", "csv"};
    unsigned threads = 1;
    std::size_t hub_warn_threshold = 2000;
};

/// Runs `varnet <args...>` (args exclude the program name). Normal output
/// goes to `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes `content` to `path` through a temporary file renamed on success,
/// so readers never observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace varnet::cli
