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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varnet/error.hpp"

namespace varnet {

/// One dataset's metadata: its id, an optional title and the set of
/// variable labels it holds (sorted, unique, nonempty).
struct DatasetRecord {
    std::string id;
    std::optional<std::string> title;
    std::vector<std::string> variables;

    friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

/// An immutable population of datasets plus the inverted index
/// variable label -> positions of the records holding it.
///
/// Records keep input (file) order; ids are unique.
class Catalog {
public:
    using Index = std::map<std::string, std::vector<std::size_t>, std::less<>>;

    Catalog() = default;

    /// Takes ownership of the records, checks id uniqueness and builds the
    /// index. Variable lists are sorted and deduplicated. Throws
    /// InvalidArgument on empty ids, empty labels or duplicate ids.
    explicit Catalog(std::vector<DatasetRecord> records);

    const std::vector<DatasetRecord>& records() const noexcept { return records_; }
    const Index& index() const noexcept { return index_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    /// Ids of the datasets holding `label`, in catalog order. Empty when
    /// the label is unknown.
    std::vector<std::string> datasets_with(std::string_view label) const;

    /// Content equality: the same set of records, regardless of order.
    friend bool operator==(const Catalog& a, const Catalog& b);

private:
    std::vector<DatasetRecord> records_;
    Index index_;
};

/// Table-1 style summary of a catalog.
struct CatalogStats {
    std::uint64_t total_data = 0;
    std::uint64_t total_variables = 0;
    std::uint64_t variable_types = 0;
    std::uint64_t max_variables = 0;
    std::uint64_t min_variables = 0;

    friend bool operator==(const CatalogStats&, const CatalogStats&) = default;
};

struct ParseOptions {
    /// Apply normalize_label to every label; when false labels are used
    /// verbatim (an empty label is still rejected).
    bool normalize = true;
};

enum class CatalogFormat { jsonl, csv };

/// NFC, case fold, trim, collapse internal whitespace runs to one space.
/// Throws InvalidArgument when the result is empty or the input is not
/// valid UTF-8.
std::string normalize_label(std::string_view raw);

/// One JSON object per nonblank line: {"id": str, "title"?: str, "variables": [str]}.
Catalog parse_jsonl(std::istream& in, const ParseOptions& options = {});

/// Header row naming at least `id` and `variables` (an optional `title`
/// column is accepted); the variables cell is a `;`-separated list.
Catalog parse_csv(std::istream& in, const ParseOptions& options = {});

/// Reads a catalog file. Throws Error when the file cannot be opened.
Catalog read_catalog(const std::string& path, CatalogFormat format, const ParseOptions& options = {});

/// Picks the format from the file extension (.csv, otherwise JSON-Lines).
CatalogFormat format_from_path(std::string_view path);

/// Canonical JSON-Lines: records sorted by id, variables sorted.
std::string to_canonical_jsonl(const Catalog& catalog);

/// CSV with header `id,title,variables`, records sorted by id. Throws
/// InvalidArgument when a label contains ';' or a line break.
std::string to_canonical_csv(const Catalog& catalog);

/// Uniform sample of n records without replacement. The result keeps the
/// catalog order of the chosen records and depends only on (catalog order,
/// n, seed).
Catalog sample(const Catalog& catalog, std::size_t n, std::uint64_t seed);

CatalogStats catalog_stats(const Catalog& catalog);

}  // namespace varnet
