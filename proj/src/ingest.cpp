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

#include "varnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>

#include "varnet/error.hpp"
#include "varnet/random.hpp"

namespace varnet {

namespace {

void sort_unique(std::vector<std::string>& labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view strip_bom(std::string_view line) {
    if (line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    return line;
}

std::string prepare_label(std::string_view raw, const ParseOptions& options) {
    if (options.normalize) return normalize_label(raw);
    if (raw.empty()) throw InvalidArgument("empty variable label");
    return std::string(raw);
}

// Splits one CSV line into fields. Quoted fields may contain commas and
// doubled quotes; embedded newlines are not supported.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool field_was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty() && !field_was_quoted) {
            quoted = true;
            field_was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        } else {
            field.push_back(c);
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

std::string trim_ascii(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

// Shared tail of both parsers: duplicate-id detection with line numbers.
class RecordCollector {
public:
    void add(DatasetRecord record, std::size_t line_no) {
        if (record.id.empty()) throw ParseError(line_no, "empty dataset id");
        if (record.variables.empty()) throw ParseError(line_no, "empty variable list for dataset '" + record.id + "'");
        if (!seen_.insert(record.id).second)
            throw ParseError(line_no, "duplicate dataset id '" + record.id + "'");
        records_.push_back(std::move(record));
    }

    Catalog finish() { return Catalog(std::move(records_)); }

private:
    std::vector<DatasetRecord> records_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

Catalog::Catalog(std::vector<DatasetRecord> records) : records_(std::move(records)) {
    std::unordered_set<std::string_view> ids;
    ids.reserve(records_.size());
    for (std::size_t pos = 0; pos < records_.size(); ++pos) {
        auto& record = records_[pos];
        if (record.id.empty()) throw InvalidArgument("dataset id must be nonempty");
        if (!ids.insert(record.id).second) throw InvalidArgument("duplicate dataset id '" + record.id + "'");
        sort_unique(record.variables);
        if (!record.variables.empty() && record.variables.front().empty())
            throw InvalidArgument("dataset '" + record.id + "' has an empty variable label");
        for (const auto& label : record.variables) {
            auto it = index_.find(label);
            if (it == index_.end()) it = index_.emplace(label, std::vector<std::size_t>{}).first;
            it->second.push_back(pos);
        }
    }
}

std::vector<std::string> Catalog::datasets_with(std::string_view label) const {
    std::vector<std::string> ids;
    if (auto it = index_.find(label); it != index_.end()) {
        ids.reserve(it->second.size());
        for (std::size_t pos : it->second) ids.push_back(records_[pos].id);
    }
    return ids;
}

bool operator==(const Catalog& a, const Catalog& b) {
    if (a.size() != b.size()) return false;
    auto sorted = [](const Catalog& c) {
        std::vector<const DatasetRecord*> out;
        for (const auto& r : c.records()) out.push_back(&r);
        std::sort(out.begin(), out.end(), [](auto* x, auto* y) { return x->id < y->id; });
        return out;
    };
    const auto sa = sorted(a);
    const auto sb = sorted(b);
    return std::equal(sa.begin(), sa.end(), sb.begin(), [](auto* x, auto* y) { return *x == *y; });
}

std::string normalize_label(std::string_view raw) {
    UErrorCode status = U_ZERO_ERROR;
    int32_t length = 0;
    u_strFromUTF8(nullptr, 0, &length, raw.data(), static_cast<int32_t>(raw.size()), &status);
    if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status))
        throw InvalidArgument("variable label is not valid UTF-8");
    status = U_ZERO_ERROR;

    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");

    icu::UnicodeString text = icu::UnicodeString::fromUTF8(icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
    text = nfc->normalize(text, status);
    text.foldCase();

    // Trim and collapse whitespace runs to a single U+0020.
    icu::UnicodeString collapsed;
    bool pending_space = false;
    for (int32_t i = 0; i < text.length();) {
        const UChar32 c = text.char32At(i);
        i += U16_LENGTH(c);
        if (u_isUWhiteSpace(c)) {
            pending_space = !collapsed.isEmpty();
            continue;
        }
        if (pending_space) collapsed.append(static_cast<UChar>(0x20));
        pending_space = false;
        collapsed.append(c);
    }
    collapsed = nfc->normalize(collapsed, status);
    if (U_FAILURE(status)) throw InvalidArgument("variable label could not be normalized");
    if (collapsed.isEmpty()) throw InvalidArgument("variable label is empty after normalization");

    std::string out;
    collapsed.toUTF8String(out);
    return out;
}

Catalog parse_jsonl(std::istream& in, const ParseOptions& options) {
    RecordCollector collector;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip_cr(raw);
        if (line_no == 1) line = strip_bom(line);
        if (is_blank(line)) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(line_no, "record must be a JSON object");

        DatasetRecord record;
        const auto id = obj.find("id");
        if (id == obj.end() || !id->is_string()) throw ParseError(line_no, "missing string field \"id\"");
        record.id = id->get<std::string>();

        if (const auto title = obj.find("title"); title != obj.end() && !title->is_null()) {
            if (!title->is_string()) throw ParseError(line_no, "field \"title\" must be a string");
            record.title = title->get<std::string>();
        }

        const auto vars = obj.find("variables");
        if (vars == obj.end() || !vars->is_array()) throw ParseError(line_no, "missing array field \"variables\"");
        for (const auto& v : *vars) {
            if (!v.is_string()) throw ParseError(line_no, "variable labels must be strings");
            try {
                record.variables.push_back(prepare_label(v.get<std::string>(), options));
            } catch (const InvalidArgument& e) {
                throw ParseError(line_no, e.what());
            }
        }
        sort_unique(record.variables);
        collector.add(std::move(record), line_no);
    }
    return collector.finish();
}

Catalog parse_csv(std::istream& in, const ParseOptions& options) {
    std::string raw;
    std::size_t line_no = 0;

    // Header: first nonblank line.
    std::vector<std::string> header;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip_cr(raw);
        if (line_no == 1) line = strip_bom(line);
        if (is_blank(line)) continue;
        header = split_csv_line(line, line_no);
        break;
    }
    RecordCollector collector;
    if (header.empty()) return collector.finish();

    std::optional<std::size_t> id_col, vars_col, title_col;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = trim_ascii(header[i]);
        if (name == "id") id_col = i;
        else if (name == "variables") vars_col = i;
        else if (name == "title") title_col = i;
    }
    if (!id_col || !vars_col) throw ParseError(line_no, "missing header row with columns id,variables");

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = strip_cr(raw);
        if (is_blank(line)) continue;
        const auto fields = split_csv_line(line, line_no);
        if (fields.size() != header.size())
            throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                          std::to_string(fields.size()));
        DatasetRecord record;
        record.id = trim_ascii(fields[*id_col]);
        if (title_col && !fields[*title_col].empty()) record.title = fields[*title_col];

        const std::string_view cell = fields[*vars_col];
        if (is_blank(cell)) throw ParseError(line_no, "empty variable list for dataset '" + record.id + "'");
        std::size_t start = 0;
        while (start <= cell.size()) {
            const std::size_t end = std::min(cell.find(';', start), cell.size());
            try {
                record.variables.push_back(prepare_label(cell.substr(start, end - start), options));
            } catch (const InvalidArgument& e) {
                throw ParseError(line_no, e.what());
            }
            start = end + 1;
        }
        sort_unique(record.variables);
        collector.add(std::move(record), line_no);
    }
    return collector.finish();
}

CatalogFormat format_from_path(std::string_view path) {
    return path.ends_with(".csv") ? CatalogFormat::csv : CatalogFormat::jsonl;
}

Catalog read_catalog(const std::string& path, CatalogFormat format, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    return format == CatalogFormat::csv ? parse_csv(in, options) : parse_jsonl(in, options);
}

std::string to_canonical_jsonl(const Catalog& catalog) {
    std::vector<const DatasetRecord*> order;
    order.reserve(catalog.size());
    for (const auto& r : catalog.records()) order.push_back(&r);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });

    std::string out;
    for (const DatasetRecord* r : order) {
        nlohmann::ordered_json obj;
        obj["id"] = r->id;
        if (r->title) obj["title"] = *r->title;
        obj["variables"] = r->variables;
        out += obj.dump();
        out += '\n';
    }
    return out;
}

std::string to_canonical_csv(const Catalog& catalog) {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + '"';
    };
    std::vector<const DatasetRecord*> order;
    for (const auto& r : catalog.records()) order.push_back(&r);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });

    std::string out = "id,title,variables\n";
    for (const DatasetRecord* r : order) {
        std::string joined;
        for (const auto& label : r->variables) {
            if (label.find_first_of(";\r\n") != std::string::npos)
                throw InvalidArgument("label '" + label + "' contains ';' or a line break and cannot be written as CSV");
            if (!joined.empty()) joined += ';';
            joined += label;
        }
        out += field(r->id) + ',' + field(r->title.value_or("")) + ',' + field(joined) + '\n';
    }
    return out;
}

Catalog sample(const Catalog& catalog, std::size_t n, std::uint64_t seed) {
    const std::size_t total = catalog.size();
    if (n > total)
        throw InvalidArgument("sample size " + std::to_string(n) + " exceeds catalog size " + std::to_string(total));

    // Partial Fisher-Yates over positions, then restore catalog order.
    std::vector<std::size_t> positions(total);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
        std::swap(positions[i], positions[j]);
    }
    positions.resize(n);
    std::sort(positions.begin(), positions.end());

    std::vector<DatasetRecord> chosen;
    chosen.reserve(n);
    for (std::size_t pos : positions) chosen.push_back(catalog.records()[pos]);
    return Catalog(std::move(chosen));
}

CatalogStats catalog_stats(const Catalog& catalog) {
    CatalogStats stats;
    if (catalog.empty()) return stats;
    stats.total_data = catalog.size();
    stats.variable_types = catalog.index().size();
    stats.min_variables = std::numeric_limits<std::uint64_t>::max();
    for (const auto& r : catalog.records()) {
        const std::uint64_t count = r.variables.size();
        stats.total_variables += count;
        stats.max_variables = std::max(stats.max_variables, count);
        stats.min_variables = std::min(stats.min_variables, count);
    }
    return stats;
}

}  // namespace varnet
