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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "varnet/error.hpp"
#include "varnet/ingest.hpp"

using namespace varnet;

namespace {

Catalog jsonl(const std::string& text, ParseOptions options = {}) {
    std::istringstream in(text);
    return parse_jsonl(in, options);
}

Catalog csv(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in);
}

Catalog from_sets(std::vector<std::vector<std::string>> sets) {
    std::vector<DatasetRecord> records;
    for (std::size_t i = 0; i < sets.size(); ++i)
        records.push_back({"d" + std::to_string(i + 1), std::nullopt, std::move(sets[i])});
    return Catalog(std::move(records));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(NormalizeLabel, TrimsAndFoldsCase) { EXPECT_EQ(normalize_label("  Longitude "), "longitude"); }

TEST(NormalizeLabel, KeepsCaselessScript) { EXPECT_EQ(normalize_label("名前"), "名前"); }

TEST(NormalizeLabel, WhitespaceOnlyIsAnError) { EXPECT_THROW(normalize_label("  "), InvalidArgument); }

TEST(NormalizeLabel, CollapsesInternalWhitespace) {
    EXPECT_EQ(normalize_label("Branch \t  NAME"), "branch name");
    EXPECT_EQ(normalize_label("a　b"), "a b");  // ideographic space
}

TEST(NormalizeLabel, ComposesToNfc) {
    // "e" + combining acute -> U+00E9; the capital composes and folds too.
    EXPECT_EQ(normalize_label("Caf\x65\xCC\x81"), "caf\xC3\xA9");
    EXPECT_EQ(normalize_label("CAF\xC3\x89"), "caf\xC3\xA9");
}

TEST(NormalizeLabel, FullCaseFolding) { EXPECT_EQ(normalize_label("Straße"), normalize_label("STRASSE")); }

TEST(NormalizeLabel, RejectsInvalidUtf8) { EXPECT_THROW(normalize_label("ab\xFF"), InvalidArgument); }

TEST(NormalizeLabel, IsIdempotentOnRandomStrings) {
    const std::vector<std::string> pieces{"A",  "b",    " ",    "\t", "\xCC\x81", "\xC3\x89", "\xC3\x9F", "\xE2\x84\xAA",
                                          "Σ", "ς",    "\xEF\xAC\x80", "名", "\xE3\x80\x80", "İ", "\xCD\x85", "1"};
    Rng rng(99);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string raw;
        const std::size_t len = 1 + rng.below(8);
        for (std::size_t i = 0; i < len; ++i) raw += pieces[rng.below(pieces.size())];
        std::string once;
        try {
            once = normalize_label(raw);
        } catch (const InvalidArgument&) {
            continue;
        }
        EXPECT_EQ(normalize_label(once), once) << "input: " << raw;
    }
}

TEST(ParseJsonl, NormalizesLabels) {
    const Catalog c = jsonl(R"({"id":"d1","variables":["Lat"," lon "]})");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.records()[0].variables, (std::vector<std::string>{"lat", "lon"}));
    EXPECT_FALSE(c.records()[0].title.has_value());
}

TEST(ParseJsonl, EmptyStreamGivesEmptyCatalog) {
    EXPECT_TRUE(jsonl("").empty());
    EXPECT_TRUE(jsonl("\n  \n").empty());
}

TEST(ParseJsonl, MergesDuplicatesAfterCaseFolding) {
    const Catalog c = jsonl(R"({"id":"d1","variables":["lat","LAT"]})");
    EXPECT_EQ(c.records()[0].variables, std::vector<std::string>{"lat"});
}

TEST(ParseJsonl, KeepsTitleAndFileOrder) {
    const Catalog c = jsonl("{\"id\":\"z\",\"title\":\"Zed\",\"variables\":[\"a\"]}\n{\"id\":\"a\",\"variables\":[\"b\"]}\n");
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c.records()[0].id, "z");
    EXPECT_EQ(c.records()[0].title, "Zed");
    EXPECT_EQ(c.records()[1].id, "a");
}

TEST(ParseJsonl, MalformedLineReportsLineNumber) {
    try {
        jsonl("{\"id\":\"d1\",\"variables\":[\"a\"]}\n\n{\"id\": oops}\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseJsonl, RejectsMissingFields) {
    EXPECT_THROW(jsonl(R"({"variables":["a"]})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":"d1"})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":7,"variables":["a"]})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":"d1","variables":"a"})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":"d1","variables":[1]})"), ParseError);
    EXPECT_THROW(jsonl(R"(["d1"])"), ParseError);
}

TEST(ParseJsonl, RejectsEmptyVariablesAndLabels) {
    EXPECT_THROW(jsonl(R"({"id":"d1","variables":[]})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":"d1","variables":["a","  "]})"), ParseError);
    EXPECT_THROW(jsonl(R"({"id":"","variables":["a"]})"), ParseError);
}

TEST(ParseJsonl, RejectsDuplicateIds) {
    try {
        jsonl("{\"id\":\"d1\",\"variables\":[\"a\"]}\n{\"id\":\"d1\",\"variables\":[\"b\"]}\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(ParseJsonl, NormalizationCanBeDisabled) {
    const Catalog c = jsonl(R"({"id":"d1","variables":["Lat","lat"," lat"]})", ParseOptions{false});
    EXPECT_EQ(c.records()[0].variables, (std::vector<std::string>{" lat", "Lat", "lat"}));
}

TEST(ParseCsv, BasicRecord) {
    const Catalog c = csv("id,variables\nd1,lat;lon");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.records()[0].variables.size(), 2u);
}

TEST(ParseCsv, EmptyVariableListIsAnError) { EXPECT_THROW(csv("id,variables\nd1,\n"), ParseError); }

TEST(ParseCsv, DuplicateIdIsAnError) { EXPECT_THROW(csv("id,variables\nd1,a\nd1,b\n"), ParseError); }

TEST(ParseCsv, MissingHeaderIsAnError) {
    EXPECT_THROW(csv("d1,lat;lon\n"), ParseError);
    EXPECT_THROW(csv("name,labels\nd1,a\n"), ParseError);
}

TEST(ParseCsv, QuotedFieldsAndTitleColumn) {
    const Catalog c = csv("id,title,variables\r\n\"d,1\",\"A \"\"quoted\"\" title\",\"x, y;Z\"\r\n");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.records()[0].id, "d,1");
    EXPECT_EQ(c.records()[0].title, "A \"quoted\" title");
    EXPECT_EQ(c.records()[0].variables, (std::vector<std::string>{"x, y", "z"}));
}

TEST(ParseCsv, WrongFieldCountReportsLine) {
    try {
        csv("id,variables\nd1,a\nd2,b,c\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ParseCsv, EmptyInputGivesEmptyCatalog) { EXPECT_TRUE(csv("").empty()); }

TEST(Catalog, IndexIsInverseOfRecords) {
    const Catalog c = from_sets({{"a", "b"}, {"b", "c"}, {"d"}});
    EXPECT_EQ(c.datasets_with("b"), (std::vector<std::string>{"d1", "d2"}));
    EXPECT_EQ(c.datasets_with("d"), std::vector<std::string>{"d3"});
    EXPECT_TRUE(c.datasets_with("zzz").empty());
    EXPECT_THROW(from_sets({{"a"}, {""}}), InvalidArgument);
}

TEST(Catalog, IndexSizesSumToTotalVariables) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Catalog c = oracle::random_catalog(rng, 30, 8, 20);
        std::uint64_t sum = 0;
        for (const auto& [label, positions] : c.index()) sum += positions.size();
        EXPECT_EQ(sum, catalog_stats(c).total_variables);
    }
}

TEST(Catalog, CanonicalJsonlRoundTrips) {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const Catalog c = oracle::random_catalog(rng, 15, 6, 12);
        const Catalog back = jsonl(to_canonical_jsonl(c));
        EXPECT_EQ(back, c);
        EXPECT_EQ(to_canonical_jsonl(back), to_canonical_jsonl(c));
    }
    const Catalog titled = jsonl("{\"id\":\"b\",\"title\":\"T\",\"variables\":[\"Y\",\"x\"]}\n{\"id\":\"a\",\"variables\":[\"q\"]}\n");
    EXPECT_EQ(to_canonical_jsonl(titled),
              "{\"id\":\"a\",\"variables\":[\"q\"]}\n{\"id\":\"b\",\"title\":\"T\",\"variables\":[\"x\",\"y\"]}\n");
    EXPECT_EQ(jsonl(to_canonical_jsonl(titled)), titled);
}

TEST(Catalog, CanonicalCsvRoundTrips) {
    const Catalog c = jsonl("{\"id\":\"b,2\",\"title\":\"T\",\"variables\":[\"y\",\"x\"]}\n{\"id\":\"a\",\"variables\":[\"q r\"]}\n");
    std::istringstream in(to_canonical_csv(c));
    EXPECT_EQ(parse_csv(in), c);
}

TEST(Sample, FullSizeIsIdentity) {
    const Catalog c = from_sets({{"a"}, {"b"}, {"c"}, {"d"}});
    for (std::uint64_t seed : {0u, 1u, 123u}) {
        const Catalog s = sample(c, c.size(), seed);
        ASSERT_EQ(s.size(), c.size());
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(s.records()[i], c.records()[i]);
    }
}

TEST(Sample, ZeroIsEmptyAndTooLargeThrows) {
    const Catalog c = from_sets({{"a"}, {"b"}});
    EXPECT_TRUE(sample(c, 0, 7).empty());
    EXPECT_THROW(sample(c, 3, 7), InvalidArgument);
}

TEST(Sample, IsSubsetOfExactSize) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Catalog c = oracle::random_catalog(rng, 25, 4, 10);
        const std::size_t n = rng.below(c.size() + 1);
        const Catalog s = sample(c, n, rng.next());
        ASSERT_EQ(s.size(), n);
        for (const auto& r : s.records()) {
            auto it = std::find_if(c.records().begin(), c.records().end(), [&](auto& x) { return x.id == r.id; });
            ASSERT_NE(it, c.records().end());
            EXPECT_EQ(*it, r);
        }
    }
}

TEST(Sample, MatchesGoldenFile) {
    std::vector<std::vector<std::string>> sets;
    for (int i = 0; i < 10; ++i) sets.push_back({"v" + std::to_string(i), "shared"});
    const Catalog c = from_sets(sets);
    const std::string first = to_canonical_jsonl(sample(c, 3, 42));
    const std::string second = to_canonical_jsonl(sample(c, 3, 42));
    EXPECT_EQ(first, second);
    EXPECT_EQ(first, read_file(std::string(VARNET_TEST_DATA) + "/sample_10_3_seed42.golden.jsonl"));
}

TEST(CatalogStats, CountsByHand) {
    const CatalogStats s = catalog_stats(from_sets({{"a", "b"}, {"b", "c"}, {"d"}}));
    EXPECT_EQ(s, (CatalogStats{3, 5, 4, 2, 1}));
}

TEST(CatalogStats, EmptyCatalogIsAllZero) { EXPECT_EQ(catalog_stats(Catalog{}), CatalogStats{}); }

TEST(CatalogStats, FixtureMatchesHandCount) {
    const Catalog c = read_catalog(std::string(VARNET_TEST_DATA) + "/fixture_catalog.jsonl", CatalogFormat::jsonl);
    EXPECT_EQ(catalog_stats(c), (CatalogStats{20, 76, 44, 5, 2}));
}

TEST(ReadCatalog, MissingFileThrows) {
    EXPECT_THROW(read_catalog("/nonexistent/catalog.jsonl", CatalogFormat::jsonl), Error);
    EXPECT_EQ(format_from_path("x.csv"), CatalogFormat::csv);
    EXPECT_EQ(format_from_path("x.jsonl"), CatalogFormat::jsonl);
}
