// Copyright 2026 The biasaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biasaudit/errors.hpp"
#include "biasaudit/pipeline.hpp"
#include "testutil.hpp"

namespace pipeline = biasaudit::pipeline;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Small two-outlet corpus with a blacklisted name, a spurious token, a
// byline self-mention, and a noisy raw key.
void write_small_corpus(const fs::path& path) {
  std::string text;
  auto add = [&](const std::string& id, const std::string& outlet,
                 const std::string& title, const std::string& author,
                 const std::string& counts, const std::string& date) {
    text += R"({"id": ")" + id + R"(", "outlet": ")" + outlet +
            R"(", "title": ")" + title + R"(", "authors": [")" + author +
            R"("], "date": ")" + date + R"(", "mention_counts": )" + counts +
            "}\n";
  };
  add("w1", "west", "A stunning quantum discovery", "Kim Writerly",
      R"({"Ada Marlow": 3, "Brin Tally": 1, "Albert Einstein": 2})",
      "2019-04-01");
  add("w2", "west", "Why the quantum crisis is growing", "Kim Writerly",
      R"({"Ada Marlow": 2, "Puzzle": 1})", "2020-05-02");
  add("w3", "west", "New proofs delight geometers", "Lee Penwick",
      R"({"By Ada  Marlow": 1, "Kim Writerly": 2})", "2021-06-03");
  add("e1", "east", "Deadly outbreak threatens region", "Mo Quillson",
      R"({"Cara Voss": 2, "Dane Ruiz": 2})", "2018-07-04");
  add("e2", "east", "A hopeful vaccine breakthrough", "Mo Quillson",
      R"({"Cara Voss": 1, "Dane Ruiz": 1})", "2022-08-05");
  testutil::write_file(path, text);
}

pipeline::RunConfig base_config(const fs::path& dir) {
  pipeline::RunConfig config;
  write_small_corpus(dir / "corpus.jsonl");
  config.corpus_path = dir / "corpus.jsonl";
  config.blacklist_path = testutil::data_dir() / "blacklist.json";
  config.stopwords_path = testutil::data_dir() / "stopwords_en.txt";
  config.lexicon_path = testutil::data_dir() / "sentiment_lexicon.tsv";
  config.out_dir = dir / "out";
  config.deterministic = true;
  // tiny corpora would otherwise trim their only counts away
  config.trim_hist = 0.0;
  config.trim_rcdf = 0.0;
  return config;
}

std::map<std::string, std::string> tree_digest(const fs::path& root) {
  std::map<std::string, std::string> digest;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) {
      digest[fs::relative(entry.path(), root).string()] =
          testutil::read_file(entry.path());
    }
  }
  return digest;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("end to end on a small corpus") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    const auto result = pipeline::run_audit(config);

    REQUIRE(result.reports.size() == 2);
    CHECK(result.reports[0].outlet == "east");
    CHECK(result.reports[1].outlet == "west");

    // west: Einstein and Puzzle filtered; Ada Marlow = 3+2+1, Brin Tally = 1,
    // Kim Writerly aliased with 2 mentions
    const auto& west = result.reports[1];
    CHECK(west.summary.total == 9);
    CHECK(west.summary.distinct == 3);

    // byline self-mention got aliased
    bool saw_alias = false;
    for (const auto& m : west.top_mentions) {
      CHECK(m.person != "Kim Writerly");
      if (m.person.rfind("Author_", 0) == 0) saw_alias = true;
    }
    CHECK(saw_alias);

    CHECK(fs::exists(config.out_dir / "summary.json"));
    CHECK(fs::exists(config.out_dir / "manifest.json"));
    CHECK(fs::exists(config.out_dir / "west" / "repetition.csv"));
    CHECK(fs::exists(config.out_dir / "plots" / "west" / "sentiment_box.json"));
    CHECK(fs::exists(config.out_dir / "restricted" / "alias_map.csv"));

    const auto doc =
        json::parse(testutil::read_file(config.out_dir / "summary.json"));
    CHECK(doc.at("outlets").size() == 2);
    CHECK(doc.at("outlets").contains("west"));

    // pooled distribution covers both outlets: west total 9 + east total 6
    REQUIRE(result.pooled.has_value());
    CHECK(result.pooled->total == 15);
    CHECK(doc.at("pooled").at("total").get<std::int64_t>() == 15);
  }

  TEST_CASE("deterministic reruns are byte-identical") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.out_dir = dir.path() / "out1";
    pipeline::run_audit(config);
    config.out_dir = dir.path() / "out2";
    pipeline::run_audit(config);
    CHECK(tree_digest(dir.path() / "out1") == tree_digest(dir.path() / "out2"));
  }

  TEST_CASE("outlet filter restricts the run") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.outlet_filter = "east";
    const auto result = pipeline::run_audit(config);
    REQUIRE(result.reports.size() == 1);
    CHECK(result.reports[0].outlet == "east");

    config.outlet_filter = "nope";
    CHECK_THROWS_AS(pipeline::run_audit(config),
                    biasaudit::ValidationError);
  }

  TEST_CASE("date range filter") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.from_date = "2020-01-01";
    config.to_date = "2021-12-31";
    const auto result = pipeline::run_analysis(config);
    // only w2 (2020) and w3 (2021) survive; east drops out entirely
    REQUIRE(result.reports.size() == 1);
    CHECK(result.reports[0].outlet == "west");
    CHECK(result.reports[0].article_count == 2);

    config.from_date = "2020-13-01";
    CHECK_THROWS_AS(pipeline::run_analysis(config),
                    biasaudit::ValidationError);
  }

  TEST_CASE("per-outlet anonymisation keeps outlet-local namespaces") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.per_outlet_anon = true;
    const auto result = pipeline::run_audit(config);
    CHECK(result.alias_maps.size() == 2);
    CHECK(fs::exists(config.out_dir / "restricted" / "alias_map_east.csv"));
    CHECK(fs::exists(config.out_dir / "restricted" / "alias_map_west.csv"));
    // each outlet re-starts numbering at Author_001
    for (const auto& map : result.alias_maps) {
      REQUIRE(!map.forward.empty());
      CHECK(map.reverse.count("Author_001") == 1);
    }
    // pooling is undefined when alias keys collide across outlets
    CHECK_FALSE(result.pooled.has_value());
  }

  TEST_CASE("config validation") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.trim_hist = 1.0;
    CHECK_THROWS_AS(pipeline::validate(config), biasaudit::ValidationError);
    config.trim_hist = 0.01;
    config.top_k = 0;
    CHECK_THROWS_AS(pipeline::validate(config), biasaudit::ValidationError);
  }

  TEST_CASE("missing input files raise IoError") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    config.blacklist_path = dir.path() / "missing_blacklist.json";
    CHECK_THROWS_AS(pipeline::run_analysis(config), biasaudit::IoError);
    config = base_config(dir.path());
    config.corpus_path = dir.path() / "missing_corpus.jsonl";
    CHECK_THROWS_AS(pipeline::run_analysis(config), biasaudit::IoError);
  }

  TEST_CASE("no real byline name appears anywhere in the output tree") {
    testutil::TempDir dir;
    auto config = base_config(dir.path());
    const auto result = pipeline::run_audit(config);
    const char* bylines[] = {"Kim Writerly", "Lee Penwick", "Mo Quillson"};
    for (const auto& entry :
         fs::recursive_directory_iterator(config.out_dir)) {
      if (!entry.is_regular_file()) continue;
      if (entry.path().string().find("restricted") != std::string::npos) {
        continue;  // the alias map is the one permitted location
      }
      const auto content = testutil::read_file(entry.path());
      for (const char* byline : bylines) {
        CAPTURE(entry.path().string());
        CHECK(content.find(byline) == std::string::npos);
      }
    }
  }
}
