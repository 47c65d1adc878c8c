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

// Golden-file regression check for the emitted report tree. Strings and
// integers must match the goldens exactly; floating-point values compare at
// 1e-9 so the goldens survive toolchain changes in the last bits.
//
// Regenerate after an intentional output change:
//   BIASAUDIT_REGEN_GOLDEN=1 ./build/tests/unit_tests -ts=golden

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biasaudit/csv.hpp"
#include "biasaudit/pipeline.hpp"
#include "testutil.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kGoldenFiles[] = {
    "summary.json",
    "quanta_like/top_mentions.csv",
    "quanta_like/repetition.csv",
    "wired_like/terms.csv",
    "newsci_like/co_mentions.csv",
    "plots/quanta_like/reverse_cdf.json",
};

fs::path golden_dir() { return testutil::test_data_dir() / "golden"; }

void compare_json(const json& got, const json& want, const std::string& at) {
  CAPTURE(at);
  if (want.is_number_float() || got.is_number_float()) {
    REQUIRE(got.is_number());
    REQUIRE(want.is_number());
    CHECK(got.get<double>() ==
          doctest::Approx(want.get<double>()).epsilon(1e-9));
    return;
  }
  if (want.is_object()) {
    REQUIRE(got.is_object());
    REQUIRE(got.size() == want.size());
    for (const auto& [key, value] : want.items()) {
      REQUIRE(got.contains(key));
      compare_json(got.at(key), value, at + "/" + key);
    }
    return;
  }
  if (want.is_array()) {
    REQUIRE(got.is_array());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      compare_json(got.at(i), want.at(i), at + "[" + std::to_string(i) + "]");
    }
    return;
  }
  CHECK(got == want);
}

void compare_csv(const std::string& got, const std::string& want,
                 const std::string& at) {
  const auto got_rows = biasaudit::csv::parse(got);
  const auto want_rows = biasaudit::csv::parse(want);
  CAPTURE(at);
  REQUIRE(got_rows.size() == want_rows.size());
  for (std::size_t r = 0; r < want_rows.size(); ++r) {
    CHECK(got_rows[r] == want_rows[r]);
  }
}

}  // namespace

TEST_SUITE("golden") {
  TEST_CASE("fixture audit matches the golden report tree") {
    testutil::TempDir scratch;
    biasaudit::pipeline::RunConfig config;
    config.corpus_path = testutil::data_dir() / "fixture" / "corpus.jsonl";
    config.blacklist_path = testutil::data_dir() / "blacklist.json";
    config.stopwords_path = testutil::data_dir() / "stopwords_en.txt";
    config.lexicon_path = testutil::data_dir() / "sentiment_lexicon.tsv";
    config.out_dir = scratch.path() / "out";
    config.deterministic = true;
    biasaudit::pipeline::run_audit(config);

    if (std::getenv("BIASAUDIT_REGEN_GOLDEN") != nullptr) {
      for (const char* rel : kGoldenFiles) {
        const fs::path dst = golden_dir() / rel;
        fs::create_directories(dst.parent_path());
        fs::copy_file(config.out_dir / rel, dst,
                      fs::copy_options::overwrite_existing);
      }
      MESSAGE("golden files regenerated; rerun without "
              "BIASAUDIT_REGEN_GOLDEN");
      return;
    }

    for (const char* rel : kGoldenFiles) {
      const fs::path golden_path = golden_dir() / rel;
      REQUIRE_MESSAGE(fs::exists(golden_path),
                      "missing golden file: " << golden_path.string());
      const std::string got = testutil::read_file(config.out_dir / rel);
      const std::string want = testutil::read_file(golden_path);
      if (fs::path(rel).extension() == ".json") {
        compare_json(json::parse(got), json::parse(want), rel);
      } else {
        compare_csv(got, want, rel);
      }
    }
  }
}
