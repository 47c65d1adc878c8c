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

#include <map>
#include <string>

#include "biasaudit/errors.hpp"
#include "biasaudit/names.hpp"
#include "testutil.hpp"

namespace names = biasaudit::names;
using biasaudit::ValidationError;

namespace {

names::Blacklist make_blacklist() {
  names::Blacklist bl;
  bl.deceased = {"Albert Einstein", "Isaac Newton"};
  bl.public_figures = {"Elon Musk"};
  bl.spurious = {"Puzzle Columnist"};
  return bl;
}

}  // namespace

TEST_SUITE("names") {
  TEST_CASE("clean_name strips credit prefixes") {
    CHECK(names::clean_name("By Jane Doe") == "Jane Doe");
    CHECK(names::clean_name("by Jane Doe") == "Jane Doe");
    CHECK(names::clean_name("BY  Jane Doe") == "Jane Doe");
    CHECK(names::clean_name("By By Jane Doe") == "Jane Doe");
    // "By" must be a whole token
    CHECK(names::clean_name("Byron Blake") == "Byron Blake");
  }

  TEST_CASE("clean_name normalises whitespace and punctuation") {
    CHECK(names::clean_name("Jane   Doe ") == "Jane Doe");
    CHECK(names::clean_name("  Jane\tDoe\n") == "Jane Doe");
    CHECK(names::clean_name("\"Jane Doe\",") == "Jane Doe");
    CHECK(names::clean_name("J. Doe") == "J. Doe");  // internal dot kept
    CHECK(names::clean_name(",by Jane Doe") == "Jane Doe");
  }

  TEST_CASE("clean_name rejects empty results") {
    CHECK_THROWS_AS(names::clean_name(","), ValidationError);
    CHECK_THROWS_AS(names::clean_name("  "), ValidationError);
    CHECK_THROWS_AS(names::clean_name("-- .. --"), ValidationError);
  }

  TEST_CASE("clean_name composes decomposed accents") {
    // "Gödel" with o + combining diaeresis vs the precomposed form
    const std::string decomposed = "Go\xCC\x88"  "del";
    const std::string composed = "G\xC3\xB6"  "del";
    CHECK(names::clean_name(decomposed) == composed);
    CHECK(names::clean_name(composed) == composed);
  }

  TEST_CASE("clean_name composes Hangul jamo sequences") {
    // "한 강" typed as L/V/T jamo; expected bytes taken from the NFC
    // reference normaliser
    const std::string jamo =
        "\xE1\x84\x92\xE1\x85\xA1\xE1\x86\xAB"
        " "
        "\xE1\x84\x80\xE1\x85\xA1\xE1\x86\xBC";
    const std::string syllables = "\xED\x95\x9C \xEA\xB0\x95";
    CHECK(names::clean_name(jamo) == syllables);
    CHECK(names::clean_name(syllables) == syllables);
    // L+V with no trailing consonant
    CHECK(names::clean_name("\xE1\x84\x92\xE1\x85\xA1 X") ==
          "\xED\x95\x98 X");
  }

  TEST_CASE("clean_name is idempotent") {
    const char* samples[] = {
        "By Jane Doe",     " by  by J.  Doe,, ", "Erd\xC5\x91s P\xC3\xA1l",
        "  A B C  ",       "x",                  "by-law Author",
        "Dr. Jane Q. Doe", ",by Zo\xC3\xAB",     "Go\xCC\x88rdon  Freeman"};
    for (const char* raw : samples) {
      const std::string once = names::clean_name(raw);
      CHECK(names::clean_name(once) == once);
    }
  }

  TEST_CASE("clean_name idempotence on random noisy strings") {
    const std::string alphabet =
        " .,;-\"'ABZdefz\xC3\xA9";  // includes a two-byte codepoint
    for (int trial = 0; trial < 300; ++trial) {
      std::string raw;
      const int len = static_cast<int>(testutil::rand_int(1, 24));
      for (int i = 0; i < len; ++i) {
        raw.push_back(alphabet[static_cast<std::size_t>(
            testutil::rand_int(0, static_cast<std::int64_t>(
                                      alphabet.size() - 1)))]);
      }
      std::string once;
      try {
        once = names::clean_name(raw);
      } catch (const ValidationError&) {
        continue;  // cleans to nothing; nothing to check
      }
      CHECK(names::clean_name(once) == once);
    }
  }

  TEST_CASE("is_spurious applies the full-name rule") {
    const names::Blacklist bl = make_blacklist();
    CHECK(names::is_spurious("Einstein", bl));  // single token
    CHECK_FALSE(names::is_spurious("Jane Doe", bl));
    CHECK(names::is_spurious("Puzzle", bl));
    CHECK(names::is_spurious("12 34", bl));        // no alphabetic token
    CHECK(names::is_spurious("Jane 99", bl));      // one alphabetic token
    CHECK_FALSE(names::is_spurious("J. Doe", bl)); // both tokens have letters
    CHECK(names::is_spurious("Puzzle Columnist", bl));  // exact match
  }

  TEST_CASE("filter_mentions removes blacklisted and spurious keys") {
    const names::Blacklist bl = make_blacklist();
    const std::map<std::string, std::int64_t> input = {
        {"Albert Einstein", 5}, {"Jane Doe", 2}};
    const auto out = names::filter_mentions(input, bl);
    CHECK(out == std::map<std::string, std::int64_t>{{"Jane Doe", 2}});

    CHECK(names::filter_mentions({{"Elon Musk", 9}}, bl).empty());
    CHECK(names::filter_mentions({}, bl).empty());
  }

  TEST_CASE("filter_mentions keeps counts and is a key subset") {
    const names::Blacklist bl = make_blacklist();
    for (int trial = 0; trial < 100; ++trial) {
      std::map<std::string, std::int64_t> input;
      const char* pool[] = {"Jane Doe",    "Albert Einstein", "Solo",
                            "Mark Twist",  "Elon Musk",       "Ab Cd",
                            "Puzzle",      "Nina Petrova",    "X 1"};
      const int picks = static_cast<int>(testutil::rand_int(0, 8));
      for (int i = 0; i < picks; ++i) {
        input[pool[testutil::rand_int(0, 8)]] = testutil::rand_int(1, 50);
      }
      const auto out = names::filter_mentions(input, bl);
      for (const auto& [name, count] : out) {
        REQUIRE(input.count(name) == 1);
        CHECK(input.at(name) == count);
        CHECK_FALSE(names::is_spurious(name, bl));
      }
    }
  }

  TEST_CASE("load_blacklist canonicalises entries") {
    testutil::TempDir dir;
    const auto path = dir.path() / "bl.json";
    testutil::write_file(path, R"({
      "deceased": ["  Albert   Einstein "],
      "public_figures": ["By Elon Musk"],
      "spurious": [",", "Puzzle"]
    })");
    const auto bl = names::load_blacklist(path);
    CHECK(bl.deceased.count("Albert Einstein") == 1);
    CHECK(bl.public_figures.count("Elon Musk") == 1);
    // "," cleans to nothing and is dropped; it can never match a canonical
    // key anyway
    CHECK(bl.spurious.count("Puzzle") == 1);
    CHECK(bl.spurious.size() == 1);
  }

  TEST_CASE("load_blacklist rejects bad files") {
    testutil::TempDir dir;
    CHECK_THROWS_AS(names::load_blacklist(dir.path() / "missing.json"),
                    biasaudit::IoError);
    const auto path = dir.path() / "bad.json";
    testutil::write_file(path, R"({"deceased": []})");
    CHECK_THROWS_AS(names::load_blacklist(path), ValidationError);
  }
}
