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
#include <vector>

#include "biasaudit/errors.hpp"
#include "biasaudit/text.hpp"
#include "testutil.hpp"

namespace text = biasaudit::text;
using biasaudit::ValidationError;

namespace {

const std::set<std::string>& stopwords() {
  static const std::set<std::string> words =
      text::load_stopwords(testutil::data_dir() / "stopwords_en.txt");
  return words;
}

}  // namespace

TEST_SUITE("text.tokenize") {
  TEST_CASE("drops stopwords and short tokens") {
    // verified against the pinned stopword list
    CHECK(text::tokenize_title("A New Era of Computing", stopwords()) ==
          std::vector<std::string>{"new", "era", "computing"});
  }

  TEST_CASE("empty title tokenizes to nothing") {
    CHECK(text::tokenize_title("", stopwords()).empty());
    CHECK(text::tokenize_title("of the a an", stopwords()).empty());
  }

  TEST_CASE("whitelist admits short domain terms") {
    CHECK(text::tokenize_title("AI wins", stopwords(), 3, {"ai"}) ==
          std::vector<std::string>{"ai", "wins"});
    // without the whitelist the short token disappears
    CHECK(text::tokenize_title("AI wins", stopwords()) ==
          std::vector<std::string>{"wins"});
  }

  TEST_CASE("splits on non-alphanumeric boundaries") {
    CHECK(text::tokenize_title("quantum-computing's rise", stopwords()) ==
          std::vector<std::string>{"quantum", "computing", "rise"});
    CHECK(text::tokenize_title("CRISPR: 2024 update", stopwords()) ==
          std::vector<std::string>{"crispr", "2024", "update"});
  }

  TEST_CASE("output honours the length and stopword contract") {
    const std::string pool =
        "Why the new quantum proofs of AI-driven era matter so much now";
    for (std::size_t min_len : {1u, 3u, 5u}) {
      const auto tokens =
          text::tokenize_title(pool, stopwords(), min_len, {"ai"});
      for (const auto& t : tokens) {
        const bool whitelisted = t == "ai";
        if (!whitelisted) {
          CHECK(t.size() >= min_len);
          CHECK(stopwords().count(t) == 0);
        }
        for (char c : t) {
          CHECK((std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                 static_cast<unsigned char>(c) >= 0x80));
        }
      }
    }
  }

  TEST_CASE("min_len must be positive") {
    CHECK_THROWS_AS(text::tokenize_title("x", stopwords(), 0, {}),
                    ValidationError);
  }
}

TEST_SUITE("text.term_frequencies") {
  TEST_CASE("counts across titles") {
    const std::vector<std::string> titles = {"Quantum leap",
                                             "Quantum computers"};
    const auto terms = text::term_frequencies(titles, 10, stopwords());
    REQUIRE(!terms.empty());
    CHECK(terms[0] == text::TermFrequency{"quantum", 2});
  }

  TEST_CASE("empty corpus") {
    CHECK(text::term_frequencies({}, 5, stopwords()).empty());
  }

  TEST_CASE("ties break lexicographically at the cut") {
    const std::vector<std::string> titles = {"alpha beta", "beta alpha"};
    const auto terms = text::term_frequencies(titles, 1, stopwords());
    REQUIRE(terms.size() == 1);
    CHECK(terms[0] == text::TermFrequency{"alpha", 2});
  }

  TEST_CASE("totals equal the token multiset") {
    const std::vector<std::string> titles = {
        "The quantum era of quantum computing",
        "New era for quantum computing",
        "Why computing matters"};
    const auto terms = text::term_frequencies(titles, 100, stopwords());
    std::map<std::string, std::int64_t> expected;
    for (const auto& t : titles) {
      for (const auto& token : text::tokenize_title(t, stopwords())) {
        ++expected[token];
      }
    }
    REQUIRE(terms.size() == expected.size());
    for (const auto& t : terms) {
      CHECK(expected.at(t.term) == t.count);
    }
  }
}

TEST_SUITE("text.boxplot") {
  TEST_CASE("constant scores") {
    const std::vector<double> x = {0, 0, 0};
    const auto box = text::sentiment_distribution(x);
    CHECK(box.min == 0.0);
    CHECK(box.q1 == 0.0);
    CHECK(box.median == 0.0);
    CHECK(box.q3 == 0.0);
    CHECK(box.max == 0.0);
    CHECK(box.mean == 0.0);
  }

  TEST_CASE("symmetric scores") {
    const std::vector<double> x = {-1, 0, 1};
    const auto box = text::sentiment_distribution(x);
    CHECK(box.median == 0.0);
    CHECK(box.min == -1.0);
    CHECK(box.max == 1.0);
    CHECK(box.mean == doctest::Approx(0.0));
  }

  TEST_CASE("quartiles interpolate between order statistics") {
    const std::vector<double> x = {1, 2, 3, 4};
    const auto box = text::sentiment_distribution(x);
    CHECK(box.q1 == doctest::Approx(1.75));
    CHECK(box.q3 == doctest::Approx(3.25));
    CHECK(box.median == doctest::Approx(2.5));
    CHECK(box.mean == doctest::Approx(2.5));
  }

  TEST_CASE("ordering invariant min <= q1 <= median <= q3 <= max") {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x;
      const int n = static_cast<int>(testutil::rand_int(1, 60));
      for (int i = 0; i < n; ++i) x.push_back(testutil::rand_unit() * 2 - 1);
      const auto box = text::sentiment_distribution(x);
      CHECK(box.min <= box.q1);
      CHECK(box.q1 <= box.median);
      CHECK(box.median <= box.q3);
      CHECK(box.q3 <= box.max);
    }
  }

  TEST_CASE("empty input is rejected") {
    CHECK_THROWS_AS(text::sentiment_distribution({}), ValidationError);
  }
}

TEST_SUITE("text.stopwords") {
  TEST_CASE("pinned list loads with 318 entries") {
    CHECK(stopwords().size() == 318);
    CHECK(stopwords().count("the") == 1);
    CHECK(stopwords().count("quantum") == 0);
  }

  TEST_CASE("missing file raises IoError") {
    CHECK_THROWS_AS(text::load_stopwords("/nonexistent/stopwords.txt"),
                    biasaudit::IoError);
  }
}
