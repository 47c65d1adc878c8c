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

#ifndef BIASAUDIT_SENTIMENT_HPP_
#define BIASAUDIT_SENTIMENT_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace biasaudit::sentiment {

// Token valence table, loaded from a tab-separated file of
// token<TAB>valence lines (valence a signed decimal). Extra columns are
// ignored; blank lines and #-comments skipped.
class Lexicon {
 public:
  static Lexicon load(const std::filesystem::path& path);

  // Tokens are stored lowercase; lookups expect lowercase input.
  const std::map<std::string, double>& entries() const { return entries_; }

  bool contains(const std::string& token) const {
    return entries_.count(token) > 0;
  }
  double valence(const std::string& token) const {
    return entries_.at(token);
  }

  // Test hook: a lexicon with every valence negated.
  Lexicon negated() const;

 private:
  std::map<std::string, double> entries_;
};

struct SentimentScore {
  double compound = 0.0;  // in [-1, 1]
  double positive = 0.0;  // fractions; sum to 1 when the title has tokens
  double neutral = 0.0;
  double negative = 0.0;
};

// VADER rule-based scorer: lexicon valence lookup, booster/dampener
// modification with distance decay, negation flipping within a three-token
// window, all-caps and punctuation emphasis, special-case idioms, "but"
// clause weighting, and compound normalisation s / sqrt(s^2 + 15).
//
// Matches the reference rule-based scorer; see tools/sentiment_reference.py
// and the frozen expectations in tests/data/sentiment_oracle.tsv.
SentimentScore score_title(std::string_view title, const Lexicon& lexicon);

}  // namespace biasaudit::sentiment

#endif  // BIASAUDIT_SENTIMENT_HPP_
