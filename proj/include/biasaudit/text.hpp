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

#ifndef BIASAUDIT_TEXT_HPP_
#define BIASAUDIT_TEXT_HPP_

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace biasaudit::text {

inline constexpr std::size_t kDefaultMinTokenLength = 3;

struct TermFrequency {
  std::string term;  // lowercase token
  std::int64_t count = 0;

  bool operator==(const TermFrequency&) const = default;
};

// Compound-score distribution statistics for one outlet's titles.
struct BoxplotStats {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

// Lowercases, splits on non-alphanumeric boundaries, drops stopwords and
// tokens shorter than min_len unless whitelisted. Preserves title order.
std::vector<std::string> tokenize_title(
    std::string_view title, const std::set<std::string>& stopwords,
    std::size_t min_len = kDefaultMinTokenLength,
    const std::set<std::string>& whitelist = {});

// Token counts over all titles, top k, ties broken lexicographically.
std::vector<TermFrequency> term_frequencies(
    std::span<const std::string> titles, std::size_t k,
    const std::set<std::string>& stopwords,
    std::size_t min_len = kDefaultMinTokenLength,
    const std::set<std::string>& whitelist = {});

// Quartiles by linear interpolation between order statistics.
BoxplotStats sentiment_distribution(std::span<const double> compounds);

// Newline-delimited stopword file; blank lines and #-comments ignored.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

}  // namespace biasaudit::text

#endif  // BIASAUDIT_TEXT_HPP_
