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

#include "biasaudit/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "biasaudit/errors.hpp"
#include "biasaudit/kernels.hpp"
#include "biasaudit/stats.hpp"

namespace biasaudit::text {
namespace {

bool is_token_char(unsigned char c) {
  // ASCII alphanumerics plus all non-ASCII bytes, so accented words stay in
  // one piece. Apostrophes, hyphens etc. split.
  return std::isalnum(c) != 0 || c >= 0x80;
}

// Token length in codepoints, approximated as non-continuation bytes.
std::size_t codepoint_length(std::string_view token) {
  std::size_t len = 0;
  for (unsigned char c : token) {
    if ((c & 0xC0) != 0x80) ++len;
  }
  return len;
}

}  // namespace

std::vector<std::string> tokenize_title(
    std::string_view title, const std::set<std::string>& stopwords,
    std::size_t min_len, const std::set<std::string>& whitelist) {
  if (min_len < 1) {
    throw ValidationError("text: tokenize_title requires min_len >= 1");
  }
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    std::string token;
    token.reserve(current.size());
    for (char c : current) {
      token.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    current.clear();
    const bool whitelisted = whitelist.count(token) > 0;
    if (!whitelisted) {
      if (codepoint_length(token) < min_len) return;
      if (stopwords.count(token) > 0) return;
    }
    tokens.push_back(std::move(token));
  };
  for (char c : title) {
    if (is_token_char(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<TermFrequency> term_frequencies(
    std::span<const std::string> titles, std::size_t k,
    const std::set<std::string>& stopwords, std::size_t min_len,
    const std::set<std::string>& whitelist) {
  if (k < 1) {
    throw ValidationError("text: term_frequencies requires k >= 1");
  }
  std::map<std::string, std::int64_t> counts;
  for (const std::string& title : titles) {
    for (std::string& token :
         tokenize_title(title, stopwords, min_len, whitelist)) {
      ++counts[token];
    }
  }
  std::vector<TermFrequency> terms;
  terms.reserve(counts.size());
  for (const auto& [term, count] : counts) {
    terms.push_back({term, count});
  }
  std::sort(terms.begin(), terms.end(),
            [](const TermFrequency& a, const TermFrequency& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.term < b.term;
            });
  if (terms.size() > k) terms.resize(k);
  return terms;
}

BoxplotStats sentiment_distribution(std::span<const double> compounds) {
  if (compounds.empty()) {
    throw ValidationError("text: sentiment_distribution of an empty list");
  }
  std::vector<double> sorted(compounds.begin(), compounds.end());
  std::sort(sorted.begin(), sorted.end());
  BoxplotStats box;
  box.min = sorted.front();
  box.max = sorted.back();
  box.q1 = stats::percentile(sorted, 25.0);
  box.median = stats::percentile(sorted, 50.0);
  box.q3 = stats::percentile(sorted, 75.0);
  box.mean = kernels::sum(sorted) / static_cast<double>(sorted.size());
  return box;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("text: cannot read stopword file " + path.string());
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(line);
  }
  return words;
}

}  // namespace biasaudit::text
