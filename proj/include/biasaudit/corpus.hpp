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

#ifndef BIASAUDIT_CORPUS_HPP_
#define BIASAUDIT_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace biasaudit::corpus {

// One outlet story. mention_counts carries the raw per-person tallies as
// extracted upstream; keys are uncleaned name strings, values are >= 1.
struct Article {
  std::string id;
  std::string outlet;
  std::string title;
  std::vector<std::string> authors;
  std::string date;  // validated ISO-8601 calendar date, "YYYY-MM-DD"
  std::map<std::string, std::int64_t> mention_counts;
  std::optional<std::string> url;

  bool operator==(const Article&) const = default;
};

// Immutable once loaded; safe to share across threads.
struct Corpus {
  std::vector<Article> articles;
  std::set<std::string> outlets;  // derived: distinct outlet ids

  bool operator==(const Corpus&) const = default;
};

struct LoadResult {
  Corpus corpus;
  std::size_t skipped_lines = 0;  // lenient mode only
};

// Reads a JSON-Lines file, one article object per line:
//   {"id": str, "outlet": str, "title": str, "authors": [str],
//    "date": "YYYY-MM-DD", "mention_counts": {str: int}, "url": str?}
// In strict mode any invalid line aborts with the line number and field; in
// lenient mode invalid lines are counted and skipped. Duplicate ids are an
// error in both modes.
LoadResult load_corpus(const std::filesystem::path& path, bool strict);

// One JSON object per line, preserving article order. load(write(c)) == c.
void write_jsonl(const Corpus& corpus, std::ostream& out);

// Every article ends up in exactly one partition, keyed by its outlet.
std::map<std::string, std::vector<Article>> partition_by_outlet(
    const Corpus& corpus);

// True iff s is a valid ISO-8601 calendar date (leap years included).
bool valid_date(std::string_view s);

}  // namespace biasaudit::corpus

#endif  // BIASAUDIT_CORPUS_HPP_
