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

#include "biasaudit/corpus.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <string>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "biasaudit/errors.hpp"

namespace biasaudit::corpus {
namespace {

using nlohmann::json;

std::string line_tag(std::size_t line_no) {
  return "corpus: line " + std::to_string(line_no) + ": ";
}

const json& require_field(const json& obj, const char* key,
                          std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ValidationError(line_tag(line_no) + "missing required field \"" +
                          key + "\"");
  }
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           std::size_t line_no) {
  const json& v = require_field(obj, key, line_no);
  if (!v.is_string()) {
    throw ValidationError(line_tag(line_no) + "field \"" + key +
                          "\" must be a string");
  }
  return v.get<std::string>();
}

Article parse_article(const json& obj, std::size_t line_no) {
  if (!obj.is_object()) {
    throw ValidationError(line_tag(line_no) + "not a JSON object");
  }
  Article a;
  a.id = require_string(obj, "id", line_no);
  if (a.id.empty()) {
    throw ValidationError(line_tag(line_no) + "field \"id\" must be non-empty");
  }
  a.outlet = require_string(obj, "outlet", line_no);
  if (a.outlet.empty()) {
    throw ValidationError(line_tag(line_no) +
                          "field \"outlet\" must be non-empty");
  }
  a.title = require_string(obj, "title", line_no);

  const json& authors = require_field(obj, "authors", line_no);
  if (!authors.is_array()) {
    throw ValidationError(line_tag(line_no) +
                          "field \"authors\" must be an array");
  }
  for (const auto& entry : authors) {
    if (!entry.is_string() || entry.get<std::string>().empty()) {
      throw ValidationError(line_tag(line_no) +
                            "field \"authors\" entries must be non-empty "
                            "strings");
    }
    a.authors.push_back(entry.get<std::string>());
  }

  a.date = require_string(obj, "date", line_no);
  if (!valid_date(a.date)) {
    throw ValidationError(line_tag(line_no) + "field \"date\" value \"" +
                          a.date + "\" is not a valid calendar date");
  }

  const json& counts = require_field(obj, "mention_counts", line_no);
  if (!counts.is_object()) {
    throw ValidationError(line_tag(line_no) +
                          "field \"mention_counts\" must be an object");
  }
  for (const auto& [name, value] : counts.items()) {
    if (!value.is_number_integer()) {
      throw ValidationError(line_tag(line_no) + "mention count for \"" + name +
                            "\" must be an integer");
    }
    const auto count = value.get<std::int64_t>();
    if (count < 1) {
      throw ValidationError(line_tag(line_no) + "mention count for \"" + name +
                            "\" must be >= 1, got " + std::to_string(count));
    }
    a.mention_counts.emplace(name, count);
  }

  if (auto it = obj.find("url"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw ValidationError(line_tag(line_no) + "field \"url\" must be a "
                            "string");
    }
    a.url = it->get<std::string>();
  }
  return a;
}

json article_to_json(const Article& a) {
  json obj;
  obj["id"] = a.id;
  obj["outlet"] = a.outlet;
  obj["title"] = a.title;
  obj["authors"] = a.authors;
  obj["date"] = a.date;
  obj["mention_counts"] = a.mention_counts;
  if (a.url) obj["url"] = *a.url;
  return obj;
}

}  // namespace

bool valid_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  auto parse_int = [](std::string_view field, int& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };
  int year = 0;
  int month = 0;
  int day = 0;
  if (!parse_int(s.substr(0, 4), year) || !parse_int(s.substr(5, 2), month) ||
      !parse_int(s.substr(8, 2), day)) {
    return false;
  }
  const std::chrono::year_month_day ymd{
      std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
      std::chrono::day{static_cast<unsigned>(day)}};
  return ymd.ok();
}

LoadResult load_corpus(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("corpus: cannot read file " + path.string());
  }
  LoadResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Article article;
    try {
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::parse_error& e) {
        throw ValidationError(line_tag(line_no) + "malformed JSON: " +
                              e.what());
      }
      article = parse_article(obj, line_no);
    } catch (const ValidationError&) {
      if (strict) throw;
      ++result.skipped_lines;
      continue;
    }
    // Duplicate ids are a corpus-identity problem, not a single bad line:
    // they abort in lenient mode too.
    if (!seen_ids.insert(article.id).second) {
      throw ValidationError(line_tag(line_no) + "duplicate article id \"" +
                            article.id + "\"");
    }
    result.corpus.outlets.insert(article.outlet);
    result.corpus.articles.push_back(std::move(article));
  }
  return result;
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const Article& a : corpus.articles) {
    out << article_to_json(a).dump() << '\n';
  }
}

std::map<std::string, std::vector<Article>> partition_by_outlet(
    const Corpus& corpus) {
  std::map<std::string, std::vector<Article>> partitions;
  for (const Article& a : corpus.articles) {
    partitions[a.outlet].push_back(a);
  }
  return partitions;
}

}  // namespace biasaudit::corpus
