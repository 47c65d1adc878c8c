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

#include "biasaudit/anonymize.hpp"

#include <cctype>
#include <cstdio>
#include <set>

#include "biasaudit/csv.hpp"
#include "biasaudit/errors.hpp"
#include "biasaudit/names.hpp"

namespace biasaudit::anonymize {

AnonymizationMap build_author_map(std::span<const corpus::Article> articles) {
  std::set<std::string> canonical;
  for (const corpus::Article& article : articles) {
    for (const std::string& byline : article.authors) {
      canonical.insert(names::clean_name(byline));
    }
  }
  if (canonical.size() > 999) {
    throw ValidationError(
        "anonymize: " + std::to_string(canonical.size()) +
        " distinct authors exceed the Author_XXX alias space (999)");
  }
  AnonymizationMap map;
  int index = 0;
  for (const std::string& name : canonical) {
    char alias[20];
    std::snprintf(alias, sizeof(alias), "Author_%03d", ++index);
    map.forward.emplace(name, alias);
    map.reverse.emplace(alias, name);
  }
  return map;
}

AnonymizationMap build_author_map(const corpus::Corpus& corpus) {
  return build_author_map(std::span<const corpus::Article>(corpus.articles));
}

std::map<std::string, std::int64_t> apply_anonymization(
    const std::map<std::string, std::int64_t>& mentions,
    const AnonymizationMap& map) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [name, count] : mentions) {
    auto it = map.forward.find(name);
    const std::string& key = it != map.forward.end() ? it->second : name;
    out[key] += count;
  }
  return out;
}

bool is_alias(std::string_view s) {
  constexpr std::string_view prefix = "Author_";
  if (s.size() != prefix.size() + 3 || s.substr(0, prefix.size()) != prefix) {
    return false;
  }
  for (char c : s.substr(prefix.size())) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

void write_alias_csv(const AnonymizationMap& map, std::ostream& out) {
  csv::Writer writer(out, {"author", "alias"});
  for (const auto& [author, alias] : map.forward) {
    writer.row({author, alias});
  }
}

}  // namespace biasaudit::anonymize
