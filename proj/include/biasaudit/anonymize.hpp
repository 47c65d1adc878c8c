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

#ifndef BIASAUDIT_ANONYMIZE_HPP_
#define BIASAUDIT_ANONYMIZE_HPP_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "biasaudit/corpus.hpp"

namespace biasaudit::anonymize {

// Deterministic bijection between canonical byline names and Author_XXX
// aliases. forward and reverse are exact inverses.
struct AnonymizationMap {
  std::map<std::string, std::string> forward;  // byline -> alias
  std::map<std::string, std::string> reverse;  // alias -> byline
};

// Collects the distinct canonical byline names across the given articles,
// sorts them lexicographically, and assigns Author_001, Author_002, ... in
// that order. Throws if more than 999 distinct authors would be needed; the
// alias pattern is fixed at three digits and widening it is a policy change,
// not a fallback.
AnonymizationMap build_author_map(std::span<const corpus::Article> articles);
AnonymizationMap build_author_map(const corpus::Corpus& corpus);

// Renames every key that equals a byline name to its alias, merging counts
// if the alias collides with an existing key. Aliases are never re-mapped,
// so applying twice equals applying once. Total mention mass is preserved.
std::map<std::string, std::int64_t> apply_anonymization(
    const std::map<std::string, std::int64_t>& mentions,
    const AnonymizationMap& map);

// True iff s matches Author_ followed by exactly three decimal digits.
bool is_alias(std::string_view s);

// Restricted output: CSV with header "author,alias", sorted by author.
void write_alias_csv(const AnonymizationMap& map, std::ostream& out);

}  // namespace biasaudit::anonymize

#endif  // BIASAUDIT_ANONYMIZE_HPP_
