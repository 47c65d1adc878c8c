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

#ifndef BIASAUDIT_NAMES_HPP_
#define BIASAUDIT_NAMES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace biasaudit::names {

// Three exact-match name sets, all stored in canonical (cleaned) form:
// deceased scientists, non-scientist public figures, and spurious tokens.
struct Blacklist {
  std::set<std::string> deceased;
  std::set<std::string> public_figures;
  std::set<std::string> spurious;
};

// Canonicalises a raw person-name string:
//   - Unicode canonical composition (combining marks merged into precomposed
//     characters, so decomposed and composed accents compare equal),
//   - surrounding whitespace/punctuation trimmed,
//   - leading "By " credit tokens removed (case-insensitive, repeatedly),
//   - internal whitespace runs collapsed to single spaces.
// Letter case is otherwise preserved. Idempotent. Throws ValidationError if
// nothing is left after cleaning.
std::string clean_name(std::string_view raw);

// True iff the canonical name has fewer than two alphabetic tokens or
// exactly matches an entry of the blacklist's spurious set.
bool is_spurious(std::string_view canonical, const Blacklist& blacklist);

// Drops every key that exactly matches a deceased/public-figure entry or is
// spurious. Surviving counts are unchanged. Keys must be canonical.
std::map<std::string, std::int64_t> filter_mentions(
    const std::map<std::string, std::int64_t>& mentions,
    const Blacklist& blacklist);

// Reads a blacklist JSON file:
//   {"deceased": [...], "public_figures": [...], "spurious": [...]}
// Entries are canonicalised on load.
Blacklist load_blacklist(const std::filesystem::path& path);

}  // namespace biasaudit::names

#endif  // BIASAUDIT_NAMES_HPP_
