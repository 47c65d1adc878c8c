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

#ifndef BIASAUDIT_BIAS_HPP_
#define BIASAUDIT_BIAS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "biasaudit/anonymize.hpp"
#include "biasaudit/corpus.hpp"
#include "biasaudit/names.hpp"
#include "biasaudit/stats.hpp"

namespace biasaudit::bias {

// Default repetition-flag thresholds, both read strictly ("more than").
inline constexpr std::int64_t kDefaultFlagArticles = 5;
inline constexpr std::int64_t kDefaultFlagMentions = 15;

// One (author, person) repetition record: how many distinct articles by this
// author mention the person and the mentions accumulated across them.
struct RepetitionRecord {
  std::string author;  // alias
  std::string person;
  std::int64_t article_count = 0;
  std::int64_t cumulative_mentions = 0;
  bool flagged = false;  // article_count > A and cumulative_mentions > M
};

// Author-level repetition-bias profile: the Herfindahl-Hirschman index of
// the author's person-mention shares plus the full record list, sorted by
// cumulative mentions descending.
struct AuthorBiasProfile {
  std::string author;
  double hhi = 0.0;  // in [1/m, 1] for m distinct persons
  std::vector<RepetitionRecord> records;
};

// One profile per author with at least one surviving mention, ordered by
// alias.
std::vector<AuthorBiasProfile> repetition_index(
    const stats::MentionLedger& ledger,
    std::int64_t flag_articles = kDefaultFlagArticles,
    std::int64_t flag_mentions = kDefaultFlagMentions);

struct TopMention {
  std::string person;
  std::int64_t count = 0;
  double share_pct = 0.0;  // full-precision percentage of the top-k total
};

// Top k persons by count (ties broken by name). Shares are percentages of
// the top-k sum; display rounding to 2 decimals happens at emission.
std::vector<TopMention> top_mentioned(const stats::MentionLedger& ledger,
                                      std::size_t k);

struct CoMentionEdge {
  std::string a;  // lexicographically smaller endpoint
  std::string b;
  std::int64_t weight = 0;  // number of articles mentioning both
};

// Presence-based co-mention graph: every unordered pair of distinct
// surviving persons in an article gains weight 1. Edges are returned sorted
// by weight descending, then endpoints ascending.
std::vector<CoMentionEdge> co_mention_edges(
    std::span<const corpus::Article> articles,
    const names::Blacklist& blacklist,
    const anonymize::AnonymizationMap& map);

}  // namespace biasaudit::bias

#endif  // BIASAUDIT_BIAS_HPP_
