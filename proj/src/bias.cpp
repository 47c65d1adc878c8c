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

#include "biasaudit/bias.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "biasaudit/errors.hpp"
#include "biasaudit/kernels.hpp"

namespace biasaudit::bias {

std::vector<AuthorBiasProfile> repetition_index(
    const stats::MentionLedger& ledger, std::int64_t flag_articles,
    std::int64_t flag_mentions) {
  std::map<std::string, std::vector<RepetitionRecord>> by_author;
  for (const auto& [key, s] : ledger.author_person) {
    const auto& [alias, person] = key;
    RepetitionRecord record;
    record.author = alias;
    record.person = person;
    record.article_count = static_cast<std::int64_t>(s.articles.size());
    record.cumulative_mentions = s.mentions;
    record.flagged = record.article_count > flag_articles &&
                     record.cumulative_mentions > flag_mentions;
    by_author[alias].push_back(std::move(record));
  }

  std::vector<AuthorBiasProfile> profiles;
  profiles.reserve(by_author.size());
  for (auto& [alias, records] : by_author) {
    AuthorBiasProfile profile;
    profile.author = alias;

    std::int64_t author_total = 0;
    for (const RepetitionRecord& r : records) {
      author_total += r.cumulative_mentions;
    }
    std::vector<double> shares;
    shares.reserve(records.size());
    for (const RepetitionRecord& r : records) {
      shares.push_back(static_cast<double>(r.cumulative_mentions) /
                       static_cast<double>(author_total));
    }
    profile.hhi = kernels::dot(shares, shares);

    std::sort(records.begin(), records.end(),
              [](const RepetitionRecord& a, const RepetitionRecord& b) {
                if (a.cumulative_mentions != b.cumulative_mentions) {
                  return a.cumulative_mentions > b.cumulative_mentions;
                }
                return a.person < b.person;
              });
    profile.records = std::move(records);
    profiles.push_back(std::move(profile));
  }
  return profiles;
}

std::vector<TopMention> top_mentioned(const stats::MentionLedger& ledger,
                                      std::size_t k) {
  if (k < 1) {
    throw ValidationError("bias: top_mentioned requires k >= 1");
  }
  if (ledger.person_totals.empty()) {
    throw ValidationError("bias: top_mentioned of an empty ledger");
  }
  auto ranked = stats::ranked_totals(ledger);
  if (ranked.size() > k) ranked.resize(k);

  std::int64_t top_total = 0;
  for (const auto& [person, count] : ranked) top_total += count;

  std::vector<TopMention> top;
  top.reserve(ranked.size());
  for (const auto& [person, count] : ranked) {
    top.push_back({person, count,
                   100.0 * static_cast<double>(count) /
                       static_cast<double>(top_total)});
  }
  return top;
}

std::vector<CoMentionEdge> co_mention_edges(
    std::span<const corpus::Article> articles,
    const names::Blacklist& blacklist,
    const anonymize::AnonymizationMap& map) {
  std::map<std::pair<std::string, std::string>, std::int64_t> weights;
  for (const corpus::Article& article : articles) {
    std::map<std::string, std::int64_t> cleaned;
    for (const auto& [raw, count] : article.mention_counts) {
      try {
        cleaned[names::clean_name(raw)] += count;
      } catch (const ValidationError&) {
      }
    }
    const auto surviving = anonymize::apply_anonymization(
        names::filter_mentions(cleaned, blacklist), map);

    // std::map iteration is ordered, so (a, b) pairs come out canonical.
    for (auto it = surviving.begin(); it != surviving.end(); ++it) {
      for (auto jt = std::next(it); jt != surviving.end(); ++jt) {
        ++weights[{it->first, jt->first}];
      }
    }
  }

  std::vector<CoMentionEdge> edges;
  edges.reserve(weights.size());
  for (const auto& [pair, weight] : weights) {
    edges.push_back({pair.first, pair.second, weight});
  }
  std::sort(edges.begin(), edges.end(),
            [](const CoMentionEdge& x, const CoMentionEdge& y) {
              if (x.weight != y.weight) return x.weight > y.weight;
              if (x.a != y.a) return x.a < y.a;
              return x.b < y.b;
            });
  return edges;
}

}  // namespace biasaudit::bias
