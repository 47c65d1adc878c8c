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

#include "biasaudit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "biasaudit/errors.hpp"
#include "biasaudit/kernels.hpp"

namespace biasaudit::stats {
namespace {

std::vector<double> sorted_ascending(std::span<const double> counts) {
  std::vector<double> x(counts.begin(), counts.end());
  std::sort(x.begin(), x.end());
  return x;
}

// Number of largest observations to drop for a display series.
std::size_t trim_count(std::size_t n, double fraction, const char* op) {
  if (fraction < 0.0 || fraction >= 1.0) {
    throw ValidationError(std::string("stats: ") + op +
                          ": trim fraction must be in [0, 1)");
  }
  return static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n)));
}

}  // namespace

MentionLedger aggregate(std::span<const corpus::Article> articles,
                        const names::Blacklist& blacklist,
                        const anonymize::AnonymizationMap& map) {
  MentionLedger ledger;
  for (const corpus::Article& article : articles) {
    if (ledger.outlet.empty()) {
      ledger.outlet = article.outlet;
    } else if (ledger.outlet != article.outlet) {
      throw ValidationError("stats: aggregate got mixed outlets \"" +
                            ledger.outlet + "\" and \"" + article.outlet +
                            "\"");
    }

    // Canonicalise raw keys, merging counts that collapse to one name.
    // Keys that clean to nothing are stray punctuation: spurious by
    // definition, dropped here.
    std::map<std::string, std::int64_t> cleaned;
    for (const auto& [raw, count] : article.mention_counts) {
      try {
        cleaned[names::clean_name(raw)] += count;
      } catch (const ValidationError&) {
      }
    }
    const auto filtered = names::filter_mentions(cleaned, blacklist);
    const auto mentions = anonymize::apply_anonymization(filtered, map);

    for (const auto& [person, count] : mentions) {
      ledger.person_totals[person] += count;
      ledger.person_articles[person].insert(article.id);
    }

    // Co-authored pieces credit every listed author fully.
    std::set<std::string> aliases;
    for (const std::string& byline : article.authors) {
      const std::string canonical = names::clean_name(byline);
      auto it = map.forward.find(canonical);
      if (it == map.forward.end()) {
        throw ValidationError("stats: author \"" + canonical +
                              "\" missing from the anonymization map");
      }
      aliases.insert(it->second);
    }
    for (const std::string& alias : aliases) {
      for (const auto& [person, count] : mentions) {
        AuthorPersonStats& s = ledger.author_person[{alias, person}];
        s.mentions += count;
        s.articles.insert(article.id);
      }
    }
  }
  return ledger;
}

void merge(MentionLedger& dst, const MentionLedger& src) {
  if (dst.outlet.empty()) dst.outlet = src.outlet;
  if (!src.outlet.empty() && dst.outlet != src.outlet) {
    throw ValidationError("stats: merge got mixed outlets \"" + dst.outlet +
                          "\" and \"" + src.outlet + "\"");
  }
  for (const auto& [person, count] : src.person_totals) {
    dst.person_totals[person] += count;
  }
  for (const auto& [person, articles] : src.person_articles) {
    dst.person_articles[person].insert(articles.begin(), articles.end());
  }
  for (const auto& [key, stats] : src.author_person) {
    AuthorPersonStats& s = dst.author_person[key];
    s.mentions += stats.mentions;
    s.articles.insert(stats.articles.begin(), stats.articles.end());
  }
}

double gini(std::span<const double> counts) {
  if (counts.empty()) {
    throw ValidationError("stats: gini of an empty list");
  }
  for (double v : counts) {
    if (!(v > 0.0)) {
      throw ValidationError("stats: gini requires positive counts");
    }
  }
  const std::vector<double> x = sorted_ascending(counts);
  const double n = static_cast<double>(x.size());
  const double total = kernels::sum(x);
  const double weighted = kernels::rank_weighted_sum(x);
  return 2.0 * weighted / (n * total) - (n + 1.0) / n;
}

double skewness(std::span<const double> counts, bool adjusted) {
  const double n = static_cast<double>(counts.size());
  if (counts.size() < 3) {
    throw ValidationError("stats: skewness requires n >= 3");
  }
  const double mean = kernels::sum(counts) / n;
  const kernels::CenteredSums sums = kernels::centered_sums(counts, mean);
  const double m2 = sums.m2 / n;
  const double m3 = sums.m3 / n;
  if (m2 <= 0.0) {
    throw ValidationError("stats: skewness requires nonzero variance");
  }
  const double g1 = m3 / std::pow(m2, 1.5);
  if (!adjusted) return g1;
  return g1 * std::sqrt(n * (n - 1.0)) / (n - 2.0);
}

double zipf_slope(std::span<const double> counts_by_rank) {
  const std::size_t n = counts_by_rank.size();
  if (n < 2) {
    throw ValidationError("stats: zipf_slope requires at least 2 points");
  }
  std::vector<double> log_rank(n);
  std::vector<double> log_count(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(counts_by_rank[i] > 0.0)) {
      throw ValidationError("stats: zipf_slope requires positive counts");
    }
    log_rank[i] = std::log(static_cast<double>(i + 1));
    log_count[i] = std::log(counts_by_rank[i]);
  }
  const double nn = static_cast<double>(n);
  const double su = kernels::sum(log_rank);
  const double sv = kernels::sum(log_count);
  const double suu = kernels::dot(log_rank, log_rank);
  const double suv = kernels::dot(log_rank, log_count);
  const double denom = nn * suu - su * su;
  return (nn * suv - su * sv) / denom;
}

std::vector<RcdfPoint> reverse_cdf(std::span<const double> counts,
                                   double trim_top_fraction) {
  if (counts.empty()) {
    throw ValidationError("stats: reverse_cdf of an empty list");
  }
  std::vector<double> x = sorted_ascending(counts);
  const std::size_t drop = trim_count(x.size(), trim_top_fraction,
                                      "reverse_cdf");
  if (drop >= x.size()) {
    throw ValidationError("stats: reverse_cdf series empty after trimming");
  }
  x.resize(x.size() - drop);

  const double survivors = static_cast<double>(x.size());
  std::vector<RcdfPoint> series;
  // x is ascending, so at index i exactly (size - i) values are >= x[i].
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0 && x[i] == x[i - 1]) continue;
    series.push_back(
        {x[i], static_cast<double>(x.size() - i) / survivors});
  }
  return series;
}

std::vector<std::pair<std::int64_t, std::int64_t>> histogram_series(
    std::span<const std::int64_t> counts, double exclude_top_fraction) {
  if (counts.empty()) {
    throw ValidationError("stats: histogram_series of an empty list");
  }
  std::vector<std::int64_t> x(counts.begin(), counts.end());
  std::sort(x.begin(), x.end());
  const std::size_t drop = trim_count(x.size(), exclude_top_fraction,
                                      "histogram_series");
  if (drop >= x.size()) {
    throw ValidationError("stats: histogram series empty after exclusion");
  }
  x.resize(x.size() - drop);

  std::vector<std::pair<std::int64_t, std::int64_t>> bins;
  for (std::int64_t v : x) {
    if (bins.empty() || bins.back().first != v) {
      bins.emplace_back(v, 1);
    } else {
      ++bins.back().second;
    }
  }
  return bins;
}

double percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) {
    throw ValidationError("stats: percentile of an empty list");
  }
  if (p < 0.0 || p > 100.0) {
    throw ValidationError("stats: percentile p out of range");
  }
  if (sorted.size() == 1) return sorted[0];
  const double h = (p / 100.0) * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - std::floor(h);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<std::pair<std::string, std::int64_t>> ranked_totals(
    const MentionLedger& ledger) {
  std::vector<std::pair<std::string, std::int64_t>> ranked(
      ledger.person_totals.begin(), ledger.person_totals.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

DistributionSummary summarize(const MentionLedger& ledger,
                              bool adjusted_skewness) {
  if (ledger.person_totals.empty()) {
    throw ValidationError("stats: summarize of an empty ledger");
  }
  DistributionSummary summary;
  summary.n = ledger.person_totals.size();
  summary.distinct = summary.n;

  std::vector<double> counts;
  counts.reserve(summary.n);
  for (const auto& [person, count] : ledger.person_totals) {
    summary.total += count;
    counts.push_back(static_cast<double>(count));
  }

  summary.gini = gini(counts);

  try {
    summary.skewness = skewness(counts, adjusted_skewness);
  } catch (const ValidationError&) {
    // undefined for n < 3 or constant counts
  }

  const auto ranked = ranked_totals(ledger);
  std::vector<double> by_rank;
  by_rank.reserve(ranked.size());
  for (const auto& [person, count] : ranked) {
    by_rank.push_back(static_cast<double>(count));
  }
  if (by_rank.size() >= 2) {
    summary.zipf_slope = zipf_slope(by_rank);
  }

  std::sort(counts.begin(), counts.end());
  summary.percentiles["p50"] = percentile(counts, 50.0);
  summary.percentiles["p90"] = percentile(counts, 90.0);
  summary.percentiles["p99"] = percentile(counts, 99.0);
  return summary;
}

}  // namespace biasaudit::stats
