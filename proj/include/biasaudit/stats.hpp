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

#ifndef BIASAUDIT_STATS_HPP_
#define BIASAUDIT_STATS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biasaudit/anonymize.hpp"
#include "biasaudit/corpus.hpp"
#include "biasaudit/names.hpp"

namespace biasaudit::stats {

// Per (author alias, person) tallies within one outlet.
struct AuthorPersonStats {
  std::int64_t mentions = 0;
  std::set<std::string> articles;

  bool operator==(const AuthorPersonStats&) const = default;
};

// One outlet's aggregated record: cleaned, blacklist-filtered, anonymised
// mention counts summed across all articles of the outlet.
struct MentionLedger {
  std::string outlet;
  std::map<std::string, std::int64_t> person_totals;
  std::map<std::string, std::set<std::string>> person_articles;
  std::map<std::pair<std::string, std::string>, AuthorPersonStats>
      author_person;  // key: (author alias, person)

  bool operator==(const MentionLedger&) const = default;
};

struct DistributionSummary {
  std::size_t n = 0;           // number of persons
  std::int64_t total = 0;      // sum of mention counts
  double gini = 0.0;
  std::optional<double> skewness;    // needs n >= 3 and nonzero variance
  std::optional<double> zipf_slope;  // needs >= 2 ranks
  std::map<std::string, double> percentiles;  // p50, p90, p99
  std::size_t distinct = 0;    // persons with >= 1 mention (== n)
};

struct RcdfPoint {
  double count = 0.0;       // mention count x
  double proportion = 0.0;  // share of surviving persons mentioned >= x times
};

// Aggregates one outlet's articles. Raw mention keys are canonicalised
// (keys that clean to nothing are dropped as spurious), filtered against the
// blacklist, and anonymised before being summed. Every listed byline author
// is credited with the full article. Throws on mixed-outlet input.
MentionLedger aggregate(std::span<const corpus::Article> articles,
                        const names::Blacklist& blacklist,
                        const anonymize::AnonymizationMap& map);

// Adds src into dst (same outlet). Merging is commutative and associative:
// any grouping of article subsets yields the same ledger.
void merge(MentionLedger& dst, const MentionLedger& src);

// Gini coefficient over positive counts:
//   G = 2 * sum(i * x_(i)) / (n * sum(x_(i))) - (n + 1) / n
// with x_(i) sorted ascending and i 1-based. Range [0, (n-1)/n].
double gini(std::span<const double> counts);

// Moment-based sample skewness g1 = m3 / m2^(3/2) (central moments with
// divisor n). When adjusted is set, returns G1 = g1 * sqrt(n(n-1)) / (n-2).
// Requires n >= 3 and nonzero variance.
double skewness(std::span<const double> counts, bool adjusted = false);

// OLS slope of log(count) against log(rank) for counts already ordered by
// rank (descending). Requires >= 2 points and strictly positive counts.
double zipf_slope(std::span<const double> counts_by_rank);

// Reverse cumulative distribution (1-CDF) of the counts: the proportion of
// persons mentioned at least x times, for each distinct surviving x. The
// ceil(trim_top_fraction * n) largest values are dropped first (plot series
// only; never applied to summary statistics). Proportions are non-increasing
// and start at 1.0.
std::vector<RcdfPoint> reverse_cdf(std::span<const double> counts,
                                   double trim_top_fraction);

// Frequency of each distinct count, with the ceil(fraction * n) largest
// observations excluded (plot series only).
std::vector<std::pair<std::int64_t, std::int64_t>> histogram_series(
    std::span<const std::int64_t> counts, double exclude_top_fraction);

// Linear interpolation between order statistics; data must be sorted
// ascending. p in [0, 100].
double percentile(std::span<const double> sorted, double p);

// All fields computed from the complete (untrimmed) person totals.
DistributionSummary summarize(const MentionLedger& ledger,
                              bool adjusted_skewness = false);

// Person totals ordered by count descending, ties broken by name ascending:
// the rank order used for Zipf fits and top-k tables.
std::vector<std::pair<std::string, std::int64_t>> ranked_totals(
    const MentionLedger& ledger);

}  // namespace biasaudit::stats

#endif  // BIASAUDIT_STATS_HPP_
