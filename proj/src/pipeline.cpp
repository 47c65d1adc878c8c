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

#include "biasaudit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "biasaudit/anonymize.hpp"
#include "biasaudit/bias.hpp"
#include "biasaudit/corpus.hpp"
#include "biasaudit/errors.hpp"
#include "biasaudit/hash.hpp"
#include "biasaudit/names.hpp"
#include "biasaudit/sentiment.hpp"
#include "biasaudit/stats.hpp"
#include "biasaudit/text.hpp"

namespace biasaudit::pipeline {
namespace {

struct OutletInputs {
  std::vector<corpus::Article> articles;
  anonymize::AnonymizationMap map;  // per-outlet mode only
};

// Everything an outlet worker needs, all immutable during the run.
struct SharedInputs {
  const names::Blacklist* blacklist;
  const std::set<std::string>* stopwords;
  const sentiment::Lexicon* lexicon;
  const anonymize::AnonymizationMap* global_map;
  const RunConfig* config;
};

struct OutletOutcome {
  report::OutletReport report;
  // Kept for corpus-wide pooling; not emitted per outlet.
  std::map<std::string, std::int64_t> person_totals;
};

std::optional<OutletOutcome> build_outlet_outcome(
    const std::string& outlet, const OutletInputs& inputs,
    const SharedInputs& shared) {
  const RunConfig& config = *shared.config;
  const anonymize::AnonymizationMap& map =
      config.per_outlet_anon ? inputs.map : *shared.global_map;

  const stats::MentionLedger ledger =
      stats::aggregate(inputs.articles, *shared.blacklist, map);
  if (ledger.person_totals.empty()) {
    return std::nullopt;  // nothing survives filtering; no distribution
  }

  report::OutletReport r;
  r.outlet = outlet;
  r.article_count = inputs.articles.size();
  r.summary = stats::summarize(ledger, config.skew_adjusted);
  r.top_mentions = bias::top_mentioned(ledger, config.top_k);
  r.profiles = bias::repetition_index(ledger, config.flag_articles,
                                      config.flag_mentions);
  r.co_mentions =
      bias::co_mention_edges(inputs.articles, *shared.blacklist, map);

  std::vector<std::string> titles;
  titles.reserve(inputs.articles.size());
  for (const corpus::Article& a : inputs.articles) titles.push_back(a.title);
  r.terms = text::term_frequencies(titles, config.terms_k, *shared.stopwords,
                                   text::kDefaultMinTokenLength,
                                   config.term_whitelist);

  std::vector<double> compounds;
  compounds.reserve(titles.size());
  for (const std::string& title : titles) {
    compounds.push_back(
        sentiment::score_title(title, *shared.lexicon).compound);
  }
  r.sentiment = text::sentiment_distribution(compounds);

  // Display series. Trimming is display-only; r.summary is computed from the
  // complete counts above. A tiny outlet can trim to nothing, in which case
  // the series stays empty and no plot spec is written for it.
  std::vector<double> counts;
  std::vector<std::int64_t> int_counts;
  counts.reserve(ledger.person_totals.size());
  for (const auto& [person, count] : ledger.person_totals) {
    counts.push_back(static_cast<double>(count));
    int_counts.push_back(count);
  }
  try {
    r.reverse_cdf = stats::reverse_cdf(counts, config.trim_rcdf);
  } catch (const ValidationError&) {
  }
  try {
    r.histogram = stats::histogram_series(int_counts, config.trim_hist);
  } catch (const ValidationError&) {
  }
  {
    auto ranked = stats::ranked_totals(ledger);
    const auto drop = static_cast<std::size_t>(std::ceil(
        config.trim_hist * static_cast<double>(ranked.size())));
    if (drop < ranked.size()) {
      ranked.erase(ranked.begin(),
                   ranked.begin() + static_cast<std::ptrdiff_t>(drop));
      std::int64_t rank = 0;
      for (const auto& [person, count] : ranked) {
        r.rank_frequency.emplace_back(++rank, count);
      }
    }
  }
  return OutletOutcome{std::move(r), ledger.person_totals};
}

void emit_outputs(AuditResult& result, const RunConfig& config,
                  const std::set<std::string>& forbidden) {
  const std::vector<anonymize::AnonymizationMap>& maps = result.alias_maps;
  const std::vector<std::string>& map_names = result.alias_map_names;
  report::EmitOptions options;
  options.deterministic = config.deterministic;
  options.config_fingerprint = result.config_fingerprint;
  options.forbidden_names = forbidden;
  options.pooled = result.pooled;
  result.manifest = report::emit_summary(result.reports, config.out_dir,
                                         options);

  // Declarative chart specs, one file per outlet and figure class.
  for (const report::OutletReport& r : result.reports) {
    const std::filesystem::path plot_dir =
        config.out_dir / "plots" / report::sanitize_outlet_dir(r.outlet);
    report::PlotSeries series;
    if (!r.reverse_cdf.empty()) {
      series.points.clear();
      for (const stats::RcdfPoint& p : r.reverse_cdf) {
        series.points.emplace_back(p.count, p.proportion);
      }
      report::emit_plot_spec(series, report::PlotKind::kReverseCdf,
                             plot_dir / "reverse_cdf.json");
    }
    if (!r.rank_frequency.empty()) {
      series = {};
      for (const auto& [rank, count] : r.rank_frequency) {
        series.points.emplace_back(static_cast<double>(rank),
                                   static_cast<double>(count));
      }
      report::emit_plot_spec(series, report::PlotKind::kRankFrequency,
                             plot_dir / "rank_frequency.json");
    }
    if (!r.histogram.empty()) {
      series = {};
      for (const auto& [count, freq] : r.histogram) {
        series.points.emplace_back(static_cast<double>(count),
                                   static_cast<double>(freq));
      }
      report::emit_plot_spec(series, report::PlotKind::kHistogram,
                             plot_dir / "histogram.json");
    }
    if (!r.terms.empty()) {
      series = {};
      series.bars = r.terms;
      report::emit_plot_spec(series, report::PlotKind::kTermBars,
                             plot_dir / "term_bars.json");
    }
    series = {};
    series.box = r.sentiment;
    report::emit_plot_spec(series, report::PlotKind::kSentimentBox,
                           plot_dir / "sentiment_box.json");
  }

  // Restricted: the alias map never goes into report outputs.
  const std::filesystem::path restricted = config.out_dir / "restricted";
  std::error_code ec;
  std::filesystem::create_directories(restricted, ec);
  if (ec) {
    throw IoError("pipeline: cannot create " + restricted.string());
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string filename =
        map_names[i].empty()
            ? "alias_map.csv"
            : "alias_map_" + report::sanitize_outlet_dir(map_names[i]) +
                  ".csv";
    std::ofstream out(restricted / filename, std::ios::binary);
    if (!out) {
      throw IoError("pipeline: cannot write " +
                    (restricted / filename).string());
    }
    anonymize::write_alias_csv(maps[i], out);
  }
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.trim_hist < 0.0 || config.trim_hist >= 1.0 ||
      config.trim_rcdf < 0.0 || config.trim_rcdf >= 1.0) {
    throw ValidationError("pipeline: trim fractions must be in [0, 1)");
  }
  if (config.top_k < 1 || config.terms_k < 1) {
    throw ValidationError("pipeline: top-k values must be >= 1");
  }
  if (config.flag_articles < 0 || config.flag_mentions < 0) {
    throw ValidationError("pipeline: flag thresholds must be >= 0");
  }
  for (const std::string* date : {&config.from_date, &config.to_date}) {
    if (!date->empty() && !corpus::valid_date(*date)) {
      throw ValidationError("pipeline: \"" + *date +
                            "\" is not a valid ISO-8601 date");
    }
  }
}

AuditResult run_analysis(const RunConfig& config) {
  validate(config);

  corpus::LoadResult loaded =
      corpus::load_corpus(config.corpus_path, config.strict_load);

  AuditResult result;
  result.skipped_lines = loaded.skipped_lines;

  // Date-range and outlet filters. ISO dates compare lexicographically.
  if (!config.from_date.empty() || !config.to_date.empty() ||
      !config.outlet_filter.empty()) {
    if (!config.outlet_filter.empty() &&
        loaded.corpus.outlets.count(config.outlet_filter) == 0) {
      throw ValidationError("pipeline: outlet \"" + config.outlet_filter +
                            "\" does not appear in the corpus");
    }
    corpus::Corpus filtered;
    for (corpus::Article& a : loaded.corpus.articles) {
      if (!config.from_date.empty() && a.date < config.from_date) continue;
      if (!config.to_date.empty() && a.date > config.to_date) continue;
      if (!config.outlet_filter.empty() && a.outlet != config.outlet_filter) {
        continue;
      }
      filtered.outlets.insert(a.outlet);
      filtered.articles.push_back(std::move(a));
    }
    loaded.corpus = std::move(filtered);
  }

  const names::Blacklist blacklist =
      names::load_blacklist(config.blacklist_path);
  const std::set<std::string> stopwords =
      text::load_stopwords(config.stopwords_path);
  const sentiment::Lexicon lexicon =
      sentiment::Lexicon::load(config.lexicon_path);

  result.config_fingerprint =
      hash::sha256_hex(hash::sha256_file(config.blacklist_path) +
                       hash::sha256_file(config.stopwords_path) +
                       hash::sha256_file(config.lexicon_path));

  anonymize::AnonymizationMap global_map;
  if (!config.per_outlet_anon) {
    global_map = anonymize::build_author_map(loaded.corpus);
    result.alias_maps.push_back(global_map);
    result.alias_map_names.emplace_back();
  }

  auto partitions = corpus::partition_by_outlet(loaded.corpus);
  std::map<std::string, OutletInputs> inputs;
  for (auto& [outlet, articles] : partitions) {
    OutletInputs in;
    in.articles = std::move(articles);
    if (config.per_outlet_anon) {
      in.map = anonymize::build_author_map(in.articles);
      result.alias_maps.push_back(in.map);
      result.alias_map_names.push_back(outlet);
    }
    inputs.emplace(outlet, std::move(in));
  }

  const SharedInputs shared{&blacklist, &stopwords, &lexicon, &global_map,
                            &config};

  // Outlets are independent; futures are collected in sorted key order, so
  // the result is identical at any parallelism degree.
  std::vector<
      std::pair<std::string, std::future<std::optional<OutletOutcome>>>>
      tasks;
  tasks.reserve(inputs.size());
  for (const auto& [outlet, in] : inputs) {
    tasks.emplace_back(
        outlet, std::async(std::launch::async, build_outlet_outcome, outlet,
                           std::cref(in), std::cref(shared)));
  }
  std::map<std::string, std::int64_t> pooled_totals;
  for (auto& [outlet, future] : tasks) {
    std::optional<OutletOutcome> outcome = future.get();
    if (!outcome.has_value()) {
      ++result.empty_outlets;
      continue;
    }
    if (!config.per_outlet_anon) {
      for (const auto& [person, count] : outcome->person_totals) {
        pooled_totals[person] += count;
      }
    }
    result.reports.push_back(std::move(outcome->report));
  }

  if (!config.per_outlet_anon && !pooled_totals.empty()) {
    stats::MentionLedger pooled_ledger;
    pooled_ledger.outlet = "(pooled)";
    pooled_ledger.person_totals = std::move(pooled_totals);
    result.pooled = stats::summarize(pooled_ledger, config.skew_adjusted);
  }

  return result;
}

AuditResult run_audit(const RunConfig& config) {
  AuditResult result = run_analysis(config);

  std::set<std::string> forbidden;
  for (const anonymize::AnonymizationMap& map : result.alias_maps) {
    for (const auto& [author, alias] : map.forward) {
      forbidden.insert(author);
    }
  }

  emit_outputs(result, config, forbidden);
  return result;
}

std::string format_summary_table(const AuditResult& result) {
  std::ostringstream out;
  std::size_t outlet_width = 6;
  for (const report::OutletReport& r : result.reports) {
    outlet_width = std::max(outlet_width, r.outlet.size());
  }
  out << std::left;
  char line[160];
  std::snprintf(line, sizeof(line), "%-*s %12s %10s %8s",
                static_cast<int>(outlet_width), "outlet", "mentions",
                "distinct", "gini");
  out << line << '\n';
  for (const report::OutletReport& r : result.reports) {
    std::snprintf(line, sizeof(line), "%-*s %12lld %10zu %8.4f",
                  static_cast<int>(outlet_width), r.outlet.c_str(),
                  static_cast<long long>(r.summary.total),
                  r.summary.distinct, r.summary.gini);
    out << line << '\n';
  }
  return out.str();
}

}  // namespace biasaudit::pipeline
