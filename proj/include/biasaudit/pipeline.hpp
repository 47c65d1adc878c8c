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

#ifndef BIASAUDIT_PIPELINE_HPP_
#define BIASAUDIT_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "biasaudit/anonymize.hpp"
#include "biasaudit/report.hpp"

namespace biasaudit::pipeline {

// Full run configuration. Defaults follow the documented methodology: 1%
// display exclusion for histograms/rank plots, 0.5% for the reverse CDF,
// top 10 mentions, top 20 terms, repetition flags at >5 articles and >15
// cumulative mentions.
struct RunConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path blacklist_path;
  std::filesystem::path stopwords_path;
  std::filesystem::path lexicon_path;
  std::filesystem::path out_dir;

  double trim_hist = 0.01;
  double trim_rcdf = 0.005;
  std::size_t top_k = 10;
  std::size_t terms_k = 20;
  std::int64_t flag_articles = 5;
  std::int64_t flag_mentions = 15;
  bool skew_adjusted = false;
  std::string outlet_filter;  // empty: all outlets
  std::string from_date;      // empty: open start
  std::string to_date;        // empty: open end
  bool deterministic = false;
  bool per_outlet_anon = false;
  bool strict_load = false;
  std::set<std::string> term_whitelist;
};

struct AuditResult {
  std::vector<report::OutletReport> reports;  // ordered by outlet id
  report::Manifest manifest;
  std::size_t skipped_lines = 0;
  std::size_t empty_outlets = 0;  // outlets with no surviving mentions
  std::string config_fingerprint;

  // Distribution over all outlets combined. The headline skewness/Zipf
  // numbers are reported per outlet and pooled. Absent in per-outlet alias
  // mode, where alias keys collide across outlets.
  std::optional<stats::DistributionSummary> pooled;

  // The alias map(s) the analysis used: one with an empty name in global
  // mode, one per outlet otherwise. Kept in memory for the restricted
  // emission and the anonymisation audit; never part of the reports.
  std::vector<anonymize::AnonymizationMap> alias_maps;
  std::vector<std::string> alias_map_names;
};

// Validates the config (throws ValidationError on bad fractions/k).
void validate(const RunConfig& config);

// Builds every outlet report in memory without touching the filesystem
// output side. Outlets are processed independently and collected in sorted
// order, so results do not depend on scheduling.
AuditResult run_analysis(const RunConfig& config);

// Full pipeline: run_analysis plus report emission (summary, CSVs, manifest,
// plot specs, restricted alias map).
AuditResult run_audit(const RunConfig& config);

// One line per outlet for the CLI summary table.
std::string format_summary_table(const AuditResult& result);

}  // namespace biasaudit::pipeline

#endif  // BIASAUDIT_PIPELINE_HPP_
