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

#ifndef BIASAUDIT_REPORT_HPP_
#define BIASAUDIT_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biasaudit/bias.hpp"
#include "biasaudit/stats.hpp"
#include "biasaudit/text.hpp"

namespace biasaudit::report {

// Everything emitted for one outlet. Holds no real byline name anywhere;
// emit_summary() enforces that with a value-level scan before writing.
struct OutletReport {
  std::string outlet;
  std::size_t article_count = 0;
  stats::DistributionSummary summary;
  std::vector<bias::TopMention> top_mentions;
  std::vector<bias::AuthorBiasProfile> profiles;
  std::vector<text::TermFrequency> terms;
  text::BoxplotStats sentiment;
  std::vector<stats::RcdfPoint> reverse_cdf;  // trimmed display series
  std::vector<std::pair<std::int64_t, std::int64_t>> rank_frequency;
  std::vector<std::pair<std::int64_t, std::int64_t>> histogram;
  std::vector<bias::CoMentionEdge> co_mentions;
};

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::string sha256;
};

struct Manifest {
  std::vector<ManifestEntry> files;  // sorted by path
};

struct EmitOptions {
  bool deterministic = false;  // omit generated_at from summary.json
  std::string config_fingerprint;
  // Real byline names; any emitted value equal to one aborts the run.
  std::set<std::string> forbidden_names;
  // Corpus-wide distribution over all outlets combined, when meaningful
  // (global alias namespace only).
  std::optional<stats::DistributionSummary> pooled;
};

// Writes summary.json, per-outlet CSVs (top_mentions.csv, repetition.csv,
// terms.csv, co_mentions.csv under <out_dir>/<outlet>/), and manifest.json
// listing the written files with SHA-256 content hashes. Byte-deterministic
// for identical inputs. Returns the manifest.
Manifest emit_summary(std::span<const OutletReport> reports,
                      const std::filesystem::path& out_dir,
                      const EmitOptions& options);

enum class PlotKind {
  kReverseCdf,     // log-log
  kRankFrequency,  // log-log
  kHistogram,      // log-log
  kTermBars,       // linear
  kSentimentBox,   // linear
};

PlotKind plot_kind_from_string(std::string_view kind);
std::string_view to_string(PlotKind kind);

// Data for one plot-spec document; which member is read depends on the kind.
struct PlotSeries {
  std::vector<std::pair<double, double>> points;  // xy kinds
  std::vector<text::TermFrequency> bars;          // term_bars
  std::optional<text::BoxplotStats> box;          // sentiment_box
};

// Writes a self-contained declarative chart spec (data inlined, axis scales
// declared). Throws on an empty series.
void emit_plot_spec(const PlotSeries& series, PlotKind kind,
                    const std::filesystem::path& out);

// Directory-safe form of an outlet id (used for the per-outlet folders).
std::string sanitize_outlet_dir(std::string_view outlet);

// Display rounding for percentage shares: half-up to two decimals.
std::string format_share_pct(double share_pct);

}  // namespace biasaudit::report

#endif  // BIASAUDIT_REPORT_HPP_
