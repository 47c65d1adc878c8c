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

#include "biasaudit/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "biasaudit/csv.hpp"
#include "biasaudit/errors.hpp"
#include "biasaudit/hash.hpp"

namespace biasaudit::report {
namespace {

using nlohmann::json;

void audit_value(const std::string& value,
                 const std::set<std::string>& forbidden,
                 const std::string& where) {
  if (forbidden.count(value) > 0) {
    throw Error("report: anonymisation audit failed: real byline name \"" +
                value + "\" found in " + where);
  }
}

void audit_json(const json& node, const std::set<std::string>& forbidden,
                const std::string& where) {
  if (node.is_string()) {
    audit_value(node.get<std::string>(), forbidden, where);
  } else if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      audit_value(key, forbidden, where);
      audit_json(value, forbidden, where);
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      audit_json(value, forbidden, where);
    }
  }
}

void audit_csv(const std::string& content,
               const std::set<std::string>& forbidden,
               const std::string& where) {
  for (const auto& row : csv::parse(content)) {
    for (const std::string& field : row) {
      audit_value(field, forbidden, where);
    }
  }
}

void write_file(const std::filesystem::path& path,
                const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("report: cannot write file " + path.string());
  }
  out << content;
  if (!out) {
    throw IoError("report: write failed for " + path.string());
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json summary_to_json(const stats::DistributionSummary& s) {
  json out;
  out["n"] = s.n;
  out["total"] = s.total;
  out["gini"] = s.gini;
  out["skewness"] = s.skewness ? json(*s.skewness) : json(nullptr);
  out["zipf_slope"] = s.zipf_slope ? json(*s.zipf_slope) : json(nullptr);
  out["percentiles"] = s.percentiles;
  out["distinct"] = s.distinct;
  return out;
}

json box_to_json(const text::BoxplotStats& b) {
  return json{{"min", b.min}, {"q1", b.q1},   {"median", b.median},
              {"q3", b.q3},   {"max", b.max}, {"mean", b.mean}};
}

json outlet_to_json(const OutletReport& r) {
  json out;
  out["articles"] = r.article_count;
  out["distribution"] = summary_to_json(r.summary);

  json top = json::array();
  for (const bias::TopMention& m : r.top_mentions) {
    top.push_back({{"person", m.person},
                   {"count", m.count},
                   {"share_pct", m.share_pct}});
  }
  out["top_mentions"] = top;

  json authors = json::array();
  for (const bias::AuthorBiasProfile& p : r.profiles) {
    std::int64_t flagged = 0;
    for (const bias::RepetitionRecord& rec : p.records) {
      if (rec.flagged) ++flagged;
    }
    authors.push_back({{"author", p.author},
                       {"hhi", p.hhi},
                       {"persons", p.records.size()},
                       {"flagged", flagged}});
  }
  out["authors"] = authors;

  json terms = json::array();
  for (const text::TermFrequency& t : r.terms) {
    terms.push_back({{"term", t.term}, {"count", t.count}});
  }
  out["terms"] = terms;

  out["sentiment"] = box_to_json(r.sentiment);

  json rcdf = json::array();
  for (const stats::RcdfPoint& p : r.reverse_cdf) {
    rcdf.push_back({p.count, p.proportion});
  }
  json rank_freq = json::array();
  for (const auto& [rank, count] : r.rank_frequency) {
    rank_freq.push_back({rank, count});
  }
  json histogram = json::array();
  for (const auto& [count, freq] : r.histogram) {
    histogram.push_back({count, freq});
  }
  out["plots"] = {{"reverse_cdf", rcdf},
                  {"rank_frequency", rank_freq},
                  {"histogram", histogram}};
  return out;
}

std::string top_mentions_csv(const OutletReport& r) {
  std::ostringstream out;
  csv::Writer writer(out, {"person", "count", "share_pct"});
  for (const bias::TopMention& m : r.top_mentions) {
    writer.row({m.person, std::to_string(m.count),
                format_share_pct(m.share_pct)});
  }
  return out.str();
}

std::string repetition_csv(const OutletReport& r) {
  std::ostringstream out;
  csv::Writer writer(out, {"author", "person", "article_count",
                           "cumulative_mentions", "flagged"});
  for (const bias::AuthorBiasProfile& p : r.profiles) {
    for (const bias::RepetitionRecord& rec : p.records) {
      writer.row({rec.author, rec.person, std::to_string(rec.article_count),
                  std::to_string(rec.cumulative_mentions),
                  rec.flagged ? "true" : "false"});
    }
  }
  return out.str();
}

std::string terms_csv(const OutletReport& r) {
  std::ostringstream out;
  csv::Writer writer(out, {"term", "count"});
  for (const text::TermFrequency& t : r.terms) {
    writer.row({t.term, std::to_string(t.count)});
  }
  return out.str();
}

std::string co_mentions_csv(const OutletReport& r) {
  std::ostringstream out;
  csv::Writer writer(out, {"person_a", "person_b", "weight"});
  for (const bias::CoMentionEdge& e : r.co_mentions) {
    writer.row({e.a, e.b, std::to_string(e.weight)});
  }
  return out.str();
}

}  // namespace

std::string sanitize_outlet_dir(std::string_view outlet) {
  std::string dir;
  dir.reserve(outlet.size());
  for (char c : outlet) {
    const auto u = static_cast<unsigned char>(c);
    dir.push_back(std::isalnum(u) != 0 || c == '.' || c == '-' ? c : '_');
  }
  return dir.empty() ? "_" : dir;
}

std::string format_share_pct(double share_pct) {
  const double rounded = std::floor(share_pct * 100.0 + 0.5) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", rounded);
  return buf;
}

Manifest emit_summary(std::span<const OutletReport> reports,
                      const std::filesystem::path& out_dir,
                      const EmitOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("report: cannot create output directory " +
                  out_dir.string() + ": " + ec.message());
  }

  // Compose every file first so the anonymisation audit can veto the whole
  // emission before anything touches disk.
  std::vector<std::pair<std::string, std::string>> files;  // rel path, bytes

  json summary;
  summary["config_fingerprint"] = options.config_fingerprint;
  if (!options.deterministic) {
    summary["generated_at"] = utc_timestamp();
  }
  if (options.pooled) {
    summary["pooled"] = summary_to_json(*options.pooled);
  }
  json outlets = json::object();
  for (const OutletReport& r : reports) {
    outlets[r.outlet] = outlet_to_json(r);
  }
  summary["outlets"] = outlets;
  audit_json(summary, options.forbidden_names, "summary.json");
  files.emplace_back("summary.json", summary.dump(2) + "\n");

  for (const OutletReport& r : reports) {
    const std::string dir = sanitize_outlet_dir(r.outlet);
    const std::pair<std::string, std::string> csvs[] = {
        {dir + "/top_mentions.csv", top_mentions_csv(r)},
        {dir + "/repetition.csv", repetition_csv(r)},
        {dir + "/terms.csv", terms_csv(r)},
        {dir + "/co_mentions.csv", co_mentions_csv(r)},
    };
    for (const auto& [rel, content] : csvs) {
      audit_csv(content, options.forbidden_names, rel);
      files.emplace_back(rel, content);
    }
  }

  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Manifest manifest;
  json manifest_files = json::array();
  for (const auto& [rel, content] : files) {
    const std::filesystem::path path = out_dir / rel;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("report: cannot create directory " +
                    path.parent_path().string());
    }
    write_file(path, content);
    ManifestEntry entry{rel, hash::sha256_hex(content)};
    manifest_files.push_back({{"path", entry.path},
                              {"sha256", entry.sha256}});
    manifest.files.push_back(std::move(entry));
  }
  const json manifest_json = {{"files", manifest_files}};
  write_file(out_dir / "manifest.json", manifest_json.dump(2) + "\n");
  return manifest;
}

PlotKind plot_kind_from_string(std::string_view kind) {
  if (kind == "reverse_cdf") return PlotKind::kReverseCdf;
  if (kind == "rank_frequency") return PlotKind::kRankFrequency;
  if (kind == "histogram") return PlotKind::kHistogram;
  if (kind == "term_bars") return PlotKind::kTermBars;
  if (kind == "sentiment_box") return PlotKind::kSentimentBox;
  throw ValidationError("report: unknown plot kind \"" + std::string(kind) +
                        "\"");
}

std::string_view to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::kReverseCdf: return "reverse_cdf";
    case PlotKind::kRankFrequency: return "rank_frequency";
    case PlotKind::kHistogram: return "histogram";
    case PlotKind::kTermBars: return "term_bars";
    case PlotKind::kSentimentBox: return "sentiment_box";
  }
  return "unknown";
}

void emit_plot_spec(const PlotSeries& series, PlotKind kind,
                    const std::filesystem::path& out) {
  json spec;
  spec["kind"] = to_string(kind);

  const bool log_log = kind == PlotKind::kReverseCdf ||
                       kind == PlotKind::kRankFrequency ||
                       kind == PlotKind::kHistogram;
  const char* scale = log_log ? "log" : "linear";

  json data = json::array();
  switch (kind) {
    case PlotKind::kReverseCdf:
    case PlotKind::kRankFrequency:
    case PlotKind::kHistogram: {
      if (series.points.empty()) {
        throw ValidationError("report: empty plot series");
      }
      for (const auto& [x, y] : series.points) {
        data.push_back({{"x", x}, {"y", y}});
      }
      break;
    }
    case PlotKind::kTermBars: {
      if (series.bars.empty()) {
        throw ValidationError("report: empty plot series");
      }
      for (const text::TermFrequency& t : series.bars) {
        data.push_back({{"term", t.term}, {"count", t.count}});
      }
      break;
    }
    case PlotKind::kSentimentBox: {
      if (!series.box) {
        throw ValidationError("report: empty plot series");
      }
      const text::BoxplotStats& b = *series.box;
      data.push_back({{"min", b.min},
                      {"q1", b.q1},
                      {"median", b.median},
                      {"q3", b.q3},
                      {"max", b.max},
                      {"mean", b.mean}});
      break;
    }
  }

  const char* x_label = "x";
  const char* y_label = "y";
  switch (kind) {
    case PlotKind::kReverseCdf:
      x_label = "mentions";
      y_label = "proportion mentioned at least x times";
      break;
    case PlotKind::kRankFrequency:
      x_label = "rank";
      y_label = "mentions";
      break;
    case PlotKind::kHistogram:
      x_label = "mentions";
      y_label = "persons";
      break;
    case PlotKind::kTermBars:
      x_label = "term";
      y_label = "count";
      break;
    case PlotKind::kSentimentBox:
      x_label = "outlet";
      y_label = "compound score";
      break;
  }
  spec["axes"] = {{"x", {{"label", x_label}, {"scale", scale}}},
                  {"y", {{"label", y_label}, {"scale", scale}}}};
  spec["data"] = data;

  std::error_code ec;
  std::filesystem::create_directories(out.parent_path(), ec);
  write_file(out, spec.dump(2) + "\n");
}

}  // namespace biasaudit::report
