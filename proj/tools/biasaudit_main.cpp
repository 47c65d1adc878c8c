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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "biasaudit/anonymize.hpp"
#include "biasaudit/corpus.hpp"
#include "biasaudit/errors.hpp"
#include "biasaudit/pipeline.hpp"
#include "biasaudit/report.hpp"
#include "biasaudit/stats.hpp"

namespace {

using biasaudit::pipeline::AuditResult;
using biasaudit::pipeline::RunConfig;

struct CliOptions {
  RunConfig run;
  std::vector<std::string> whitelist_terms;
};

// Shared options live on the root app; subcommands fall through to them, so
// both `biasaudit audit --corpus ...` and a --config file supplying every
// flag work. CLI flags override config-file values.
void add_common_options(CLI::App& app, CliOptions& opts) {
  app.set_config("--config", "", "read options from a TOML/INI config file");
  app.add_option("--corpus", opts.run.corpus_path,
                 "JSONL corpus, one article object per line");
  app.add_option("--blacklist", opts.run.blacklist_path,
                 "blacklist JSON (deceased/public_figures/spurious)");
  app.add_option("--stopwords", opts.run.stopwords_path,
                 "newline-delimited stopword file");
  app.add_option("--lexicon", opts.run.lexicon_path,
                 "sentiment lexicon, token<TAB>valence per line");
  app.add_option("--trim-hist", opts.run.trim_hist,
                 "display-only exclusion fraction for histogram and "
                 "rank-frequency series")
      ->capture_default_str();
  app.add_option("--trim-rcdf", opts.run.trim_rcdf,
                 "display-only trim fraction for the reverse CDF series")
      ->capture_default_str();
  app.add_option("--top-k", opts.run.top_k, "top mentioned persons per outlet")
      ->capture_default_str();
  app.add_option("--terms-k", opts.run.terms_k, "top title terms per outlet")
      ->capture_default_str();
  app.add_option("--flag-articles", opts.run.flag_articles,
                 "repetition flag: articles must exceed this")
      ->capture_default_str();
  app.add_option("--flag-mentions", opts.run.flag_mentions,
                 "repetition flag: cumulative mentions must exceed this")
      ->capture_default_str();
  app.add_flag("--skew-adjusted", opts.run.skew_adjusted,
               "report the adjusted skewness estimator G1 instead of g1");
  app.add_option("--outlet", opts.run.outlet_filter,
                 "restrict the run to one outlet id");
  app.add_option("--from", opts.run.from_date,
                 "keep articles dated on or after this ISO date");
  app.add_option("--to", opts.run.to_date,
                 "keep articles dated on or before this ISO date");
  app.add_flag("--deterministic", opts.run.deterministic,
               "omit timestamps so identical inputs give identical bytes");
  app.add_flag("--per-outlet-anon", opts.run.per_outlet_anon,
               "assign Author_XXX aliases per outlet instead of globally");
  app.add_flag("--strict", opts.run.strict_load,
               "abort on the first invalid corpus line instead of skipping");
  app.add_option("--term-whitelist", opts.whitelist_terms,
                 "short tokens admitted despite the length rule (e.g. ai)");
}

void require_paths(const CliOptions& opts, bool full_pipeline) {
  auto missing = [](const char* flag) {
    throw biasaudit::Error(std::string("cli: missing required option ") +
                           flag);
  };
  if (opts.run.corpus_path.empty()) missing("--corpus");
  if (!full_pipeline) return;
  if (opts.run.blacklist_path.empty()) missing("--blacklist");
  if (opts.run.stopwords_path.empty()) missing("--stopwords");
  if (opts.run.lexicon_path.empty()) missing("--lexicon");
}

void finalize(CliOptions& opts) {
  for (const std::string& term : opts.whitelist_terms) {
    opts.run.term_whitelist.insert(term);
  }
}

void report_skips(const AuditResult& result) {
  if (result.skipped_lines > 0) {
    std::cerr << "warning: skipped " << result.skipped_lines
              << " invalid corpus line(s)\n";
  }
  if (result.empty_outlets > 0) {
    std::cerr << "warning: " << result.empty_outlets
              << " outlet(s) had no surviving mentions and were omitted\n";
  }
}

int cmd_audit(CliOptions& opts) {
  const AuditResult result = biasaudit::pipeline::run_audit(opts.run);
  report_skips(result);
  std::cout << biasaudit::pipeline::format_summary_table(result);
  std::cout << result.manifest.files.size() + 1 << " report files in "
            << opts.run.out_dir.string() << "\n";
  return 0;
}

void print_distribution_line(const char* label,
                             const biasaudit::stats::DistributionSummary& s) {
  std::printf("%s: ", label);
  if (s.skewness) {
    std::printf("skewness %.4f, ", *s.skewness);
  } else {
    std::printf("skewness n/a, ");
  }
  if (s.zipf_slope) {
    std::printf("zipf slope %.4f, ", *s.zipf_slope);
  } else {
    std::printf("zipf slope n/a, ");
  }
  std::printf("p50 %.1f, p90 %.1f, p99 %.1f\n", s.percentiles.at("p50"),
              s.percentiles.at("p90"), s.percentiles.at("p99"));
}

int cmd_stats(CliOptions& opts) {
  const AuditResult result = biasaudit::pipeline::run_analysis(opts.run);
  report_skips(result);
  std::cout << biasaudit::pipeline::format_summary_table(result);
  for (const auto& r : result.reports) {
    print_distribution_line(r.outlet.c_str(), r.summary);
  }
  if (result.pooled) {
    print_distribution_line("(pooled)", *result.pooled);
    std::printf("(pooled): gini %.4f over %zu persons, %lld mentions\n",
                result.pooled->gini, result.pooled->n,
                static_cast<long long>(result.pooled->total));
  }
  return 0;
}

int cmd_bias(CliOptions& opts) {
  const AuditResult result = biasaudit::pipeline::run_analysis(opts.run);
  report_skips(result);
  for (const auto& r : result.reports) {
    std::printf("%s top %zu:\n", r.outlet.c_str(), r.top_mentions.size());
    for (const auto& m : r.top_mentions) {
      std::printf("  %-32s %6lld  %s%%\n", m.person.c_str(),
                  static_cast<long long>(m.count),
                  biasaudit::report::format_share_pct(m.share_pct).c_str());
    }
    std::size_t flagged = 0;
    for (const auto& p : r.profiles) {
      for (const auto& rec : p.records) {
        if (rec.flagged) {
          ++flagged;
          std::printf("  flagged: %s -> %s (%lld articles, %lld mentions)\n",
                      rec.author.c_str(), rec.person.c_str(),
                      static_cast<long long>(rec.article_count),
                      static_cast<long long>(rec.cumulative_mentions));
        }
      }
    }
    if (flagged == 0) {
      std::printf("  no flagged repetition records\n");
    }
  }
  return 0;
}

int cmd_topics(CliOptions& opts) {
  const AuditResult result = biasaudit::pipeline::run_analysis(opts.run);
  report_skips(result);
  for (const auto& r : result.reports) {
    std::printf("%s:\n", r.outlet.c_str());
    for (const auto& t : r.terms) {
      std::printf("  %-24s %6lld\n", t.term.c_str(),
                  static_cast<long long>(t.count));
    }
  }
  return 0;
}

int cmd_sentiment(CliOptions& opts) {
  const AuditResult result = biasaudit::pipeline::run_analysis(opts.run);
  report_skips(result);
  std::printf("%-16s %8s %8s %8s %8s %8s %8s\n", "outlet", "min", "q1",
              "median", "q3", "max", "mean");
  for (const auto& r : result.reports) {
    const auto& s = r.sentiment;
    std::printf("%-16s %8.4f %8.4f %8.4f %8.4f %8.4f %8.4f\n",
                r.outlet.c_str(), s.min, s.q1, s.median, s.q3, s.max, s.mean);
  }
  return 0;
}

int cmd_anonmap(CliOptions& opts, const std::string& out_path) {
  const auto loaded = biasaudit::corpus::load_corpus(opts.run.corpus_path,
                                                     opts.run.strict_load);
  const auto map = biasaudit::anonymize::build_author_map(loaded.corpus);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw biasaudit::IoError("cli: cannot write alias map to " + out_path);
  }
  biasaudit::anonymize::write_alias_csv(map, out);
  std::cout << map.forward.size() << " aliases written to " << out_path
            << " (restricted; do not publish)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus bias audit: mention inequality, repetition bias, and "
               "title profiling for science-news outlets"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string anonmap_out;

  add_common_options(app, opts);

  CLI::App* audit = app.add_subcommand("audit", "run the full pipeline");
  audit->fallthrough(true);
  audit->add_option("--out", opts.run.out_dir, "output directory")
      ->required();

  CLI::App* stats = app.add_subcommand("stats",
                                       "distribution statistics only");
  CLI::App* bias = app.add_subcommand("bias",
                                      "top-k and repetition measures only");
  CLI::App* topics = app.add_subcommand("topics", "title term frequencies");
  CLI::App* senti = app.add_subcommand("sentiment",
                                       "title sentiment distributions");
  for (CLI::App* cmd : {stats, bias, topics, senti}) {
    cmd->fallthrough(true);
  }

  CLI::App* anonmap = app.add_subcommand(
      "anonmap", "emit the byline alias map to a restricted path");
  anonmap->fallthrough(true);
  anonmap->add_option("--out", anonmap_out, "alias map CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    finalize(opts);
    if (anonmap->parsed()) {
      require_paths(opts, false);
      return cmd_anonmap(opts, anonmap_out);
    }
    require_paths(opts, true);
    if (audit->parsed()) return cmd_audit(opts);
    if (stats->parsed()) return cmd_stats(opts);
    if (bias->parsed()) return cmd_bias(opts);
    if (topics->parsed()) return cmd_topics(opts);
    if (senti->parsed()) return cmd_sentiment(opts);
  } catch (const biasaudit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const biasaudit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
