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

#include "biasaudit/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <vector>

#include "biasaudit/errors.hpp"

namespace biasaudit::sentiment {
namespace {

constexpr double kBoostIncr = 0.293;
constexpr double kBoostDecr = -0.293;
constexpr double kCapsIncr = 0.733;
constexpr double kNegationScalar = -0.74;
constexpr double kNormAlpha = 15.0;

const std::set<std::string>& negate_words() {
  static const std::set<std::string> words = {
      "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
      "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't", "didn't",
      "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt",
      "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
      "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope",
      "nor", "not", "nothing", "nowhere", "oughtnt", "shant", "shouldnt",
      "uhuh", "wasnt", "werent", "oughtn't", "shan't", "shouldn't", "uh-uh",
      "weren't", "without", "wont", "wouldnt", "won't", "wouldn't", "rarely",
      "seldom", "despite"};
  return words;
}

const std::map<std::string, double>& booster_dict() {
  static const std::map<std::string, double> boosters = {
      {"absolutely", kBoostIncr}, {"amazingly", kBoostIncr},
      {"awfully", kBoostIncr},    {"completely", kBoostIncr},
      {"considerable", kBoostIncr}, {"considerably", kBoostIncr},
      {"decidedly", kBoostIncr},  {"deeply", kBoostIncr},
      {"enormous", kBoostIncr},   {"enormously", kBoostIncr},
      {"entirely", kBoostIncr},   {"especially", kBoostIncr},
      {"exceptional", kBoostIncr}, {"exceptionally", kBoostIncr},
      {"extreme", kBoostIncr},    {"extremely", kBoostIncr},
      {"fabulously", kBoostIncr}, {"fully", kBoostIncr},
      {"greatly", kBoostIncr},    {"highly", kBoostIncr},
      {"hugely", kBoostIncr},     {"incredible", kBoostIncr},
      {"incredibly", kBoostIncr}, {"intensely", kBoostIncr},
      {"major", kBoostIncr},      {"majorly", kBoostIncr},
      {"more", kBoostIncr},       {"most", kBoostIncr},
      {"particularly", kBoostIncr}, {"purely", kBoostIncr},
      {"quite", kBoostIncr},      {"really", kBoostIncr},
      {"remarkably", kBoostIncr}, {"so", kBoostIncr},
      {"substantially", kBoostIncr}, {"thoroughly", kBoostIncr},
      {"total", kBoostIncr},      {"totally", kBoostIncr},
      {"tremendous", kBoostIncr}, {"tremendously", kBoostIncr},
      {"unbelievably", kBoostIncr}, {"unusually", kBoostIncr},
      {"utter", kBoostIncr},      {"utterly", kBoostIncr},
      {"very", kBoostIncr},
      {"almost", kBoostDecr},     {"barely", kBoostDecr},
      {"hardly", kBoostDecr},     {"just enough", kBoostDecr},
      {"kind of", kBoostDecr},    {"kinda", kBoostDecr},
      {"kindof", kBoostDecr},     {"kind-of", kBoostDecr},
      {"less", kBoostDecr},       {"little", kBoostDecr},
      {"marginal", kBoostDecr},   {"marginally", kBoostDecr},
      {"occasional", kBoostDecr}, {"occasionally", kBoostDecr},
      {"partly", kBoostDecr},     {"scarce", kBoostDecr},
      {"scarcely", kBoostDecr},   {"slight", kBoostDecr},
      {"slightly", kBoostDecr},   {"somewhat", kBoostDecr},
      {"sort of", kBoostDecr},    {"sorta", kBoostDecr},
      {"sortof", kBoostDecr},     {"sort-of", kBoostDecr}};
  return boosters;
}

const std::map<std::string, double>& special_cases() {
  static const std::map<std::string, double> cases = {
      {"the shit", 3.0},      {"the bomb", 3.0},     {"bad ass", 1.5},
      {"badass", 1.5},        {"bus stop", 0.0},     {"yeah right", -2.0},
      {"kiss of death", -1.5}, {"to die for", 3.0},  {"beating heart", 3.1},
      {"broken heart", -2.9}};
  return cases;
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    out.push_back(
        static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

// Python str.isupper semantics for ASCII: at least one cased character and
// no lowercase ones.
bool is_upper_token(std::string_view token) {
  bool has_cased = false;
  for (char c : token) {
    const auto u = static_cast<unsigned char>(c);
    if (std::islower(u) != 0) return false;
    if (std::isupper(u) != 0) has_cased = true;
  }
  return has_cased;
}

// Whitespace tokens with surrounding punctuation stripped, unless stripping
// leaves two characters or fewer (keeps emoticons and initials intact).
std::vector<std::string> words_and_emoticons(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])) != 0) {
      ++i;
    }
    std::size_t start = i;
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])) == 0) {
      ++i;
    }
    if (i == start) break;
    std::string_view token = text.substr(start, i - start);
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && is_ascii_punct(token[b])) ++b;
    while (e > b && is_ascii_punct(token[e - 1])) --e;
    const std::string_view stripped = token.substr(b, e - b);
    tokens.emplace_back(stripped.size() <= 2 ? token : stripped);
  }
  return tokens;
}

bool negated(const std::string& word_lower) {
  if (negate_words().count(word_lower) > 0) return true;
  return word_lower.find("n't") != std::string::npos;
}

bool allcap_differential(const std::vector<std::string>& words) {
  std::size_t caps = 0;
  for (const std::string& w : words) {
    if (is_upper_token(w)) ++caps;
  }
  return caps > 0 && caps < words.size();
}

double normalize_score(double score) {
  const double norm = score / std::sqrt(score * score + kNormAlpha);
  return std::clamp(norm, -1.0, 1.0);
}

double scalar_inc_dec(const std::string& word, const std::string& word_lower,
                      double valence, bool is_cap_diff) {
  auto it = booster_dict().find(word_lower);
  if (it == booster_dict().end()) return 0.0;
  double scalar = it->second;
  if (valence < 0) scalar = -scalar;
  if (is_upper_token(word) && is_cap_diff) {
    scalar += valence > 0 ? kCapsIncr : -kCapsIncr;
  }
  return scalar;
}

struct TokenContext {
  const std::vector<std::string>& words;
  const std::vector<std::string>& lower;
  const Lexicon& lexicon;
  bool is_cap_diff;
};

double negation_check(double valence, const TokenContext& ctx,
                      std::size_t start_i, std::size_t i) {
  const auto& w = ctx.lower;
  if (start_i == 0) {
    if (negated(w[i - 1])) valence *= kNegationScalar;
  }
  if (start_i == 1) {
    if (w[i - 2] == "never" && (w[i - 1] == "so" || w[i - 1] == "this")) {
      valence *= 1.25;
    } else if (w[i - 2] == "without" && w[i - 1] == "doubt") {
      // explicit exception: no flip
    } else if (negated(w[i - 2])) {
      valence *= kNegationScalar;
    }
  }
  if (start_i == 2) {
    if (w[i - 3] == "never" &&
        (w[i - 2] == "so" || w[i - 2] == "this" || w[i - 1] == "so" ||
         w[i - 1] == "this")) {
      valence *= 1.25;
    } else if (w[i - 3] == "without" &&
               (w[i - 2] == "doubt" || w[i - 1] == "doubt")) {
      // explicit exception: no flip
    } else if (negated(w[i - 3])) {
      valence *= kNegationScalar;
    }
  }
  return valence;
}

double special_idioms_check(double valence, const TokenContext& ctx,
                            std::size_t i) {
  const auto& w = ctx.lower;
  const auto& cases = special_cases();
  const std::string onezero = w[i - 1] + " " + w[i];
  const std::string twoonezero = w[i - 2] + " " + w[i - 1] + " " + w[i];
  const std::string twoone = w[i - 2] + " " + w[i - 1];
  const std::string threetwoone = w[i - 3] + " " + w[i - 2] + " " + w[i - 1];
  const std::string threetwo = w[i - 3] + " " + w[i - 2];
  for (const std::string* seq :
       {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
    if (auto it = cases.find(*seq); it != cases.end()) {
      valence = it->second;
      break;
    }
  }
  if (w.size() - 1 > i) {
    const std::string zeroone = w[i] + " " + w[i + 1];
    if (auto it = cases.find(zeroone); it != cases.end()) {
      valence = it->second;
    }
  }
  if (w.size() - 1 > i + 1) {
    const std::string zeroonetwo = w[i] + " " + w[i + 1] + " " + w[i + 2];
    if (auto it = cases.find(zeroonetwo); it != cases.end()) {
      valence = it->second;
    }
  }
  for (const std::string* seq : {&threetwoone, &threetwo, &twoone}) {
    if (auto it = booster_dict().find(*seq); it != booster_dict().end()) {
      valence += it->second;
    }
  }
  return valence;
}

double least_check(double valence, const TokenContext& ctx, std::size_t i) {
  const auto& w = ctx.lower;
  if (i > 1 && !ctx.lexicon.contains(w[i - 1]) && w[i - 1] == "least") {
    if (w[i - 2] != "at" && w[i - 2] != "very") {
      valence *= kNegationScalar;
    }
  } else if (i > 0 && !ctx.lexicon.contains(w[i - 1]) &&
             w[i - 1] == "least") {
    valence *= kNegationScalar;
  }
  return valence;
}

double token_valence(const TokenContext& ctx, std::size_t i) {
  double valence = 0.0;
  const std::string& item = ctx.words[i];
  const std::string& item_lower = ctx.lower[i];
  if (!ctx.lexicon.contains(item_lower)) return valence;
  valence = ctx.lexicon.valence(item_lower);

  // "no" directly before another lexicon word acts as a negation of that
  // word rather than carrying its own valence.
  if (item_lower == "no" && i != ctx.words.size() - 1 &&
      ctx.lexicon.contains(ctx.lower[i + 1])) {
    valence = 0.0;
  }
  if ((i > 0 && ctx.lower[i - 1] == "no") ||
      (i > 1 && ctx.lower[i - 2] == "no") ||
      (i > 2 && ctx.lower[i - 3] == "no" &&
       (ctx.lower[i - 1] == "or" || ctx.lower[i - 1] == "nor"))) {
    valence = ctx.lexicon.valence(item_lower) * kNegationScalar;
  }

  if (is_upper_token(item) && ctx.is_cap_diff) {
    valence += valence > 0 ? kCapsIncr : -kCapsIncr;
  }

  for (std::size_t start_i = 0; start_i < 3; ++start_i) {
    if (i <= start_i) continue;
    const std::size_t prior = i - (start_i + 1);
    if (ctx.lexicon.contains(ctx.lower[prior])) continue;
    double s = scalar_inc_dec(ctx.words[prior], ctx.lower[prior], valence,
                              ctx.is_cap_diff);
    if (start_i == 1 && s != 0.0) s *= 0.95;
    if (start_i == 2 && s != 0.0) s *= 0.9;
    valence += s;
    valence = negation_check(valence, ctx, start_i, i);
    if (start_i == 2) {
      valence = special_idioms_check(valence, ctx, i);
    }
  }
  return least_check(valence, ctx, i);
}

void but_check(const std::vector<std::string>& lower,
               std::vector<double>& sentiments) {
  const auto it = std::find(lower.begin(), lower.end(), "but");
  if (it == lower.end()) return;
  const auto bi = static_cast<std::size_t>(it - lower.begin());
  for (std::size_t si = 0; si < sentiments.size(); ++si) {
    if (si < bi) {
      sentiments[si] *= 0.5;
    } else if (si > bi) {
      sentiments[si] *= 1.5;
    }
  }
}

double punctuation_emphasis(std::string_view text) {
  const auto ep_count =
      std::min<std::ptrdiff_t>(std::count(text.begin(), text.end(), '!'), 4);
  double amplifier = static_cast<double>(ep_count) * 0.292;
  const auto qm_count = std::count(text.begin(), text.end(), '?');
  if (qm_count > 1) {
    amplifier += qm_count <= 3 ? static_cast<double>(qm_count) * 0.18 : 0.96;
  }
  return amplifier;
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("sentiment: cannot read lexicon file " + path.string());
  }
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ValidationError("sentiment: lexicon line " +
                            std::to_string(line_no) +
                            " is not token<TAB>valence");
    }
    std::string token = to_lower(std::string_view(line).substr(0, tab));
    std::string_view rest = std::string_view(line).substr(tab + 1);
    // extra tab-separated columns are permitted and ignored
    if (const std::size_t next = rest.find('\t');
        next != std::string_view::npos) {
      rest = rest.substr(0, next);
    }
    char* end = nullptr;
    const std::string value_str(rest);
    const double valence = std::strtod(value_str.c_str(), &end);
    if (end == value_str.c_str() || *end != '\0') {
      throw ValidationError("sentiment: lexicon line " +
                            std::to_string(line_no) +
                            " has a non-numeric valence");
    }
    lexicon.entries_[std::move(token)] = valence;
  }
  return lexicon;
}

Lexicon Lexicon::negated() const {
  Lexicon out;
  for (const auto& [token, valence] : entries_) {
    out.entries_[token] = -valence;
  }
  return out;
}

SentimentScore score_title(std::string_view title, const Lexicon& lexicon) {
  const std::vector<std::string> words = words_and_emoticons(title);
  std::vector<std::string> lower;
  lower.reserve(words.size());
  for (const std::string& w : words) lower.push_back(to_lower(w));

  const TokenContext ctx{words, lower, lexicon,
                         allcap_differential(words)};

  std::vector<double> sentiments;
  sentiments.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    // boosters themselves score zero; their effect lands on the words they
    // modify
    if (booster_dict().count(lower[i]) > 0) {
      sentiments.push_back(0.0);
      continue;
    }
    if (i < words.size() - 1 && lower[i] == "kind" &&
        lower[i + 1] == "of") {
      sentiments.push_back(0.0);
      continue;
    }
    sentiments.push_back(token_valence(ctx, i));
  }
  but_check(lower, sentiments);

  SentimentScore score;
  if (sentiments.empty()) return score;

  double sum_s = 0.0;
  for (double s : sentiments) sum_s += s;
  const double punct = punctuation_emphasis(title);
  if (sum_s > 0) {
    sum_s += punct;
  } else if (sum_s < 0) {
    sum_s -= punct;
  }
  score.compound = normalize_score(sum_s);

  double pos_sum = 0.0;
  double neg_sum = 0.0;
  double neu_count = 0.0;
  for (double s : sentiments) {
    if (s > 0) {
      pos_sum += s + 1.0;
    } else if (s < 0) {
      neg_sum += s - 1.0;
    } else {
      neu_count += 1.0;
    }
  }
  if (pos_sum > std::fabs(neg_sum)) {
    pos_sum += punct;
  } else if (pos_sum < std::fabs(neg_sum)) {
    neg_sum -= punct;
  }
  const double total = pos_sum + std::fabs(neg_sum) + neu_count;
  score.positive = std::fabs(pos_sum / total);
  score.negative = std::fabs(neg_sum / total);
  score.neutral = std::fabs(neu_count / total);
  return score;
}

}  // namespace biasaudit::sentiment
