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

#include "biasaudit/names.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biasaudit/errors.hpp"

namespace biasaudit::names {
namespace {

struct NfcPair {
  std::uint32_t starter;
  std::uint32_t combiner;
  std::uint32_t composed;
};

constexpr NfcPair kNfcPairs[] = {
#include "nfc_pairs.inc"
};

// Hangul composition is algorithmic, not table-driven.
constexpr std::uint32_t kHangulLBase = 0x1100;
constexpr std::uint32_t kHangulVBase = 0x1161;
constexpr std::uint32_t kHangulTBase = 0x11A7;
constexpr std::uint32_t kHangulSBase = 0xAC00;
constexpr std::uint32_t kHangulLCount = 19;
constexpr std::uint32_t kHangulVCount = 21;
constexpr std::uint32_t kHangulTCount = 28;

std::uint32_t compose_hangul(std::uint32_t a, std::uint32_t b) {
  // L + V -> LV syllable
  if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount &&
      b >= kHangulVBase && b < kHangulVBase + kHangulVCount) {
    const std::uint32_t l = a - kHangulLBase;
    const std::uint32_t v = b - kHangulVBase;
    return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
  }
  // LV syllable + T -> LVT syllable
  if (a >= kHangulSBase && a < kHangulSBase + 11172 &&
      (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
      b < kHangulTBase + kHangulTCount) {
    return a + (b - kHangulTBase);
  }
  return 0;
}

std::uint32_t compose_pair(std::uint32_t a, std::uint32_t b) {
  auto it = std::lower_bound(
      std::begin(kNfcPairs), std::end(kNfcPairs), std::make_pair(a, b),
      [](const NfcPair& p, const std::pair<std::uint32_t, std::uint32_t>& k) {
        return std::make_pair(p.starter, p.combiner) < k;
      });
  if (it != std::end(kNfcPairs) && it->starter == a && it->combiner == b) {
    return it->composed;
  }
  return compose_hangul(a, b);
}

std::vector<std::uint32_t> decode_utf8(std::string_view s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto byte = static_cast<unsigned char>(s[i]);
    std::uint32_t cp = 0;
    std::size_t len = 1;
    if (byte < 0x80) {
      cp = byte;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      len = 2;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      len = 3;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      len = 4;
    } else {
      // stray continuation byte; pass through as replacement
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(0xFFFD);
      break;
    }
    bool valid = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(s[i + k]);
      if ((cont & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (!valid) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Canonical composition over the decoded sequence. Decomposed input (base
// letter + combining mark) merges into the precomposed character; already
// composed text passes through unchanged. No decomposition pass: name data
// only needs the combining-sequence direction.
std::string compose_nfc(std::string_view s) {
  std::vector<std::uint32_t> cps = decode_utf8(s);
  std::vector<std::uint32_t> out;
  out.reserve(cps.size());
  for (std::uint32_t cp : cps) {
    if (!out.empty()) {
      if (const std::uint32_t composed = compose_pair(out.back(), cp)) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  std::string result;
  result.reserve(s.size());
  for (std::uint32_t cp : out) encode_utf8(cp, result);
  return result;
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::string trim_space_and_punct(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (is_ascii_space(s[b]) || is_ascii_punct(s[b]))) ++b;
  while (e > b && (is_ascii_space(s[e - 1]) || is_ascii_punct(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_credit_prefix(std::string_view s) {
  std::string cur(s);
  for (;;) {
    if (cur.size() >= 3 && (cur[0] == 'B' || cur[0] == 'b') &&
        (cur[1] == 'Y' || cur[1] == 'y') && is_ascii_space(cur[2])) {
      std::size_t k = 3;
      while (k < cur.size() && is_ascii_space(cur[k])) ++k;
      cur.erase(0, k);
      continue;
    }
    return cur;
  }
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_run = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out.push_back(' ');
    in_run = false;
    out.push_back(c);
  }
  return out;
}

// A token counts as alphabetic if it contains a letter. ASCII is classified
// exactly; beyond that, codepoints in the common letter blocks count.
bool is_letter_cp(std::uint32_t cp) {
  if (cp < 0x80) {
    return std::isalpha(static_cast<int>(cp)) != 0;
  }
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x370 && cp <= 0x3FF) return true;   // Greek
  if (cp >= 0x400 && cp <= 0x52F) return true;   // Cyrillic
  if (cp >= 0x531 && cp <= 0x58F) return true;   // Armenian
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;   // Hebrew
  if (cp >= 0x620 && cp <= 0x64A) return true;   // Arabic
  if (cp >= 0x900 && cp <= 0x97F) return true;   // Devanagari
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true; // Latin extended additional
  if (cp >= 0x3040 && cp <= 0x30FF) return true; // Kana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true; // CJK
  if (cp >= 0xAC00 && cp <= 0xD7AF) return true; // Hangul
  return false;
}

bool token_has_letter(std::string_view token) {
  for (std::uint32_t cp : decode_utf8(token)) {
    if (is_letter_cp(cp)) return true;
  }
  return false;
}

std::set<std::string> load_name_set(const nlohmann::json& doc,
                                    const std::string& key,
                                    const std::string& path,
                                    bool skip_uncleanable) {
  std::set<std::string> out;
  if (!doc.contains(key)) {
    throw ValidationError("names: blacklist file " + path +
                          " missing key \"" + key + "\"");
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array()) {
    throw ValidationError("names: blacklist key \"" + key +
                          "\" must be an array in " + path);
  }
  for (const auto& entry : arr) {
    if (!entry.is_string()) {
      throw ValidationError("names: blacklist key \"" + key +
                            "\" has a non-string entry in " + path);
    }
    try {
      out.insert(clean_name(entry.get<std::string>()));
    } catch (const ValidationError&) {
      // Pure-punctuation spurious entries clean to nothing. Such keys can
      // never appear in canonical mention maps, so they are dead weight.
      if (!skip_uncleanable) throw;
    }
  }
  return out;
}

}  // namespace

std::string clean_name(std::string_view raw) {
  std::string cur = compose_nfc(raw);
  // Trim and prefix-strip to a fixpoint: stripping punctuation can expose a
  // fresh credit prefix and vice versa.
  for (;;) {
    std::string next = strip_credit_prefix(trim_space_and_punct(cur));
    if (next == cur) break;
    cur = std::move(next);
  }
  cur = collapse_whitespace(cur);
  if (cur.empty()) {
    throw ValidationError("names: name \"" + std::string(raw) +
                          "\" is empty after cleaning");
  }
  return cur;
}

bool is_spurious(std::string_view canonical, const Blacklist& blacklist) {
  if (blacklist.spurious.count(std::string(canonical)) > 0) return true;
  int alphabetic_tokens = 0;
  std::size_t pos = 0;
  while (pos < canonical.size()) {
    std::size_t next = canonical.find(' ', pos);
    if (next == std::string_view::npos) next = canonical.size();
    if (token_has_letter(canonical.substr(pos, next - pos))) {
      if (++alphabetic_tokens >= 2) return false;
    }
    pos = next + 1;
  }
  return alphabetic_tokens < 2;
}

std::map<std::string, std::int64_t> filter_mentions(
    const std::map<std::string, std::int64_t>& mentions,
    const Blacklist& blacklist) {
  std::map<std::string, std::int64_t> out;
  for (const auto& [name, count] : mentions) {
    if (blacklist.deceased.count(name) > 0) continue;
    if (blacklist.public_figures.count(name) > 0) continue;
    if (is_spurious(name, blacklist)) continue;
    out.emplace(name, count);
  }
  return out;
}

Blacklist load_blacklist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("names: cannot read blacklist file " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("names: blacklist file " + path.string() +
                          " is not valid JSON: " + e.what());
  }
  Blacklist bl;
  bl.deceased = load_name_set(doc, "deceased", path.string(), false);
  bl.public_figures =
      load_name_set(doc, "public_figures", path.string(), false);
  bl.spurious = load_name_set(doc, "spurious", path.string(), true);
  return bl;
}

}  // namespace biasaudit::names
