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

// Regenerates data/fixture/corpus.jsonl: a synthetic three-outlet corpus
// with one mention-concentrated outlet (quanta_like) and two near-uniform
// ones (wired_like, newsci_like). The file is committed; rerun this tool
// only when the fixture design changes.
//
// Deterministic by construction: a fixed-seed mt19937 plus explicit range
// reduction (no std::*_distribution, whose outputs vary across standard
// library implementations).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

const std::vector<std::string>& first_names() {
  static const std::vector<std::string> v = {
      "Adela",  "Bram",    "Carmen", "Dmitri", "Esther", "Farid",
      "Greta",  "Hiroshi", "Imogen", "Jonas",  "Katya",  "Lionel",
      "Mireia", "Nadia",   "Olaf",   "Priya",  "Quentin", "Rosa",
      "Samir",  "Tilda",   "Umar",   "Vera",   "Wendell", "Ximena",
      "Yusuf",  "Zelda"};
  return v;
}

const std::vector<std::string>& last_names() {
  static const std::vector<std::string> v = {
      "Aldrin",   "Bexley",  "Cardamon", "Dorrit",   "Eastwood",
      "Fenwick",  "Garrel",  "Hollis",   "Irving",   "Jasper",
      "Kestrel",  "Loam",    "Merton",   "Nocturne", "Oakhart",
      "Pellerin", "Quill",   "Rasket",   "Sorrel",   "Thistle",
      "Umbra",    "Vantor",  "Wexford",  "Yarrow"};
  return v;
}

// Scientists mentioned in article bodies.
std::vector<std::string> make_scientists() {
  std::vector<std::string> persons;
  const auto& fn = first_names();
  const auto& ln = last_names();
  for (std::size_t i = 0; i < 120; ++i) {
    persons.push_back(fn[i % fn.size()] + " " + ln[(i * 7 + i / fn.size()) %
                                                   ln.size()]);
  }
  return persons;
}

// Journalist bylines; surnames get a distinct suffix so no byline collides
// with (or is a substring of) a scientist name.
std::vector<std::string> make_authors(const std::string& outlet_tag) {
  std::vector<std::string> authors;
  const auto& fn = first_names();
  for (std::size_t i = 0; i < 18; ++i) {
    authors.push_back(fn[(i * 5 + 3) % fn.size()] + " " + outlet_tag +
                      (i < 9 ? "berg" : "wick") + std::to_string(i % 9 + 1));
  }
  return authors;
}

const std::vector<std::string>& positive_words() {
  static const std::vector<std::string> v = {
      "breakthrough", "stunning", "promising", "elegant",
      "remarkable",   "hopeful",  "brilliant", "successful"};
  return v;
}

const std::vector<std::string>& negative_words() {
  static const std::vector<std::string> v = {
      "crisis", "alarming", "deadly", "failure",
      "threat", "grim",     "flawed", "dangerous"};
  return v;
}

const std::vector<std::string>& topic_words_quanta() {
  static const std::vector<std::string> v = {
      "quantum", "theory", "proof",    "geometry", "symmetry",
      "prime",   "graph",  "manifold", "entropy",  "conjecture"};
  return v;
}

const std::vector<std::string>& topic_words_general() {
  static const std::vector<std::string> v = {
      "climate", "vaccine", "galaxy", "neuron",  "robot",
      "genome",  "ocean",   "fusion", "battery", "telescope"};
  return v;
}

std::string make_title(Rng& rng, bool concentrated) {
  const auto& topics =
      concentrated ? topic_words_quanta() : topic_words_general();
  const std::string topic1 = topics[rng.below(topics.size())];
  const std::string topic2 = topics[rng.below(topics.size())];
  const double tone = rng.unit();
  std::string adjective;
  if (tone < 0.35) {
    adjective = positive_words()[rng.below(positive_words().size())];
  } else if (tone < 0.6) {
    adjective = negative_words()[rng.below(negative_words().size())];
  } else {
    adjective = "new";
  }
  static const char* templates[] = {
      "The %s %s of %s research",
      "A %s %s reshapes %s studies",
      "Why the %s %s matters for %s science",
      "Inside the %s %s behind %s work",
  };
  char buf[160];
  std::snprintf(buf, sizeof(buf), templates[rng.below(4)], adjective.c_str(),
                topic1.c_str(), topic2.c_str());
  buf[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(buf[0])));
  return buf;
}

std::string make_date(Rng& rng) {
  const int year = static_cast<int>(rng.range(2014, 2024));
  const int month = static_cast<int>(rng.range(1, 12));
  const int day = static_cast<int>(rng.range(1, 28));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

struct OutletSpec {
  std::string id;
  std::string tag;
  bool concentrated;
};

void write_outlet(std::ostream& out, const OutletSpec& spec, Rng& rng,
                  const std::vector<std::string>& scientists) {
  const std::vector<std::string> authors = make_authors(spec.tag);

  // Zipf-style popularity weights for the concentrated outlet; flat
  // popularity for the others.
  std::vector<double> cumulative;
  double total = 0.0;
  for (std::size_t r = 0; r < scientists.size(); ++r) {
    const double weight =
        spec.concentrated
            ? 1.0 / std::pow(static_cast<double>(r + 1), 1.15)
            : 1.0;
    total += weight;
    cumulative.push_back(total);
  }
  auto pick_scientist = [&]() -> const std::string& {
    const double u = rng.unit() * total;
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    return scientists[std::min(idx, scientists.size() - 1)];
  };

  // The blacklist-and-noise pool every outlet carries.
  static const char* kNoise[] = {
      "Albert Einstein", "Isaac Newton",  "Marie Curie", "Stephen Hawking",
      "Elon Musk",       "Donald Trump",  "Joe Biden",   "Puzzle",
      ",",               "Dr",            "Committee"};

  const int article_count = 500;
  for (int n = 0; n < article_count; ++n) {
    json obj;
    char id[40];
    std::snprintf(id, sizeof(id), "%s-%04d", spec.id.c_str(), n + 1);
    obj["id"] = id;
    obj["outlet"] = spec.id;
    obj["title"] = make_title(rng, spec.concentrated);
    obj["date"] = make_date(rng);

    json authors_json = json::array();
    const std::string& lead = authors[rng.below(authors.size())];
    authors_json.push_back(lead);
    if (rng.unit() < 0.15) {
      const std::string& second = authors[rng.below(authors.size())];
      if (second != lead) authors_json.push_back(second);
    }
    obj["authors"] = authors_json;

    std::map<std::string, std::int64_t> counts;
    const int persons = static_cast<int>(
        spec.concentrated ? rng.range(2, 6) : rng.range(1, 4));
    for (int p = 0; p < persons; ++p) {
      const std::string& who = pick_scientist();
      counts[who] += spec.concentrated ? rng.range(1, 6) : rng.range(1, 2);
    }
    // noise mentions filtered out by the blacklist stage
    if (rng.unit() < 0.12) {
      counts[kNoise[rng.below(std::size(kNoise))]] += rng.range(1, 3);
    }
    // occasionally mention a journalist by name (exercises anonymisation)
    if (rng.unit() < 0.06) {
      counts[authors[rng.below(authors.size())]] += rng.range(1, 2);
    }
    obj["mention_counts"] = counts;

    if (rng.unit() < 0.7) {
      obj["url"] = "https://example.org/" + spec.id + "/" + id;
    }
    out << obj.dump() << "\n";
  }

  // Planted repetition-bias case: one author keeps returning to the same
  // scientist, comfortably past both flag thresholds.
  if (spec.concentrated) {
    const std::string& repeat_author = authors[3];
    const std::string& target = scientists[1];
    for (int n = 0; n < 8; ++n) {
      json obj;
      char id[40];
      std::snprintf(id, sizeof(id), "%s-rep-%02d", spec.id.c_str(), n + 1);
      obj["id"] = id;
      obj["outlet"] = spec.id;
      obj["title"] = "Another long interview with a familiar theorist";
      obj["date"] = make_date(rng);
      obj["authors"] = json::array({repeat_author});
      std::map<std::string, std::int64_t> counts;
      counts[target] = 3;
      counts[pick_scientist()] += 1;
      obj["mention_counts"] = counts;
      out << obj.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_path =
      argc > 1 ? argv[1] : "data/fixture/corpus.jsonl";
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 1;
  }
  Rng rng(20260501);
  const std::vector<std::string> scientists = make_scientists();
  const OutletSpec outlets[] = {
      {"quanta_like", "Quill", true},
      {"wired_like", "Wire", false},
      {"newsci_like", "Scribe", false},
  };
  for (const OutletSpec& spec : outlets) {
    write_outlet(out, spec, rng, scientists);
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}
