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

#ifndef BIASAUDIT_TESTS_TESTUTIL_HPP_
#define BIASAUDIT_TESTS_TESTUTIL_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

// Shared deterministic generator; fixed seed keeps failures reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5EEDBA5Eu);
  return engine;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng()() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double rand_unit() {
  return static_cast<double>(rng()() >> 11) * 0x1.0p-53;
}

// Independent Gini oracle: mean absolute difference over twice the mean,
// sum |xi - xj| / (2 n^2 mu). Quadratic on purpose.
inline double gini_mad_oracle(std::span<const double> x) {
  const auto n = static_cast<double>(x.size());
  double sum = 0.0;
  double abs_diff = 0.0;
  for (double v : x) sum += v;
  for (double a : x) {
    for (double b : x) abs_diff += std::fabs(a - b);
  }
  return abs_diff / (2.0 * n * n * (sum / n));
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    path_ = base / ("biasaudit_test_" + std::to_string(rng()()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::filesystem::path data_dir() { return BIASAUDIT_DATA_DIR; }
inline std::filesystem::path test_data_dir() {
  return BIASAUDIT_TEST_DATA_DIR;
}

}  // namespace testutil

#endif  // BIASAUDIT_TESTS_TESTUTIL_HPP_
