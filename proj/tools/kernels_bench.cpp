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

// Microbenchmark for the reduction kernels: scalar reference vs whatever
// the runtime dispatch picked. Corpus-scale inputs are tiny, so this is
// mostly a sanity check that the SIMD path actually pays for itself.
//
//   kernels_bench [elements] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "biasaudit/kernels.hpp"
#include "biasaudit/kernels_backends.hpp"

namespace kernels = biasaudit::kernels;

namespace {

volatile double g_sink = 0.0;

template <typename F>
double time_op(F&& op, int repeats) {
  // warmup
  g_sink = op();
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) {
    g_sink = op();
  }
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count() /
         static_cast<double>(repeats);
}

void report(const char* name, double scalar_s, double active_s,
            double bytes) {
  std::printf("%-18s scalar %8.3f GB/s   %-6s %8.3f GB/s   speedup %.2fx\n",
              name, bytes / scalar_s / 1e9,
              std::string(kernels::active_backend()).c_str(),
              bytes / active_s / 1e9, scalar_s / active_s);
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n =
      argc > 1 ? static_cast<std::size_t>(std::atoll(argv[1])) : 1u << 20;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 200;

  std::mt19937_64 rng(42);
  std::vector<double> a(n);
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = static_cast<double>(rng() % 1000 + 1);
    b[i] = static_cast<double>(rng() % 1000 + 1);
  }
  const double mean = kernels::sum(a) / static_cast<double>(n);
  const double vec_bytes = static_cast<double>(n) * sizeof(double);

  std::printf("n = %zu doubles, %d repeats, active backend = %s\n", n,
              repeats, std::string(kernels::active_backend()).c_str());

  report("sum",
         time_op([&] { return kernels::scalar::sum(a); }, repeats),
         time_op([&] { return kernels::sum(a); }, repeats), vec_bytes);
  report("dot",
         time_op([&] { return kernels::scalar::dot(a, b); }, repeats),
         time_op([&] { return kernels::dot(a, b); }, repeats),
         2 * vec_bytes);
  report("rank_weighted_sum",
         time_op([&] { return kernels::scalar::rank_weighted_sum(a); },
                 repeats),
         time_op([&] { return kernels::rank_weighted_sum(a); }, repeats),
         vec_bytes);
  report("centered_sums",
         time_op([&] { return kernels::scalar::centered_sums(a, mean).m3; },
                 repeats),
         time_op([&] { return kernels::centered_sums(a, mean).m3; },
                 repeats),
         vec_bytes);
  return 0;
}
