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

#include "biasaudit/kernels.hpp"

#include <cstdlib>
#include <string_view>

#include "biasaudit/kernels_backends.hpp"

namespace biasaudit::kernels {
namespace {

struct Backend {
  std::string_view name;
  double (*sum)(std::span<const double>);
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*rank_weighted_sum)(std::span<const double>);
  CenteredSums (*centered_sums)(std::span<const double>, double);
};

// TODO: add a NEON backend once there is aarch64 hardware to test on; the
// dispatch table below is the only place that needs to know.
constexpr Backend kScalar = {
    "scalar", &scalar::sum, &scalar::dot, &scalar::rank_weighted_sum,
    &scalar::centered_sums,
};

#if defined(BIASAUDIT_HAVE_AVX2)
constexpr Backend kAvx2 = {
    "avx2", &avx2::sum, &avx2::dot, &avx2::rank_weighted_sum,
    &avx2::centered_sums,
};
#endif

const Backend* pick_backend() {
  const char* env = std::getenv("BIASAUDIT_KERNELS");
  const std::string_view requested = env != nullptr ? env : "";
  if (requested == "scalar") return &kScalar;
#if defined(BIASAUDIT_HAVE_AVX2)
  if (avx2::cpu_supports_avx2() && (requested.empty() || requested == "avx2")) {
    return &kAvx2;
  }
#endif
  return &kScalar;
}

// Selected once; fixed for the lifetime of the process unless a test calls
// set_backend().
const Backend* g_backend = pick_backend();

}  // namespace

double sum(std::span<const double> x) { return g_backend->sum(x); }

double dot(std::span<const double> a, std::span<const double> b) {
  return g_backend->dot(a, b);
}

double rank_weighted_sum(std::span<const double> x) {
  return g_backend->rank_weighted_sum(x);
}

CenteredSums centered_sums(std::span<const double> x, double mean) {
  return g_backend->centered_sums(x, mean);
}

std::string_view active_backend() { return g_backend->name; }

bool set_backend(std::string_view name) {
  if (name == "scalar") {
    g_backend = &kScalar;
    return true;
  }
#if defined(BIASAUDIT_HAVE_AVX2)
  if (name == "avx2" && avx2::cpu_supports_avx2()) {
    g_backend = &kAvx2;
    return true;
  }
#endif
  return false;
}

}  // namespace biasaudit::kernels
