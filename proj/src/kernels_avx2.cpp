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

// Compiled with -mavx2 -mfma; must only be entered after the cpuid check.

#include "biasaudit/kernels_backends.hpp"

#if defined(BIASAUDIT_HAVE_AVX2)

#include <immintrin.h>

#include <cassert>
#include <cstddef>

namespace biasaudit::kernels::avx2 {

bool cpu_supports_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double sum(std::span<const double> x) {
  const double* p = x.data();
  std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += p[i];
  return total;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  const double* pa = a.data();
  const double* pb = b.data();
  std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i),
                          acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += pa[i] * pb[i];
  return total;
}

double rank_weighted_sum(std::span<const double> x) {
  const double* p = x.data();
  std::size_t n = x.size();
  // ranks are 1-based
  __m256d rank = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(rank, _mm256_loadu_pd(p + i), acc);
    rank = _mm256_add_pd(rank, step);
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += static_cast<double>(i + 1) * p[i];
  return total;
}

CenteredSums centered_sums(std::span<const double> x, double mean) {
  const double* p = x.data();
  std::size_t n = x.size();
  const __m256d mu = _mm256_set1_pd(mean);
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), mu);
    const __m256d d2 = _mm256_mul_pd(d, d);
    acc2 = _mm256_add_pd(acc2, d2);
    acc3 = _mm256_fmadd_pd(d2, d, acc3);
  }
  CenteredSums out;
  out.m2 = hsum(acc2);
  out.m3 = hsum(acc3);
  for (; i < n; ++i) {
    const double d = p[i] - mean;
    const double d2 = d * d;
    out.m2 += d2;
    out.m3 += d2 * d;
  }
  return out;
}

}  // namespace biasaudit::kernels::avx2

#endif  // BIASAUDIT_HAVE_AVX2
