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

#include "biasaudit/kernels_backends.hpp"

#include <cassert>
#include <cstddef>

// Reference implementations. Plain left-to-right accumulation; the SIMD
// backends must agree with these within the tolerances checked in
// tests/test_kernels.cpp.

namespace biasaudit::kernels::scalar {

double sum(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double rank_weighted_sum(std::span<const double> x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += static_cast<double>(i + 1) * x[i];
  }
  return acc;
}

CenteredSums centered_sums(std::span<const double> x, double mean) {
  CenteredSums out;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    out.m2 += d2;
    out.m3 += d2 * d;
  }
  return out;
}

}  // namespace biasaudit::kernels::scalar
