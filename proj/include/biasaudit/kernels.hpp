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

#ifndef BIASAUDIT_KERNELS_HPP_
#define BIASAUDIT_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

// Reduction kernels underneath the distribution statistics. Every kernel has
// a scalar reference implementation and, on x86-64, an AVX2 variant selected
// once at startup via cpuid. The backend is process-wide and fixed for the
// lifetime of a run, so repeated runs on one machine are bit-identical.
//
// The environment variable BIASAUDIT_KERNELS=scalar|avx2 overrides the
// automatic pick (used by the equivalence tests).

namespace biasaudit::kernels {

// Sums of centered powers: sum (x - mean)^2 and sum (x - mean)^3.
struct CenteredSums {
  double m2 = 0.0;
  double m3 = 0.0;
};

// Sum of all elements.
double sum(std::span<const double> x);

// Dot product. Requires a.size() == b.size().
double dot(std::span<const double> a, std::span<const double> b);

// Sum of (i + 1) * x[i] with i zero-based, i.e. the 1-based rank-weighted
// sum over an already sorted vector.
double rank_weighted_sum(std::span<const double> x);

// Centered power sums around a precomputed mean.
CenteredSums centered_sums(std::span<const double> x, double mean);

// Name of the backend currently in use ("scalar" or "avx2").
std::string_view active_backend();

// Force a specific backend. Returns false (leaving the current backend in
// place) if the requested one is not available on this CPU.
bool set_backend(std::string_view name);

}  // namespace biasaudit::kernels

#endif  // BIASAUDIT_KERNELS_HPP_
