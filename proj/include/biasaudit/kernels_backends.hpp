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

#ifndef BIASAUDIT_KERNELS_BACKENDS_HPP_
#define BIASAUDIT_KERNELS_BACKENDS_HPP_

#include "biasaudit/kernels.hpp"

// Individual backends, exposed so the equivalence tests can pit them against
// each other directly. Application code goes through biasaudit/kernels.hpp.

namespace biasaudit::kernels::scalar {

double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double rank_weighted_sum(std::span<const double> x);
CenteredSums centered_sums(std::span<const double> x, double mean);

}  // namespace biasaudit::kernels::scalar

#if defined(BIASAUDIT_HAVE_AVX2)
namespace biasaudit::kernels::avx2 {

// Callable only when cpu_supports_avx2() is true.
bool cpu_supports_avx2();

double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double rank_weighted_sum(std::span<const double> x);
CenteredSums centered_sums(std::span<const double> x, double mean);

}  // namespace biasaudit::kernels::avx2
#endif  // BIASAUDIT_HAVE_AVX2

#endif  // BIASAUDIT_KERNELS_BACKENDS_HPP_
