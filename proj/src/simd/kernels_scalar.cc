// Copyright 2026 The banditlab Authors.
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

#include <bit>

#include "banditlab/simd/kernels.h"

namespace banditlab::simd {
namespace {

void AndScalar(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

void AndNotScalar(const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & ~b[i];
}

void OrScalar(const std::uint64_t* a, const std::uint64_t* b,
              std::uint64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

std::uint64_t PopCountScalar(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

bool AnyScalar(const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

double DotScalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void AxpyScalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double SumScalar(const double* w, std::size_t n) {
  double acc = 0.;
  for (std::size_t i = 0; i < n; ++i) acc += w[i];
  return acc;
}

void ScaleScalar(double* w, double factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) w[i] *= factor;
}

double MaskedSumScalar(const double* w, const std::int32_t* labels,
                       std::int32_t label, std::size_t n) {
  double acc = 0.;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == label) acc += w[i];
  }
  return acc;
}

void MaskedScaleScalar(double* w, const std::int32_t* labels,
                       std::int32_t label, double factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == label) w[i] *= factor;
  }
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table = {
      Isa::kScalar,    "scalar",        AndScalar,      AndNotScalar,
      OrScalar,        PopCountScalar,  AnyScalar,      DotScalar,
      AxpyScalar,      SumScalar,       ScaleScalar,    MaskedSumScalar,
      MaskedScaleScalar};
  return table;
}

}  // namespace banditlab::simd
