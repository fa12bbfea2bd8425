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

#ifndef BANDITLAB_SIMD_KERNEL_TABLE_H_
#define BANDITLAB_SIMD_KERNEL_TABLE_H_

#include <cstddef>
#include <cstdint>

// Kept free of other standard headers: the vectorized translation units
// include only this file so no inline library code is built with wider ISA
// flags than the host guarantees.

namespace banditlab::simd {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  const char* name;

  // Bitset kernels over n 64-bit words.
  void (*and_words)(const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out, std::size_t n);
  // out = a & ~b
  void (*andnot_words)(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out, std::size_t n);
  void (*or_words)(const std::uint64_t* a, const std::uint64_t* b,
                   std::uint64_t* out, std::size_t n);
  std::uint64_t (*popcount_words)(const std::uint64_t* a, std::size_t n);
  bool (*any_words)(const std::uint64_t* a, std::size_t n);

  // Dense double kernels.
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*sum)(const double* w, std::size_t n);
  void (*scale)(double* w, double factor, std::size_t n);

  // Sum of w[i] over i with labels[i] == label.
  double (*masked_sum)(const double* w, const std::int32_t* labels,
                       std::int32_t label, std::size_t n);
  // w[i] *= factor for i with labels[i] == label.
  void (*masked_scale)(double* w, const std::int32_t* labels,
                       std::int32_t label, double factor, std::size_t n);
};

}  // namespace banditlab::simd

#endif  // BANDITLAB_SIMD_KERNEL_TABLE_H_
