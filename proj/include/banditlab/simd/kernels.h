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

#ifndef BANDITLAB_SIMD_KERNELS_H_
#define BANDITLAB_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "banditlab/simd/kernel_table.h"

// Data-parallel inner loops used by the rest of the library. Every kernel has
// a scalar reference implementation; vectorized variants must produce
// identical results for the integer kernels and results within rounding for
// the floating-point reductions. The active table is chosen once at startup
// from the CPU feature set and can be forced with BANDITLAB_SIMD=scalar|avx2.

namespace banditlab::simd {

const KernelTable& ScalarKernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* Avx2Kernels();

// The table selected for this process.
const KernelTable& Kernels();

// Overrides the process-wide selection. Used by benchmarks and the
// equivalence tests; not thread-safe with concurrent kernel calls.
void SetActiveIsa(Isa isa);

std::string_view IsaName(Isa isa);

// Convenience wrappers over the active table.
inline void AndWords(std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b,
                     std::span<std::uint64_t> out) {
  Kernels().and_words(a.data(), b.data(), out.data(), out.size());
}
inline void AndNotWords(std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b,
                        std::span<std::uint64_t> out) {
  Kernels().andnot_words(a.data(), b.data(), out.data(), out.size());
}
inline void OrWords(std::span<const std::uint64_t> a,
                    std::span<const std::uint64_t> b,
                    std::span<std::uint64_t> out) {
  Kernels().or_words(a.data(), b.data(), out.data(), out.size());
}
inline std::uint64_t PopCount(std::span<const std::uint64_t> a) {
  return Kernels().popcount_words(a.data(), a.size());
}
inline bool AnyBits(std::span<const std::uint64_t> a) {
  return Kernels().any_words(a.data(), a.size());
}
inline double Dot(std::span<const double> a, std::span<const double> b) {
  return Kernels().dot(a.data(), b.data(), a.size());
}
inline void Axpy(double alpha, std::span<const double> x,
                 std::span<double> y) {
  Kernels().axpy(alpha, x.data(), y.data(), y.size());
}
inline double Sum(std::span<const double> w) {
  return Kernels().sum(w.data(), w.size());
}
inline void Scale(std::span<double> w, double factor) {
  Kernels().scale(w.data(), factor, w.size());
}
inline double MaskedSum(std::span<const double> w,
                        std::span<const std::int32_t> labels,
                        std::int32_t label) {
  return Kernels().masked_sum(w.data(), labels.data(), label, w.size());
}
inline void MaskedScale(std::span<double> w,
                        std::span<const std::int32_t> labels,
                        std::int32_t label, double factor) {
  Kernels().masked_scale(w.data(), labels.data(), label, factor, w.size());
}

}  // namespace banditlab::simd

#endif  // BANDITLAB_SIMD_KERNELS_H_
