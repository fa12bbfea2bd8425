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

// Built with -mavx2. Only reached after the dispatcher has confirmed CPU
// support, so nothing here may run during static initialization.

#include <immintrin.h>

#include "banditlab/simd/kernel_table.h"

namespace banditlab::simd {
namespace {

inline std::uint64_t PopCount64(std::uint64_t v) {
  return static_cast<std::uint64_t>(__builtin_popcountll(v));
}

void AndAvx2(const std::uint64_t* a, const std::uint64_t* b,
             std::uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

void AndNotAvx2(const std::uint64_t* a, const std::uint64_t* b,
                std::uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // andnot computes ~first & second.
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_andnot_si256(vb, va));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

void OrAvx2(const std::uint64_t* a, const std::uint64_t* b,
            std::uint64_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

// Nibble lookup popcount (Mula), accumulated with SAD against zero.
std::uint64_t PopCountAvx2(const std::uint64_t* a, std::size_t n) {
  const __m256i lookup = _mm256_setr_epi8(
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
      0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                           _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  std::uint64_t lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += PopCount64(a[i]);
  return total;
}

bool AnyAvx2(const std::uint64_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

inline double HorizontalSum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double DotAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i),
                                           _mm256_loadu_pd(b + i)));
  }
  double total = HorizontalSum(acc);
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void AxpyAvx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i,
                     _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double SumAvx2(const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(w + i));
  double total = HorizontalSum(acc);
  for (; i < n; ++i) total += w[i];
  return total;
}

void ScaleAvx2(double* w, double factor, std::size_t n) {
  const __m256d vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(w + i, _mm256_mul_pd(_mm256_loadu_pd(w + i), vf));
  }
  for (; i < n; ++i) w[i] *= factor;
}

// Widens four int32 labels at a time into a 64-bit lane mask.
inline __m256d LabelMask(const std::int32_t* labels, __m128i target) {
  const __m128i l = _mm_loadu_si128(reinterpret_cast<const __m128i*>(labels));
  const __m128i eq = _mm_cmpeq_epi32(l, target);
  return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(eq));
}

double MaskedSumAvx2(const double* w, const std::int32_t* labels,
                     std::int32_t label, std::size_t n) {
  const __m128i target = _mm_set1_epi32(label);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask = LabelMask(labels + i, target);
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(w + i)));
  }
  double total = HorizontalSum(acc);
  for (; i < n; ++i) {
    if (labels[i] == label) total += w[i];
  }
  return total;
}

void MaskedScaleAvx2(double* w, const std::int32_t* labels, std::int32_t label,
                     double factor, std::size_t n) {
  const __m128i target = _mm_set1_epi32(label);
  const __m256d vf = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mask = LabelMask(labels + i, target);
    const __m256d v = _mm256_loadu_pd(w + i);
    _mm256_storeu_pd(w + i, _mm256_blendv_pd(v, _mm256_mul_pd(v, vf), mask));
  }
  for (; i < n; ++i) {
    if (labels[i] == label) w[i] *= factor;
  }
}

const KernelTable kAvx2Table = {
    Isa::kAvx2,   "avx2",       AndAvx2,   AndNotAvx2,    OrAvx2,
    PopCountAvx2, AnyAvx2,      DotAvx2,   AxpyAvx2,      SumAvx2,
    ScaleAvx2,    MaskedSumAvx2, MaskedScaleAvx2};

}  // namespace

const KernelTable* Avx2KernelTable() { return &kAvx2Table; }

}  // namespace banditlab::simd
