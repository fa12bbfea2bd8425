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


#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "banditlab/simd/kernels.h"

namespace banditlab::simd {
namespace {

std::vector<std::uint64_t> RandomWords(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng();
  return w;
}

std::vector<double> RandomDoubles(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> w(n);
  for (auto& x : w) x = u(rng);
  return w;
}

// Lengths straddle every vector width and tail size.
const std::size_t kLengths[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 67, 130};

TEST_CASE("scalar table is self-consistent") {
  const KernelTable& s = ScalarKernels();
  std::uint64_t a[3] = {0b1100, ~0ull, 0};
  std::uint64_t b[3] = {0b1010, 1, 5};
  std::uint64_t out[3];
  s.and_words(a, b, out, 3);
  CHECK(out[0] == 0b1000);
  CHECK(out[1] == 1);
  s.andnot_words(a, b, out, 3);
  CHECK(out[0] == 0b0100);
  CHECK(out[1] == ~1ull);
  s.or_words(a, b, out, 3);
  CHECK(out[2] == 5);
  CHECK(s.popcount_words(a, 3) == 2 + 64);
  CHECK(s.any_words(a + 2, 1) == false);
  const double x[3] = {1, 2, 3};
  const double y[3] = {4, 5, 6};
  CHECK(s.dot(x, y, 3) == 32.0);
  CHECK(s.sum(x, 3) == 6.0);
  const std::int32_t labels[3] = {1, 0, 1};
  CHECK(s.masked_sum(x, labels, 1, 3) == 4.0);
}

TEST_CASE("AVX2 kernels match the scalar reference") {
  const KernelTable* v = Avx2Kernels();
  if (v == nullptr) {
    MESSAGE("AVX2 unavailable; nothing to compare");
    return;
  }
  const KernelTable& s = ScalarKernels();
  std::mt19937_64 rng(42);
  for (std::size_t n : kLengths) {
    CAPTURE(n);
    auto a = RandomWords(n, rng);
    auto b = RandomWords(n, rng);
    std::vector<std::uint64_t> o1(n), o2(n);
    s.and_words(a.data(), b.data(), o1.data(), n);
    v->and_words(a.data(), b.data(), o2.data(), n);
    CHECK(o1 == o2);
    s.andnot_words(a.data(), b.data(), o1.data(), n);
    v->andnot_words(a.data(), b.data(), o2.data(), n);
    CHECK(o1 == o2);
    s.or_words(a.data(), b.data(), o1.data(), n);
    v->or_words(a.data(), b.data(), o2.data(), n);
    CHECK(o1 == o2);
    CHECK(s.popcount_words(a.data(), n) == v->popcount_words(a.data(), n));
    CHECK(s.any_words(a.data(), n) == v->any_words(a.data(), n));
    std::vector<std::uint64_t> zeros(n, 0);
    CHECK_FALSE(v->any_words(zeros.data(), n));
    if (n > 0) {
      zeros[n - 1] = 1ull << 63;
      CHECK(v->any_words(zeros.data(), n));
    }

    auto x = RandomDoubles(n, rng);
    auto y = RandomDoubles(n, rng);
    const double tol = 1e-12 * (1.0 + n);
    CHECK(std::abs(s.dot(x.data(), y.data(), n) - v->dot(x.data(), y.data(), n)) <= tol);
    CHECK(std::abs(s.sum(x.data(), n) - v->sum(x.data(), n)) <= tol);

    auto y1 = y, y2 = y;
    s.axpy(0.75, x.data(), y1.data(), n);
    v->axpy(0.75, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15));

    auto w1 = x, w2 = x;
    s.scale(w1.data(), -1.5, n);
    v->scale(w2.data(), -1.5, n);
    CHECK(w1 == w2);

    std::vector<std::int32_t> labels(n);
    for (auto& l : labels) l = static_cast<std::int32_t>(rng() % 4);
    for (std::int32_t label = 0; label < 4; ++label) {
      CHECK(std::abs(s.masked_sum(x.data(), labels.data(), label, n) -
                     v->masked_sum(x.data(), labels.data(), label, n)) <= tol);
      auto m1 = x, m2 = x;
      s.masked_scale(m1.data(), labels.data(), label, 2.5, n);
      v->masked_scale(m2.data(), labels.data(), label, 2.5, n);
      CHECK(m1 == m2);
    }
  }
}

TEST_CASE("active table can be switched") {
  const Isa before = Kernels().isa;
  SetActiveIsa(Isa::kScalar);
  CHECK(Kernels().isa == Isa::kScalar);
  CHECK(IsaName(Isa::kScalar) == "scalar");
  if (Avx2Kernels() != nullptr) {
    SetActiveIsa(Isa::kAvx2);
    CHECK(Kernels().isa == Isa::kAvx2);
  }
  SetActiveIsa(before);
}

}  // namespace
}  // namespace banditlab::simd
