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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "banditlab/simd/kernels.h"

namespace banditlab::simd {

#if defined(BANDITLAB_HAVE_AVX2)
const KernelTable* Avx2KernelTable();
#endif

namespace {

bool CpuHasAvx2() {
#if defined(BANDITLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* SelectDefault() {
  const char* forced = std::getenv("BANDITLAB_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return &ScalarKernels();
  }
  if (const KernelTable* avx2 = Avx2Kernels()) return avx2;
  return &ScalarKernels();
}

std::atomic<const KernelTable*>& Active() {
  static std::atomic<const KernelTable*> active{SelectDefault()};
  return active;
}

}  // namespace

const KernelTable* Avx2Kernels() {
#if defined(BANDITLAB_HAVE_AVX2)
  if (CpuHasAvx2()) return Avx2KernelTable();
#endif
  return nullptr;
}

const KernelTable& Kernels() {
  return *Active().load(std::memory_order_relaxed);
}

void SetActiveIsa(Isa isa) {
  const KernelTable* table = &ScalarKernels();
  if (isa == Isa::kAvx2 && Avx2Kernels() != nullptr) table = Avx2Kernels();
  Active().store(table, std::memory_order_relaxed);
}

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace banditlab::simd
