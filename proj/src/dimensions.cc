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

#include "banditlab/dimensions.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace banditlab {
namespace {

// floor(log2(size)): a shattered binary tree of depth d needs 2^d distinct
// hypotheses, one per leaf.
int LdimUpperBound(int size) {
  return std::bit_width(static_cast<unsigned>(size)) - 1;
}

}  // namespace

int Ldim(const VersionSpace& v) {
  const int size = v.size();
  if (size == 0) return -1;
  if (size == 1) return 0;
  MemoTable& memo = v.klass().memo();
  if (auto cached = memo.Find(MemoKind::kLdim, v.members())) return *cached;

  const int n = v.num_instances();
  const int k = v.num_labels();
  const int upper = LdimUpperBound(size);
  int best = 0;

  struct Part {
    VersionSpace space;
    int size;
  };
  std::vector<Part> parts;
  parts.reserve(k);
  for (Instance x = 0; x < n && best < upper; ++x) {
    parts.clear();
    for (Label y = 0; y < k; ++y) {
      VersionSpace r = RestrictEq(v, x, y);
      const int r_size = r.size();
      if (r_size > 0) parts.push_back({std::move(r), r_size});
    }
    if (parts.size() < 2) continue;
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Part& a, const Part& b) { return a.size > b.size; });
    if (1 + LdimUpperBound(parts[1].size) <= best) continue;

    // Second-largest child dimension, visiting children by decreasing size so
    // the size bound can cut the scan short.
    int top1 = -1;
    int top2 = -1;
    for (const Part& part : parts) {
      if (LdimUpperBound(part.size) <= top2) break;
      const int d = Ldim(part.space);
      if (d > top1) {
        top2 = top1;
        top1 = d;
      } else if (d > top2) {
        top2 = d;
      }
    }
    best = std::max(best, 1 + top2);
  }
  memo.Insert(MemoKind::kLdim, v.members(), best);
  return best;
}

int Bldim(const VersionSpace& v) {
  const int size = v.size();
  if (size == 0) return -1;
  if (size == 1) return 0;
  MemoTable& memo = v.klass().memo();
  if (auto cached = memo.Find(MemoKind::kBldim, v.members())) return *cached;

  const int n = v.num_instances();
  const int k = v.num_labels();
  int best = 0;
  for (Instance x = 0; x < n; ++x) {
    // Labels nobody in v takes at x leave v unchanged; their child value is
    // bldim(v) itself, never below a present label's value, so the min runs
    // over present labels only.
    int worst = std::numeric_limits<int>::max();
    for (Label y = 0; y < k && worst >= best; ++y) {
      if ((v.members() & v.klass().Column(x, y)).None()) continue;
      worst = std::min(worst, Bldim(RestrictNe(v, x, y)));
    }
    if (worst != std::numeric_limits<int>::max()) {
      best = std::max(best, 1 + worst);
    }
  }
  memo.Insert(MemoKind::kBldim, v.members(), best);
  return best;
}

// -- Capacity -----------------------------------------------------------------

ClassCollection::ClassCollection(ClassPtr klass) : klass_(std::move(klass)) {}

ClassCollection::ClassCollection(ClassPtr klass,
                                 std::vector<VersionSpace> spaces)
    : klass_(std::move(klass)) {
  spaces_.reserve(spaces.size());
  for (auto& v : spaces) Add(std::move(v));
}

void ClassCollection::Add(VersionSpace v) {
  if (v.class_ptr() != klass_) {
    throw std::invalid_argument("version space belongs to another class");
  }
  if (v.empty()) throw std::invalid_argument("collections hold nonempty spaces only");
  spaces_.push_back(std::move(v));
}

BigInt CapacityTerm(int num_labels, int ldim) {
  if (ldim < 0) return BigInt(0);
  return boost::multiprecision::pow(BigInt(num_labels),
                                    static_cast<unsigned>(2 * ldim));
}

BigInt Capacity(const ClassCollection& collection) {
  BigInt total = 0;
  for (const auto& v : collection.spaces()) {
    if (v.empty()) throw std::invalid_argument("empty member in collection");
    total += CapacityTerm(collection.num_labels(), Ldim(v));
  }
  return total;
}

}  // namespace banditlab
