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

#include "banditlab/corpus.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace banditlab {

ClassPtr FullClass(int n, int k) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(k);
    if (count > static_cast<std::size_t>(kMaxHypotheses)) {
      throw std::invalid_argument(fmt::format("Y^X too large for n={} k={}", n, k));
    }
  }
  std::vector<std::vector<Label>> rows(count, std::vector<Label>(n));
  for (std::size_t r = 0; r < count; ++r) {
    std::size_t rest = r;
    for (int x = 0; x < n; ++x) {
      rows[r][x] = static_cast<Label>(rest % k);
      rest /= k;
    }
  }
  return MakeClass(fmt::format("full-n{}-k{}", n, k), n, k, rows);
}

ClassPtr PermutationClass(int delta, int k) {
  if (delta < 1 || k < 2) throw std::invalid_argument("permutation class needs delta>=1, k>=2");
  std::vector<std::vector<Label>> perms;
  std::vector<Label> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<Label>> rows = {{}};
  for (int j = 0; j < delta; ++j) {
    std::vector<std::vector<Label>> next;
    next.reserve(rows.size() * perms.size());
    for (const auto& prefix : rows) {
      for (const auto& perm : perms) {
        auto row = prefix;
        row.insert(row.end(), perm.begin(), perm.end());
        next.push_back(std::move(row));
      }
    }
    rows = std::move(next);
    if (rows.size() > static_cast<std::size_t>(kMaxHypotheses)) {
      throw std::invalid_argument("permutation class too large");
    }
  }
  return MakeClass(fmt::format("perm-d{}-k{}", delta, k), delta * k, k, rows);
}

ClassPtr RandomClass(int n, int k, Rng& rng) {
  ClassPtr full = FullClass(n, k);
  std::vector<std::vector<Label>> rows;
  while (rows.empty()) {
    for (int h = 0; h < full->size(); ++h) {
      if (rng() & 1u) {
        auto r = full->Row(h);
        rows.emplace_back(r.begin(), r.end());
      }
    }
  }
  return MakeClass(fmt::format("random-n{}-k{}", n, k), n, k, rows);
}

std::vector<VersionSpace> AllNonemptySubspaces(const ClassPtr& full) {
  const int size = full->size();
  if (size > 24) throw std::invalid_argument("too many rows to enumerate subsets");
  std::vector<VersionSpace> out;
  out.reserve((std::size_t{1} << size) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
    HypothesisBits bits(size);
    bits.mutable_words()[0] = mask;
    out.emplace_back(full, std::move(bits));
  }
  return out;
}

ClassPtr Materialize(const VersionSpace& v, std::string name) {
  std::vector<std::vector<Label>> rows;
  for (int h : v.Indices()) {
    auto r = v.klass().Row(h);
    rows.emplace_back(r.begin(), r.end());
  }
  return MakeClass(std::move(name), v.num_instances(), v.num_labels(), rows);
}

}  // namespace banditlab
