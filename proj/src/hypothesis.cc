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

#include "banditlab/hypothesis.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include <fmt/format.h>

#include "banditlab/simd/kernels.h"

namespace banditlab {

// -- LabelSet -----------------------------------------------------------------

std::vector<Label> LabelSet::ToVector() const {
  std::vector<Label> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

// -- HypothesisBits -----------------------------------------------------------

HypothesisBits::HypothesisBits(int size)
    : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

void HypothesisBits::SetAll() {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

int HypothesisBits::Count() const {
  return static_cast<int>(simd::PopCount(words()));
}

bool HypothesisBits::Any() const { return simd::AnyBits(words()); }

int HypothesisBits::First() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    }
  }
  return -1;
}

std::vector<int> HypothesisBits::Indices() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(b));
    }
  }
  return out;
}

bool HypothesisBits::IsSubsetOf(const HypothesisBits& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

HypothesisBits HypothesisBits::operator&(const HypothesisBits& other) const {
  HypothesisBits out(size_);
  simd::AndWords(words(), other.words(), out.mutable_words());
  return out;
}

HypothesisBits HypothesisBits::operator|(const HypothesisBits& other) const {
  HypothesisBits out(size_);
  simd::OrWords(words(), other.words(), out.mutable_words());
  return out;
}

HypothesisBits HypothesisBits::AndNot(const HypothesisBits& other) const {
  HypothesisBits out(size_);
  simd::AndNotWords(words(), other.words(), out.mutable_words());
  return out;
}

std::size_t HypothesisBits::Hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(size_);
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// -- MemoTable ----------------------------------------------------------------

std::optional<int> MemoTable::Find(MemoKind kind,
                                   const HypothesisBits& key) const {
  std::shared_lock lock(mu_);
  const auto& map = maps_[static_cast<int>(kind)];
  auto it = map.find(key);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void MemoTable::Insert(MemoKind kind, const HypothesisBits& key, int value) {
  std::unique_lock lock(mu_);
  maps_[static_cast<int>(kind)].emplace(key, value);
}

std::size_t MemoTable::size(MemoKind kind) const {
  std::shared_lock lock(mu_);
  return maps_[static_cast<int>(kind)].size();
}

void MemoTable::Clear() {
  std::unique_lock lock(mu_);
  for (auto& map : maps_) map.clear();
}

// -- FiniteClass --------------------------------------------------------------

FiniteClass::FiniteClass(std::string name, int num_instances, int num_labels,
                         const std::vector<std::vector<Label>>& rows)
    : name_(std::move(name)),
      n_(num_instances),
      k_(num_labels),
      memo_(std::make_unique<MemoTable>()) {
  if (n_ < 1 || n_ > kMaxInstances) {
    throw std::invalid_argument(
        fmt::format("instance count n={} outside [1, {}]", n_, kMaxInstances));
  }
  if (k_ < 2 || k_ > kMaxLabels) {
    throw std::invalid_argument(
        fmt::format("label count k={} outside [2, {}]", k_, kMaxLabels));
  }
  if (rows.empty()) throw std::invalid_argument("empty hypothesis list");

  struct RowHash {
    std::size_t operator()(const std::vector<Label>& r) const {
      std::size_t h = 1469598103934665603ull;
      for (Label y : r) h = (h ^ static_cast<std::size_t>(y)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<std::vector<Label>, RowHash> seen;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (static_cast<int>(row.size()) != n_) {
      throw std::invalid_argument(fmt::format(
          "row {} has length {}, expected n={}", i, row.size(), n_));
    }
    for (Label y : row) {
      if (y < 0 || y >= k_) {
        throw std::invalid_argument(
            fmt::format("row {} has entry {} outside [0, {})", i, y, k_));
      }
    }
    if (!seen.insert(row).second) continue;
    table_.insert(table_.end(), row.begin(), row.end());
  }
  size_ = static_cast<int>(table_.size() / n_);
  if (size_ > kMaxHypotheses) {
    throw std::invalid_argument(
        fmt::format("{} hypotheses exceed the cap {}", size_, kMaxHypotheses));
  }

  columns_.assign(std::size_t(n_) * k_, HypothesisBits(size_));
  for (int h = 0; h < size_; ++h) {
    for (Instance x = 0; x < n_; ++x) {
      columns_[std::size_t(x) * k_ + At(h, x)].Set(h);
    }
  }
}

ClassPtr MakeClass(std::string name, int num_instances, int num_labels,
                   const std::vector<std::vector<Label>>& rows) {
  return std::make_shared<const FiniteClass>(std::move(name), num_instances,
                                             num_labels, rows);
}

// -- VersionSpace -------------------------------------------------------------

VersionSpace::VersionSpace(ClassPtr klass, HypothesisBits members)
    : klass_(std::move(klass)), members_(std::move(members)) {
  if (!klass_) throw std::invalid_argument("version space without a class");
  if (members_.size() != klass_->size()) {
    throw std::invalid_argument("member mask does not match class size");
  }
}

VersionSpace VersionSpace::All(ClassPtr klass) {
  HypothesisBits bits(klass->size());
  bits.SetAll();
  return VersionSpace(std::move(klass), std::move(bits));
}

VersionSpace VersionSpace::None(ClassPtr klass) {
  HypothesisBits bits(klass->size());
  return VersionSpace(std::move(klass), std::move(bits));
}

VersionSpace VersionSpace::FromIndices(ClassPtr klass,
                                       std::span<const int> rows) {
  HypothesisBits bits(klass->size());
  for (int h : rows) {
    if (h < 0 || h >= klass->size()) {
      throw std::out_of_range(fmt::format("hypothesis index {} out of range", h));
    }
    bits.Set(h);
  }
  return VersionSpace(std::move(klass), std::move(bits));
}

bool VersionSpace::IsSubsetOf(const VersionSpace& other) const {
  return klass_ == other.klass_ && members_.IsSubsetOf(other.members_);
}

namespace {

void CheckIndices(const VersionSpace& v, Instance x, Label y) {
  if (x < 0 || x >= v.num_instances()) {
    throw std::out_of_range(fmt::format("instance {} out of range [0, {})", x,
                                        v.num_instances()));
  }
  if (y < 0 || y >= v.num_labels()) {
    throw std::out_of_range(
        fmt::format("label {} out of range [0, {})", y, v.num_labels()));
  }
}

}  // namespace

VersionSpace RestrictEq(const VersionSpace& v, Instance x, Label y) {
  CheckIndices(v, x, y);
  return VersionSpace(v.class_ptr(), v.members() & v.klass().Column(x, y));
}

VersionSpace RestrictNe(const VersionSpace& v, Instance x, Label y) {
  CheckIndices(v, x, y);
  return VersionSpace(v.class_ptr(),
                      v.members().AndNot(v.klass().Column(x, y)));
}

VersionSpace RestrictIn(const VersionSpace& v, Instance x, LabelSet allowed) {
  CheckIndices(v, x, 0);
  HypothesisBits keep(v.klass().size());
  for (Label y : allowed.ToVector()) {
    CheckIndices(v, x, y);
    keep = keep | v.klass().Column(x, y);
  }
  return VersionSpace(v.class_ptr(), v.members() & keep);
}

// -- LabeledSequence ----------------------------------------------------------

LabeledSequence::LabeledSequence(int num_instances, int num_labels)
    : n_(num_instances), k_(num_labels) {
  if (n_ < 1 || k_ < 2 || k_ > kMaxLabels) {
    throw std::invalid_argument(
        fmt::format("invalid sequence universe n={} k={}", n_, k_));
  }
}

void LabeledSequence::Append(Instance x, LabelSet allowed) {
  if (x < 0 || x >= n_) {
    throw std::out_of_range(fmt::format("instance {} out of range [0, {})", x, n_));
  }
  if (allowed.empty()) throw std::invalid_argument("empty allowed label set");
  if ((allowed.bits() & ~LabelSet::All(k_).bits()) != 0) {
    throw std::out_of_range(
        fmt::format("allowed labels exceed label count {}", k_));
  }
  items_.push_back({x, allowed});
}

namespace {

void CheckUniverse(const VersionSpace& v, const LabeledSequence& z) {
  if (v.num_instances() != z.num_instances() ||
      v.num_labels() != z.num_labels()) {
    throw std::invalid_argument(fmt::format(
        "universe mismatch: class (n={}, k={}) vs sequence (n={}, k={})",
        v.num_instances(), v.num_labels(), z.num_instances(), z.num_labels()));
  }
}

}  // namespace

bool IsRealizable(const VersionSpace& v, const LabeledSequence& z) {
  CheckUniverse(v, z);
  if (z.empty()) return true;
  HypothesisBits alive = v.members();
  for (const auto& item : z.items()) {
    HypothesisBits ok(v.klass().size());
    for (Label y : item.allowed.ToVector()) ok = ok | v.klass().Column(item.x, y);
    alive = alive & ok;
    if (alive.None()) return false;
  }
  return true;
}

int HypothesisError(const FiniteClass& klass, int h, const LabeledSequence& z) {
  int errors = 0;
  for (const auto& item : z.items()) {
    if (!item.allowed.Contains(klass.At(h, item.x))) ++errors;
  }
  return errors;
}

int ClassError(const VersionSpace& v, const LabeledSequence& z) {
  CheckUniverse(v, z);
  if (v.empty()) throw std::invalid_argument("class error of an empty space");
  int best = std::numeric_limits<int>::max();
  for (int h : v.Indices()) {
    best = std::min(best, HypothesisError(v.klass(), h, z));
    if (best == 0) break;
  }
  return best;
}

}  // namespace banditlab
