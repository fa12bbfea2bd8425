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

#ifndef BANDITLAB_HYPOTHESIS_H_
#define BANDITLAB_HYPOTHESIS_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

// Finite hypothesis classes over a finite instance universe [0, n) and label
// set [0, k), stored as explicit tables. Subsets of a class (version spaces)
// are canonical bitmasks over the class's row indices, so they can be hashed
// and memoized.

namespace banditlab {

using Label = int;
using Instance = int;

inline constexpr int kMaxLabels = 32;
inline constexpr int kMaxInstances = 4096;
inline constexpr int kMaxHypotheses = 1 << 20;

// A set of labels in [0, kMaxLabels), stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  static constexpr LabelSet FromBits(std::uint32_t bits) {
    LabelSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr LabelSet Single(Label y) { return FromBits(1u << y); }
  static constexpr LabelSet All(int k) {
    return FromBits(k >= 32 ? ~0u : ((1u << k) - 1u));
  }

  constexpr bool Contains(Label y) const { return (bits_ >> y) & 1u; }
  constexpr void Insert(Label y) { bits_ |= 1u << y; }
  constexpr void Erase(Label y) { bits_ &= ~(1u << y); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  // Smallest member; undefined on an empty set.
  constexpr Label Min() const { return std::countr_zero(bits_); }
  std::vector<Label> ToVector() const;

  friend constexpr bool operator==(LabelSet a, LabelSet b) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Fixed-width bitset over hypothesis row indices.
class HypothesisBits {
 public:
  using Words = boost::container::small_vector<std::uint64_t, 2>;

  HypothesisBits() = default;
  explicit HypothesisBits(int size);

  int size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  std::span<const std::uint64_t> words() const {
    return {words_.data(), words_.size()};
  }
  std::span<std::uint64_t> mutable_words() {
    return {words_.data(), words_.size()};
  }

  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void SetAll();

  int Count() const;
  bool Any() const;
  bool None() const { return !Any(); }
  // Index of the lowest set bit, or -1.
  int First() const;
  std::vector<int> Indices() const;
  bool IsSubsetOf(const HypothesisBits& other) const;

  HypothesisBits operator&(const HypothesisBits& other) const;
  HypothesisBits operator|(const HypothesisBits& other) const;
  // this & ~other
  HypothesisBits AndNot(const HypothesisBits& other) const;

  std::size_t Hash() const;

  friend bool operator==(const HypothesisBits& a, const HypothesisBits& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  int size_ = 0;
  Words words_;
};

struct HypothesisBitsHash {
  std::size_t operator()(const HypothesisBits& b) const { return b.Hash(); }
};

// Which memoized quantity a cache entry holds.
enum class MemoKind { kLdim = 0, kBldim = 1 };

// Thread-safe cache from version-space bitmask to an integer. Concurrent
// inserts of the same key must carry the same value.
class MemoTable {
 public:
  std::optional<int> Find(MemoKind kind, const HypothesisBits& key) const;
  void Insert(MemoKind kind, const HypothesisBits& key, int value);
  std::size_t size(MemoKind kind) const;
  void Clear();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<HypothesisBits, int, HypothesisBitsHash> maps_[2];
};

// An explicit table of hypotheses h: [0, n) -> [0, k). Rows are deduplicated
// at construction, keeping the first occurrence of each.
class FiniteClass {
 public:
  FiniteClass(std::string name, int num_instances, int num_labels,
              const std::vector<std::vector<Label>>& rows);

  FiniteClass(const FiniteClass&) = delete;
  FiniteClass& operator=(const FiniteClass&) = delete;

  const std::string& name() const { return name_; }
  int num_instances() const { return n_; }
  int num_labels() const { return k_; }
  int size() const { return size_; }

  Label At(int h, Instance x) const { return table_[std::size_t(h) * n_ + x]; }
  std::span<const Label> Row(int h) const {
    return {table_.data() + std::size_t(h) * n_, std::size_t(n_)};
  }
  // {h : h(x) = y}
  const HypothesisBits& Column(Instance x, Label y) const {
    return columns_[std::size_t(x) * k_ + y];
  }

  MemoTable& memo() const { return *memo_; }

  friend bool operator==(const FiniteClass& a, const FiniteClass& b) {
    return a.name_ == b.name_ && a.n_ == b.n_ && a.k_ == b.k_ &&
           a.table_ == b.table_;
  }

 private:
  std::string name_;
  int n_;
  int k_;
  int size_ = 0;
  std::vector<Label> table_;
  std::vector<HypothesisBits> columns_;
  std::unique_ptr<MemoTable> memo_;
};

using ClassPtr = std::shared_ptr<const FiniteClass>;

ClassPtr MakeClass(std::string name, int num_instances, int num_labels,
                   const std::vector<std::vector<Label>>& rows);

// A subset of a FiniteClass's hypotheses. Value type; may be empty.
class VersionSpace {
 public:
  static VersionSpace All(ClassPtr klass);
  static VersionSpace None(ClassPtr klass);
  static VersionSpace FromIndices(ClassPtr klass, std::span<const int> rows);

  VersionSpace(ClassPtr klass, HypothesisBits members);

  const FiniteClass& klass() const { return *klass_; }
  const ClassPtr& class_ptr() const { return klass_; }
  const HypothesisBits& members() const { return members_; }
  int num_instances() const { return klass_->num_instances(); }
  int num_labels() const { return klass_->num_labels(); }

  bool empty() const { return members_.None(); }
  int size() const { return members_.Count(); }
  bool Contains(int h) const { return members_.Test(h); }
  int First() const { return members_.First(); }
  std::vector<int> Indices() const { return members_.Indices(); }
  bool IsSubsetOf(const VersionSpace& other) const;

  friend bool operator==(const VersionSpace& a, const VersionSpace& b) {
    return a.klass_ == b.klass_ && a.members_ == b.members_;
  }

 private:
  ClassPtr klass_;
  HypothesisBits members_;
};

// {h in v : h(x) = y}
VersionSpace RestrictEq(const VersionSpace& v, Instance x, Label y);
// {h in v : h(x) != y}
VersionSpace RestrictNe(const VersionSpace& v, Instance x, Label y);
// {h in v : h(x) in allowed}
VersionSpace RestrictIn(const VersionSpace& v, Instance x, LabelSet allowed);

struct MultiLabelExample {
  Instance x;
  LabelSet allowed;

  friend bool operator==(const MultiLabelExample&,
                         const MultiLabelExample&) = default;
};

// A sequence of (x_t, Y_t) over a fixed (n, k) universe.
class LabeledSequence {
 public:
  LabeledSequence(int num_instances, int num_labels);

  int num_instances() const { return n_; }
  int num_labels() const { return k_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const std::vector<MultiLabelExample>& items() const { return items_; }
  const MultiLabelExample& operator[](int t) const { return items_[t]; }

  void Append(Instance x, LabelSet allowed);
  void Append(Instance x, Label y) { Append(x, LabelSet::Single(y)); }

  friend bool operator==(const LabeledSequence&,
                         const LabeledSequence&) = default;

 private:
  int n_;
  int k_;
  std::vector<MultiLabelExample> items_;
};

// True iff some h in v has h(x_t) in Y_t for every t. The empty space
// realizes only the empty sequence.
bool IsRealizable(const VersionSpace& v, const LabeledSequence& z);

// min over h in v of |{t : h(x_t) not in Y_t}|. Throws on empty v.
int ClassError(const VersionSpace& v, const LabeledSequence& z);

// Number of rounds on which hypothesis row h misses.
int HypothesisError(const FiniteClass& klass, int h, const LabeledSequence& z);

}  // namespace banditlab

#endif  // BANDITLAB_HYPOTHESIS_H_
