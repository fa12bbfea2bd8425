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

#ifndef BANDITLAB_DIMENSIONS_H_
#define BANDITLAB_DIMENSIONS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "banditlab/hypothesis.h"

namespace banditlab {

// Littlestone dimension of v; -1 for the empty space.
//
// Computed by the recursion
//   ldim(v) = max over x and labels y1 != y2 with both restrictions nonempty
//             of 1 + min(ldim(v|x=y1), ldim(v|x=y2)),
// and 0 when no instance splits v. Memoized in the class's MemoTable.
int Ldim(const VersionSpace& v);

// Bandit Littlestone dimension of v; -1 for the empty space.
//
//   bldim(v) = max(0, max over x of 1 + min over y of bldim(v|x!=y)).
int Bldim(const VersionSpace& v);

// -- Shattering-tree oracle ---------------------------------------------------
//
// Exhaustive search for complete shattered trees, straight from the tree
// definitions. Realizability of a path is checked by scanning hypothesis rows,
// so this shares nothing with Ldim/Bldim beyond the class table.

enum class ShatterMode {
  kLittlestone,  // binary nodes, two distinct edge labels
  kBandit,       // k-ary nodes, one edge per label; paths must avoid edges
};

inline constexpr int kOracleMaxDepth = 8;

struct ShatterTree {
  Instance x = -1;  // -1 at leaves
  std::vector<std::pair<Label, ShatterTree>> children;

  bool is_leaf() const { return x < 0; }
  int Depth() const;
};

// A complete tree of `depth` shattered by v, or nullopt. Throws
// std::invalid_argument for depth outside [0, kOracleMaxDepth].
std::optional<ShatterTree> ShatterWitness(const VersionSpace& v, int depth,
                                          ShatterMode mode);

bool Shatters(const VersionSpace& v, int depth, ShatterMode mode);

// Largest depth the oracle certifies (-1 for the empty space). Throws if the
// answer would need a depth above kOracleMaxDepth.
int OracleDimension(const VersionSpace& v, ShatterMode mode);

// Indented text rendering, one node per line.
std::string FormatShatterTree(const ShatterTree& tree);

// -- Capacity -----------------------------------------------------------------

using BigInt = boost::multiprecision::cpp_int;

// An ordered multiset of nonempty version spaces over one class.
class ClassCollection {
 public:
  explicit ClassCollection(ClassPtr klass);
  ClassCollection(ClassPtr klass, std::vector<VersionSpace> spaces);

  const ClassPtr& class_ptr() const { return klass_; }
  int num_labels() const { return klass_->num_labels(); }
  const std::vector<VersionSpace>& spaces() const { return spaces_; }
  int size() const { return static_cast<int>(spaces_.size()); }
  bool empty() const { return spaces_.empty(); }
  const VersionSpace& operator[](int i) const { return spaces_[i]; }

  // Throws std::invalid_argument on an empty space or a foreign class.
  void Add(VersionSpace v);

 private:
  ClassPtr klass_;
  std::vector<VersionSpace> spaces_;
};

// k^(2 * ldim); ldim = -1 gives 0 (an empty space contributes nothing).
BigInt CapacityTerm(int num_labels, int ldim);

// Sum over members V of k^(2 ldim(V)). Throws if a member is empty.
BigInt Capacity(const ClassCollection& collection);

}  // namespace banditlab

#endif  // BANDITLAB_DIMENSIONS_H_
