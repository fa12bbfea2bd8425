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

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "banditlab/dimensions.h"

namespace banditlab {
namespace {

// A root-to-node path is summarized by one label mask per instance: the
// labels the path demands (L mode) or forbids (BL mode) at that instance.
// Shattering below a node depends only on this summary and the remaining
// depth, so the search memoizes on (summary, depth).
using PathKey = std::vector<std::uint32_t>;

class OracleSearch {
 public:
  OracleSearch(const VersionSpace& v, ShatterMode mode)
      : n_(v.num_instances()), k_(v.num_labels()), mode_(mode) {
    for (int h : v.Indices()) {
      auto row = v.klass().Row(h);
      rows_.emplace_back(row.begin(), row.end());
    }
  }

  bool Search(const PathKey& key, int depth) {
    if (!Realizable(key)) return false;
    if (depth == 0) return true;
    auto memo_key = std::make_pair(key, depth);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    const bool result = mode_ == ShatterMode::kLittlestone
                            ? SearchBinary(key, depth, nullptr)
                            : SearchKary(key, depth, nullptr);
    memo_.emplace(std::move(memo_key), result);
    return result;
  }

  // Rebuilds a witness for a key already known to be shattered.
  ShatterTree Build(const PathKey& key, int depth) {
    ShatterTree tree;
    if (depth == 0) return tree;
    if (mode_ == ShatterMode::kLittlestone) {
      SearchBinary(key, depth, &tree);
    } else {
      SearchKary(key, depth, &tree);
    }
    return tree;
  }

  int n() const { return n_; }

 private:
  // Some remaining row satisfies every constraint on the path.
  bool Realizable(const PathKey& key) const {
    for (const auto& row : rows_) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) {
        const std::uint32_t mask = key[x];
        if (mask == 0) continue;
        const bool hit = (mask >> row[x]) & 1u;
        // L: the path demands every label in the mask, so two demanded labels
        // can never both hold. BL: the row must avoid every forbidden label.
        ok = mode_ == ShatterMode::kLittlestone
                 ? (hit && std::popcount(mask) == 1)
                 : !hit;
      }
      if (ok) return true;
    }
    return false;
  }

  PathKey With(const PathKey& key, Instance x, Label y) const {
    PathKey next = key;
    next[x] |= 1u << y;
    return next;
  }

  bool SearchBinary(const PathKey& key, int depth, ShatterTree* out) {
    for (Instance x = 0; x < n_; ++x) {
      for (Label y1 = 0; y1 < k_; ++y1) {
        for (Label y2 = y1 + 1; y2 < k_; ++y2) {
          PathKey left = With(key, x, y1);
          PathKey right = With(key, x, y2);
          if (Search(left, depth - 1) && Search(right, depth - 1)) {
            if (out != nullptr) {
              out->x = x;
              out->children.emplace_back(y1, Build(left, depth - 1));
              out->children.emplace_back(y2, Build(right, depth - 1));
            }
            return true;
          }
        }
      }
    }
    return false;
  }

  bool SearchKary(const PathKey& key, int depth, ShatterTree* out) {
    for (Instance x = 0; x < n_; ++x) {
      bool all = true;
      for (Label y = 0; y < k_ && all; ++y) {
        all = Search(With(key, x, y), depth - 1);
      }
      if (all) {
        if (out != nullptr) {
          out->x = x;
          for (Label y = 0; y < k_; ++y) {
            out->children.emplace_back(y, Build(With(key, x, y), depth - 1));
          }
        }
        return true;
      }
    }
    return false;
  }

  int n_;
  int k_;
  ShatterMode mode_;
  std::vector<std::vector<Label>> rows_;
  std::map<std::pair<PathKey, int>, bool> memo_;
};

void CheckDepth(int depth) {
  if (depth < 0 || depth > kOracleMaxDepth) {
    throw std::invalid_argument(fmt::format(
        "oracle depth {} outside [0, {}]", depth, kOracleMaxDepth));
  }
}

void Render(const ShatterTree& tree, int indent, std::string* out) {
  const std::string pad(2 * indent, ' ');
  if (tree.is_leaf()) return;
  *out += fmt::format("{}x={}\n", pad, tree.x);
  for (const auto& [label, child] : tree.children) {
    *out += fmt::format("{}  y={}{}\n", pad, label, child.is_leaf() ? " ." : "");
    Render(child, indent + 2, out);
  }
}

}  // namespace

int ShatterTree::Depth() const {
  if (is_leaf()) return 0;
  int d = 0;
  for (const auto& [label, child] : children) d = std::max(d, child.Depth());
  return d + 1;
}

std::optional<ShatterTree> ShatterWitness(const VersionSpace& v, int depth,
                                          ShatterMode mode) {
  CheckDepth(depth);
  OracleSearch search(v, mode);
  const PathKey root(v.num_instances(), 0);
  if (!search.Search(root, depth)) return std::nullopt;
  return search.Build(root, depth);
}

bool Shatters(const VersionSpace& v, int depth, ShatterMode mode) {
  CheckDepth(depth);
  OracleSearch search(v, mode);
  return search.Search(PathKey(v.num_instances(), 0), depth);
}

int OracleDimension(const VersionSpace& v, ShatterMode mode) {
  OracleSearch search(v, mode);
  const PathKey root(v.num_instances(), 0);
  int d = -1;
  while (search.Search(root, d + 1)) {
    ++d;
    if (d + 1 > kOracleMaxDepth) {
      throw std::invalid_argument(fmt::format(
          "dimension reaches the oracle depth cap {}", kOracleMaxDepth));
    }
  }
  return d;
}

std::string FormatShatterTree(const ShatterTree& tree) {
  std::string out;
  if (tree.is_leaf()) return "(leaf)\n";
  Render(tree, 0, &out);
  return out;
}

}  // namespace banditlab
