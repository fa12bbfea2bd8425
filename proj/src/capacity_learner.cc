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

#include "banditlab/capacity_learner.h"

#include <utility>

namespace banditlab {
namespace {

bool IsStable(const VersionSpace& v, Instance x, Label y0) {
  const int dim = Ldim(v);
  for (Label y = 0; y < v.num_labels(); ++y) {
    if (y == y0) continue;
    if (Ldim(RestrictEq(v, x, y)) >= dim) return false;
  }
  return true;
}

}  // namespace

BanditPotentialResult BanditPotential(const ClassCollection& collection,
                                      Instance x, Label y0) {
  BanditPotentialResult result{{}, ClassCollection(collection.class_ptr()), 0};
  for (int i = 0; i < collection.size(); ++i) {
    const VersionSpace& v = collection[i];
    if (!IsStable(v, x, y0)) {
      result.refined.Add(v);
      continue;
    }
    result.stable.push_back(i);
    for (Label y = 0; y < v.num_labels(); ++y) {
      if (y == y0) continue;
      VersionSpace part = RestrictEq(v, x, y);
      if (!part.empty()) result.refined.Add(std::move(part));
    }
  }
  result.potential = Capacity(collection) - Capacity(result.refined);
  return result;
}

CapacityLearner::CapacityLearner(const VersionSpace& hypotheses)
    : collection_(hypotheses.class_ptr()) {
  collection_.Add(hypotheses);
  capacity_ = Capacity(collection_);
}

std::unique_ptr<Learner> CapacityLearner::Clone() const {
  return std::make_unique<CapacityLearner>(*this);
}

std::vector<BigInt> CapacityLearner::Potentials(Instance x) const {
  const int k = collection_.num_labels();
  std::vector<BigInt> potential(k, 0);
  std::vector<int> child_dim(k);
  for (const VersionSpace& v : collection_.spaces()) {
    const int dim = Ldim(v);
    int at_top = 0;  // labels whose restriction keeps the full dimension
    Label top_label = -1;
    BigInt children = 0;
    for (Label y = 0; y < k; ++y) {
      child_dim[y] = Ldim(RestrictEq(v, x, y));
      children += CapacityTerm(k, child_dim[y]);
      if (child_dim[y] >= dim) {
        ++at_top;
        top_label = y;
      }
    }
    const BigInt own = CapacityTerm(k, dim);
    // v is stable for y0 iff every label other than y0 drops the dimension.
    for (Label y0 = 0; y0 < k; ++y0) {
      if (at_top > 1 || (at_top == 1 && top_label != y0)) continue;
      potential[y0] += own - (children - CapacityTerm(k, child_dim[y0]));
    }
  }
  return potential;
}

Label CapacityLearner::Predict(Instance x, Rng&) {
  const std::vector<BigInt> potential = Potentials(x);
  Label best = 0;
  for (Label y = 1; y < static_cast<int>(potential.size()); ++y) {
    if (potential[y] > potential[best]) best = y;
  }
  return best;
}

void CapacityLearner::Update(Instance x, Label prediction,
                             const Feedback& feedback) {
  if (std::get<BanditFeedback>(feedback).correct) return;
  BanditPotentialResult split = BanditPotential(collection_, x, prediction);
  if (split.refined.empty()) {
    throw RealizabilityError(
        "capacity reached 0: no hypothesis is consistent with the feedback");
  }
  collection_ = std::move(split.refined);
  capacity_ = Capacity(collection_);
}

}  // namespace banditlab
