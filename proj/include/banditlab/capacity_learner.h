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

#ifndef BANDITLAB_CAPACITY_LEARNER_H_
#define BANDITLAB_CAPACITY_LEARNER_H_

#include <memory>
#include <string>
#include <vector>

#include "banditlab/dimensions.h"
#include "banditlab/learners.h"

// Deterministic bandit learner for the realizable case. It keeps a multiset
// of subclasses whose union covers every hypothesis consistent with the
// feedback so far, and predicts the label whose refutation would shrink the
// collection's capacity sum_V k^(2 ldim V) the most. Each mistake multiplies
// the capacity by at most (1 - 1/(2k)), and the capacity never drops below 1
// on a realizable run, which caps the mistakes at 4 k ln(k) ldim(H).

namespace banditlab {

// The split of a collection H at (x, y0):
//   stable   = members V with ldim(V|x=y) < ldim(V) for every y != y0
//   refined  = each stable V replaced in place by its nonempty restrictions
//              V|x=y, y != y0; other members kept as they are
//   potential = C(H) - C(refined)
struct BanditPotentialResult {
  std::vector<int> stable;  // indices into the input collection
  ClassCollection refined;
  BigInt potential;
};

BanditPotentialResult BanditPotential(const ClassCollection& collection,
                                      Instance x, Label y0);

class CapacityLearner : public Learner {
 public:
  explicit CapacityLearner(const VersionSpace& hypotheses);

  std::string name() const override { return "capacity"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;

  // argmax_y potential(y), smallest label on ties.
  Label Predict(Instance x, Rng& rng) override;

  // potential(y) for every label, from per-member dimension profiles rather
  // than by materializing each refined collection.
  std::vector<BigInt> Potentials(Instance x) const;

  const ClassCollection& collection() const { return collection_; }
  const BigInt& capacity() const { return capacity_; }

 protected:
  // A miss replaces the collection by its refinement at the played label; a
  // hit leaves it unchanged. Throws RealizabilityError if the refinement is
  // empty.
  void Update(Instance x, Label prediction, const Feedback& feedback) override;

 private:
  ClassCollection collection_;
  BigInt capacity_;
};

}  // namespace banditlab

#endif  // BANDITLAB_CAPACITY_LEARNER_H_
