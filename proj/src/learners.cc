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

#include "banditlab/learners.h"

#include <fmt/format.h>

#include "banditlab/dimensions.h"

namespace banditlab {

void Learner::Observe(Instance x, Label prediction, const Feedback& feedback) {
  const bool bandit = std::holds_alternative<BanditFeedback>(feedback);
  if (bandit != (feedback_kind() == FeedbackKind::kBandit)) {
    throw std::invalid_argument(fmt::format(
        "learner '{}' expects {} feedback", name(),
        feedback_kind() == FeedbackKind::kBandit ? "bandit" : "full-information"));
  }
  const bool correct =
      bandit ? std::get<BanditFeedback>(feedback).correct
             : std::get<FullInfoFeedback>(feedback).allowed.Contains(prediction);
  if (!correct) ++mistakes_;
  Update(x, prediction, feedback);
  ++rounds_;
}

std::unique_ptr<Learner> Step(const Learner& learner, Instance x,
                              Label prediction, const Feedback& feedback) {
  auto next = learner.Clone();
  next->Observe(x, prediction, feedback);
  return next;
}

Label SoaLabel(const VersionSpace& v, Instance x) {
  Label best_label = 0;
  int best = -2;
  for (Label y = 0; y < v.num_labels(); ++y) {
    const int d = Ldim(RestrictEq(v, x, y));
    if (d > best) {
      best = d;
      best_label = y;
    }
  }
  return best_label;
}

// -- SoaLearner ---------------------------------------------------------------

SoaLearner::SoaLearner(VersionSpace hypotheses) : space_(std::move(hypotheses)) {}

std::unique_ptr<Learner> SoaLearner::Clone() const {
  return std::make_unique<SoaLearner>(*this);
}

Label SoaLearner::Predict(Instance x, Rng&) {
  if (space_.empty()) {
    throw RealizabilityError("SOA version space is empty: run is not realizable");
  }
  return SoaLabel(space_, x);
}

void SoaLearner::Update(Instance x, Label, const Feedback& feedback) {
  space_ = RestrictIn(space_, x, std::get<FullInfoFeedback>(feedback).allowed);
}

// -- SoaBanditLearner ---------------------------------------------------------

SoaBanditLearner::SoaBanditLearner(VersionSpace hypotheses)
    : space_(std::move(hypotheses)) {}

std::unique_ptr<Learner> SoaBanditLearner::Clone() const {
  return std::make_unique<SoaBanditLearner>(*this);
}

Label SoaBanditLearner::Predict(Instance x, Rng&) {
  if (space_.empty()) {
    throw RealizabilityError("version space is empty: run is not realizable");
  }
  return SoaLabel(space_, x);
}

void SoaBanditLearner::Update(Instance x, Label prediction,
                              const Feedback& feedback) {
  space_ = std::get<BanditFeedback>(feedback).correct
               ? RestrictEq(space_, x, prediction)
               : RestrictNe(space_, x, prediction);
}

// -- Baselines ----------------------------------------------------------------

std::unique_ptr<Learner> ConstantLearner::Clone() const {
  return std::make_unique<ConstantLearner>(*this);
}

std::unique_ptr<Learner> CyclingLearner::Clone() const {
  return std::make_unique<CyclingLearner>(*this);
}

std::unique_ptr<Learner> RandomLearner::Clone() const {
  return std::make_unique<RandomLearner>(*this);
}

}  // namespace banditlab
