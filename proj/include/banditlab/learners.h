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

#ifndef BANDITLAB_LEARNERS_H_
#define BANDITLAB_LEARNERS_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "banditlab/hypothesis.h"
#include "banditlab/rng.h"

namespace banditlab {

// -- Feedback -----------------------------------------------------------------

struct FullInfoFeedback {
  LabelSet allowed;
};

// Only the indicator 1(prediction in Y_t).
struct BanditFeedback {
  bool correct;
};

using Feedback = std::variant<FullInfoFeedback, BanditFeedback>;

enum class FeedbackKind { kFullInfo, kBandit };

// Raised when a learner's state shows the run was not realizable.
class RealizabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -- Learner interface --------------------------------------------------------
//
// Concrete learners are copyable value types; Clone() gives an independent
// copy, so Step() below leaves the original untouched.

class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::string name() const = 0;
  virtual FeedbackKind feedback_kind() const = 0;
  // Deterministic learners never draw from the rng passed to Predict.
  virtual bool deterministic() const = 0;
  virtual std::unique_ptr<Learner> Clone() const = 0;

  virtual Label Predict(Instance x, Rng& rng) = 0;

  // Counts the mistake (if any) and updates the state. Throws
  // std::invalid_argument when the feedback kind does not match.
  void Observe(Instance x, Label prediction, const Feedback& feedback);

  int mistakes() const { return mistakes_; }
  int rounds() const { return rounds_; }

 protected:
  virtual void Update(Instance x, Label prediction, const Feedback& feedback) = 0;

 private:
  int mistakes_ = 0;
  int rounds_ = 0;
};

// Returns a copy of `learner` advanced by one observation.
std::unique_ptr<Learner> Step(const Learner& learner, Instance x,
                              Label prediction, const Feedback& feedback);

// argmax_y ldim(v|x=y), smallest label on ties.
Label SoaLabel(const VersionSpace& v, Instance x);

// -- Standard optimal algorithm -----------------------------------------------

// Full-information SOA. Keeps the version space of hypotheses consistent with
// every revealed label set.
class SoaLearner : public Learner {
 public:
  explicit SoaLearner(VersionSpace hypotheses);

  std::string name() const override { return "soa"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kFullInfo; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;

  // Throws RealizabilityError when the version space is empty.
  Label Predict(Instance x, Rng& rng) override;

  const VersionSpace& version_space() const { return space_; }

 protected:
  void Update(Instance x, Label prediction, const Feedback& feedback) override;

 private:
  VersionSpace space_;
};

// a miss keeps h(x) != y_hat. Only sound on single-label sequences.
// a miss keeps h(x) != y_hat.
class SoaBanditLearner : public Learner {
 public:
  explicit SoaBanditLearner(VersionSpace hypotheses);

  std::string name() const override { return "soa-bandit"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance x, Rng& rng) override;

  const VersionSpace& version_space() const { return space_; }

 protected:
  void Update(Instance x, Label prediction, const Feedback& feedback) override;

 private:
  VersionSpace space_;
};

// -- Baselines ----------------------------------------------------------------

class ConstantLearner : public Learner {
 public:
  explicit ConstantLearner(Label label) : label_(label) {}
  std::string name() const override { return "constant"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance, Rng&) override { return label_; }

 protected:
  void Update(Instance, Label, const Feedback&) override {}

 private:
  Label label_;
};

// Predicts (round index) mod k.
class CyclingLearner : public Learner {
 public:
  explicit CyclingLearner(int num_labels) : k_(num_labels) {}
  std::string name() const override { return "cycling"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance, Rng&) override { return rounds() % k_; }

 protected:
  void Update(Instance, Label, const Feedback&) override {}

 private:
  int k_;
};

class RandomLearner : public Learner {
 public:
  explicit RandomLearner(int num_labels) : k_(num_labels) {}
  std::string name() const override { return "random"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return false; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance, Rng& rng) override { return UniformInt(rng, 0, k_ - 1); }

 protected:
  void Update(Instance, Label, const Feedback&) override {}

 private:
  int k_;
};

}  // namespace banditlab

#endif  // BANDITLAB_LEARNERS_H_
