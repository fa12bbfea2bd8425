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

#ifndef BANDITLAB_ADVERSARIES_H_
#define BANDITLAB_ADVERSARIES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "banditlab/hypothesis.h"
#include "banditlab/rng.h"

namespace banditlab {

// What the adversary reveals after a prediction. `allowed` is the round's
// label set when it is already fixed; the minimax adversary leaves it open
// while it is still forcing mistakes.
struct RoundOutcome {
  bool correct = false;
  std::optional<LabelSet> allowed;
};

// End-of-game certificate: the sequence with every label set fixed, plus the
// labeling the adversary committed to, if any.
struct Justification {
  LabeledSequence sequence;
  std::vector<Label> labeling;  // empty when there is none
};

class Adversary {
 public:
  virtual ~Adversary() = default;

  virtual std::string name() const = 0;
  // Realizable adversaries always end with a sequence their target class
  // realizes.
  virtual bool realizable() const = 0;
  virtual int num_instances() const = 0;
  virtual int num_labels() const = 0;
  // Number of rounds this adversary plays when asked for `horizon`.
  virtual int Length(int horizon) const { return horizon; }
  virtual std::unique_ptr<Adversary> Clone() const = 0;

  virtual Instance NextInstance() = 0;
  virtual RoundOutcome Respond(Label prediction) = 0;
  virtual Justification Justify() const = 0;
};

// h* uniform on v, instances i.i.d. uniform, Y_t = {h*(x_t)} plus
// set_size - 1 distinct decoys. Returns the sequence and h*'s row index.
std::pair<LabeledSequence, int> SampleRealizableSequence(const VersionSpace& v,
                                                         int horizon, Rng& rng,
                                                         int set_size);

// Replays a sampled realizable sequence.
class RandomRealizableAdversary : public Adversary {
 public:
  RandomRealizableAdversary(const VersionSpace& v, int horizon, int set_size,
                            std::uint64_t seed);

  std::string name() const override;
  bool realizable() const override { return true; }
  int num_instances() const override { return sequence_.num_instances(); }
  int num_labels() const override { return sequence_.num_labels(); }
  int Length(int) const override { return sequence_.size(); }
  std::unique_ptr<Adversary> Clone() const override;
  Instance NextInstance() override;
  RoundOutcome Respond(Label prediction) override;
  Justification Justify() const override;

  int target() const { return target_; }

 private:
  LabeledSequence sequence_;
  std::vector<Label> labeling_;
  int set_size_;
  int target_;
  int t_ = 0;
};

// Single-label sequence from a random h* whose label is replaced by a uniform
// other label with probability `rate`. Not realizable in general.
class NoisyAdversary : public Adversary {
 public:
  NoisyAdversary(const VersionSpace& v, int horizon, double rate,
                 std::uint64_t seed);

  std::string name() const override;
  bool realizable() const override { return false; }
  int num_instances() const override { return sequence_.num_instances(); }
  int num_labels() const override { return sequence_.num_labels(); }
  int Length(int) const override { return sequence_.size(); }
  std::unique_ptr<Adversary> Clone() const override;
  Instance NextInstance() override;
  RoundOutcome Respond(Label prediction) override;
  Justification Justify() const override;

 private:
  LabeledSequence sequence_;
  std::vector<Label> labeling_;
  double rate_;
  int t_ = 0;
};

// Over X = [delta] x [k], instance (j, m) is j*k + m. For each j a random
// bijection y_{j,.} is drawn up front; instance (j, m) is shown k-1-m times
// for m = 0..k-2. Predictions never influence the sequence.
class PermutationAdversary : public Adversary {
 public:
  PermutationAdversary(int delta, int num_labels, std::uint64_t seed);

  std::string name() const override;
  bool realizable() const override { return true; }
  int num_instances() const override { return delta_ * k_; }
  int num_labels() const override { return k_; }
  int Length(int) const override { return static_cast<int>(order_.size()); }
  std::unique_ptr<Adversary> Clone() const override;
  Instance NextInstance() override;
  RoundOutcome Respond(Label prediction) override;
  Justification Justify() const override;

  // delta k (k - 1) / 2
  static int SequenceLength(int delta, int num_labels);
  const std::vector<Instance>& order() const { return order_; }
  const std::vector<Label>& labeling() const { return labeling_; }

 private:
  int delta_;
  int k_;
  std::vector<Label> labeling_;  // f(j, m) at index j*k + m
  std::vector<Instance> order_;
  int t_ = 0;
};

// Adaptive adversary against deterministic bandit learners. While the
// survivor space S has bldim(S) > 0 it shows the smallest x with
// bldim(S) = 1 + min_y bldim(S|x!=y), calls every prediction wrong and keeps
// S|x!=prediction. Afterwards it commits to the first member of S and
// answers honestly, cycling through the instances.
class MinimaxAdversary : public Adversary {
 public:
  explicit MinimaxAdversary(const VersionSpace& v);

  std::string name() const override { return "minimax"; }
  bool realizable() const override { return true; }
  int num_instances() const override { return survivors_.num_instances(); }
  int num_labels() const override { return survivors_.num_labels(); }
  std::unique_ptr<Adversary> Clone() const override;
  Instance NextInstance() override;
  RoundOutcome Respond(Label prediction) override;
  Justification Justify() const override;

  const VersionSpace& survivors() const { return survivors_; }
  int forced_rounds() const { return forced_; }
  bool forcing() const { return !committed_.has_value(); }
  // bldim(S) after each round played so far.
  const std::vector<int>& bldim_trace() const { return trace_; }

 private:
  void MaybeCommit();

  VersionSpace survivors_;
  std::optional<int> committed_;
  std::vector<Instance> shown_;
  Instance current_ = -1;
  int forced_ = 0;
  int honest_ = 0;
  std::vector<int> trace_;
};

// Draws h* uniformly from v and shows every instance k-1 times in order,
// answering honestly. Against the full class each instance is an
// independent guessing game.
class GuessingAdversary : public Adversary {
 public:
  GuessingAdversary(const VersionSpace& v, std::uint64_t seed);

  std::string name() const override { return "guessing"; }
  bool realizable() const override { return true; }
  int num_instances() const override { return static_cast<int>(labeling_.size()); }
  int num_labels() const override { return k_; }
  int Length(int) const override {
    return num_instances() * (k_ - 1);
  }
  std::unique_ptr<Adversary> Clone() const override;
  Instance NextInstance() override;
  RoundOutcome Respond(Label prediction) override;
  Justification Justify() const override;

 private:
  int k_;
  std::vector<Label> labeling_;
  int t_ = 0;
};

}  // namespace banditlab

#endif  // BANDITLAB_ADVERSARIES_H_
