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

#ifndef BANDITLAB_EXPERTS_H_
#define BANDITLAB_EXPERTS_H_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "banditlab/dimensions.h"
#include "banditlab/learners.h"

namespace banditlab {

inline constexpr std::int64_t kDefaultExpertCap = 1'000'000;

// sum_{j <= ldim} C(T, j) k^j, exactly.
BigInt CountExperts(int horizon, int num_labels, int ldim);

// (T k)^ldim.
BigInt ExpertCountCeiling(int horizon, int num_labels, int ldim);

// One (round, label) deviation of an expert; rounds are 0-based.
struct Deviation {
  int round;
  Label label;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

// All experts E_{A,phi} for |A| <= ldim(H) over a horizon T. Expert i follows
// SOA on its own simulated version space, except at the rounds of A where it
// advises phi(t); either way the simulated space is restricted to the advised
// label.
//
// Experts are stored flat. Simulated spaces are interned, and SOA labels and
// transitions are cached per (space, instance), since most experts share
// their history with many others.
class ExpertsPool {
 public:
  // Throws std::length_error when the count exceeds `cap`.
  ExpertsPool(const VersionSpace& hypotheses, int horizon,
              std::int64_t cap = kDefaultExpertCap);

  int size() const { return num_experts_; }
  int horizon() const { return horizon_; }
  int ldim() const { return ldim_; }
  int round() const { return round_; }
  int num_labels() const { return k_; }

  std::vector<Deviation> deviations(int expert) const;

  // Advice of every expert at the current round for instance x.
  void Advise(Instance x, std::vector<std::int32_t>* advice);
  // Moves every expert to the next round, given the advice it gave on x.
  void Advance(Instance x, const std::vector<std::int32_t>& advice);

  // Simulated version space of one expert.
  const VersionSpace& state(int expert) const { return spaces_[state_[expert]]; }

  // Puts every expert back at round 0.
  void Reset();

 private:
  int Intern(VersionSpace v);
  Label SoaLabelOf(int id, Instance x);
  int Transition(int id, Instance x, Label y);

  ClassPtr klass_;
  int n_;
  int k_;
  int horizon_;
  int ldim_;
  int num_experts_ = 0;
  int round_ = 0;

  // Deviations, ldim_ slots per expert, sorted by round; count in dev_count_.
  std::vector<std::int32_t> dev_round_;
  std::vector<std::int32_t> dev_label_;
  std::vector<std::int32_t> dev_count_;
  std::vector<std::int32_t> cursor_;
  std::vector<std::int32_t> state_;

  std::vector<VersionSpace> spaces_;
  std::unordered_map<HypothesisBits, int, HypothesisBitsHash> ids_;
  std::vector<std::int32_t> soa_cache_;    // id * n + x, -1 unknown
  std::vector<std::int32_t> trans_cache_;  // (id * n + x) * k + y, -1 unknown
};

// Each expert's loss sum_t 1(advice_t not in Y_t) on a fixed sequence.
std::vector<int> ExpertLosses(const VersionSpace& hypotheses,
                              const LabeledSequence& z,
                              std::int64_t cap = kDefaultExpertCap);

// -- Exp4 ---------------------------------------------------------------------

// gamma = min{1, sqrt(k ln N / ((e - 1) T))}.
double Exp4Gamma(int num_labels, std::int64_t num_experts, int horizon);

// e * sqrt(k T ln N).
double Exp4RegretBound(int num_labels, std::int64_t num_experts, int horizon);

// Exponential weights over experts with importance-weighted bandit rewards.
class Exp4 {
 public:
  Exp4(int num_labels, int num_experts, double gamma);

  int num_labels() const { return k_; }
  double gamma() const { return gamma_; }
  const std::vector<double>& weights() const { return weights_; }

  // p(y) = (1 - gamma) W_y / W + gamma / k, W_y the weight advising y.
  std::vector<double> Distribution(const std::vector<std::int32_t>& advice) const;

  // Reward r for the played label, drawn with probability p_played:
  // w_i *= exp(gamma r / (k p_played)) for experts that advised it.
  void Update(const std::vector<std::int32_t>& advice, Label played,
              double p_played, bool reward);

 private:
  int k_;
  double gamma_;
  std::vector<double> weights_;
};

// Samples a label from a distribution over [0, k).
Label SampleLabel(const std::vector<double>& p, Rng& rng);

// Exp4 over the E_{A,phi} pool: the agnostic bandit learner.
class Exp4Learner : public Learner {
 public:
  Exp4Learner(const VersionSpace& hypotheses, int horizon,
              std::int64_t cap = kDefaultExpertCap);

  std::string name() const override { return "exp4"; }
  FeedbackKind feedback_kind() const override { return FeedbackKind::kBandit; }
  bool deterministic() const override { return false; }
  std::unique_ptr<Learner> Clone() const override;
  Label Predict(Instance x, Rng& rng) override;

  const ExpertsPool& pool() const { return *pool_; }
  const Exp4& exp4() const { return exp4_; }

 protected:
  void Update(Instance x, Label prediction, const Feedback& feedback) override;

 private:
  std::shared_ptr<ExpertsPool> pool_;  // copied on Clone
  Exp4 exp4_;
  std::vector<std::int32_t> advice_;
  std::vector<double> p_;
  Instance advised_x_ = -1;
};

}  // namespace banditlab

#endif  // BANDITLAB_EXPERTS_H_
