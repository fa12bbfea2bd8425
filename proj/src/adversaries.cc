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

#include "banditlab/adversaries.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "banditlab/dimensions.h"

namespace banditlab {
namespace {

void CheckPrediction(Label prediction, int k) {
  if (prediction < 0 || prediction >= k) {
    throw std::out_of_range(fmt::format("prediction {} outside [0, {})", prediction, k));
  }
}

std::vector<Label> RowOf(const VersionSpace& v, int h) {
  auto row = v.klass().Row(h);
  return {row.begin(), row.end()};
}

}  // namespace

std::pair<LabeledSequence, int> SampleRealizableSequence(const VersionSpace& v,
                                                         int horizon, Rng& rng,
                                                         int set_size) {
  const int n = v.num_instances();
  const int k = v.num_labels();
  if (set_size < 1 || set_size > k) {
    throw std::invalid_argument(
        fmt::format("label set size {} outside [1, {}]", set_size, k));
  }
  if (v.empty()) throw std::invalid_argument("cannot sample from an empty space");
  if (horizon < 0) throw std::invalid_argument("negative horizon");
  const std::vector<int> members = v.Indices();
  const int target = members[UniformInt(rng, 0, static_cast<int>(members.size()) - 1)];
  LabeledSequence z(n, k);
  std::vector<Label> decoys(k - 1);
  for (int t = 0; t < horizon; ++t) {
    const Instance x = UniformInt(rng, 0, n - 1);
    const Label truth = v.klass().At(target, x);
    LabelSet allowed = LabelSet::Single(truth);
    if (set_size > 1) {
      decoys.clear();
      for (Label y = 0; y < k; ++y) {
        if (y != truth) decoys.push_back(y);
      }
      // Partial Fisher-Yates: the first set_size - 1 slots are a uniform
      // subset.
      for (int i = 0; i < set_size - 1; ++i) {
        const int j = UniformInt(rng, i, k - 2);
        std::swap(decoys[i], decoys[j]);
        allowed.Insert(decoys[i]);
      }
    }
    z.Append(x, allowed);
  }
  return {std::move(z), target};
}

// -- RandomRealizableAdversary -------------------------------------------------

RandomRealizableAdversary::RandomRealizableAdversary(const VersionSpace& v,
                                                     int horizon, int set_size,
                                                     std::uint64_t seed)
    : sequence_(v.num_instances(), v.num_labels()), set_size_(set_size) {
  Rng rng(seed);
  auto [z, target] = SampleRealizableSequence(v, horizon, rng, set_size);
  sequence_ = std::move(z);
  target_ = target;
  labeling_ = RowOf(v, target);
}

std::string RandomRealizableAdversary::name() const {
  return fmt::format("random-realizable:{}", set_size_);
}

std::unique_ptr<Adversary> RandomRealizableAdversary::Clone() const {
  return std::make_unique<RandomRealizableAdversary>(*this);
}

Instance RandomRealizableAdversary::NextInstance() {
  if (t_ >= sequence_.size()) throw std::out_of_range("sequence exhausted");
  return sequence_[t_].x;
}

RoundOutcome RandomRealizableAdversary::Respond(Label prediction) {
  CheckPrediction(prediction, num_labels());
  const LabelSet allowed = sequence_[t_++].allowed;
  return {allowed.Contains(prediction), allowed};
}

Justification RandomRealizableAdversary::Justify() const {
  LabeledSequence played(sequence_.num_instances(), sequence_.num_labels());
  for (int t = 0; t < t_; ++t) played.Append(sequence_[t].x, sequence_[t].allowed);
  return {std::move(played), labeling_};
}

// -- NoisyAdversary -----------------------------------------------------------

NoisyAdversary::NoisyAdversary(const VersionSpace& v, int horizon, double rate,
                               std::uint64_t seed)
    : sequence_(v.num_instances(), v.num_labels()), rate_(rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("noise rate outside [0, 1]");
  }
  Rng rng(seed);
  auto [clean, target] = SampleRealizableSequence(v, horizon, rng, 1);
  labeling_ = RowOf(v, target);
  const int k = v.num_labels();
  for (const MultiLabelExample& item : clean.items()) {
    Label y = item.allowed.Min();
    if (UniformReal(rng) < rate_) {
      const Label other = UniformInt(rng, 0, k - 2);
      y = other >= y ? other + 1 : other;
    }
    sequence_.Append(item.x, y);
  }
}

std::string NoisyAdversary::name() const {
  return fmt::format("random-noisy:{}", rate_);
}

std::unique_ptr<Adversary> NoisyAdversary::Clone() const {
  return std::make_unique<NoisyAdversary>(*this);
}

Instance NoisyAdversary::NextInstance() {
  if (t_ >= sequence_.size()) throw std::out_of_range("sequence exhausted");
  return sequence_[t_].x;
}

RoundOutcome NoisyAdversary::Respond(Label prediction) {
  CheckPrediction(prediction, num_labels());
  const LabelSet allowed = sequence_[t_++].allowed;
  return {allowed.Contains(prediction), allowed};
}

Justification NoisyAdversary::Justify() const {
  LabeledSequence played(sequence_.num_instances(), sequence_.num_labels());
  for (int t = 0; t < t_; ++t) played.Append(sequence_[t].x, sequence_[t].allowed);
  return {std::move(played), labeling_};
}

// -- PermutationAdversary -----------------------------------------------------

int PermutationAdversary::SequenceLength(int delta, int num_labels) {
  return delta * num_labels * (num_labels - 1) / 2;
}

PermutationAdversary::PermutationAdversary(int delta, int num_labels,
                                           std::uint64_t seed)
    : delta_(delta), k_(num_labels) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  if (num_labels < 2 || num_labels > kMaxLabels) {
    throw std::invalid_argument("label count out of range");
  }
  Rng rng(seed);
  labeling_.resize(delta * k_);
  std::vector<Label> remaining;
  for (int j = 0; j < delta_; ++j) {
    remaining.resize(k_);
    std::iota(remaining.begin(), remaining.end(), 0);
    // y_{j,m} uniform over the labels not used by y_{j,0..m-1}.
    for (int m = 0; m < k_; ++m) {
      const int pick = UniformInt(rng, 0, k_ - 1 - m);
      labeling_[j * k_ + m] = remaining[pick];
      remaining.erase(remaining.begin() + pick);
    }
    for (int m = 0; m + 1 < k_; ++m) {
      for (int r = 0; r < k_ - 1 - m; ++r) order_.push_back(j * k_ + m);
    }
  }
}

std::string PermutationAdversary::name() const {
  return fmt::format("permutation:{}", delta_);
}

std::unique_ptr<Adversary> PermutationAdversary::Clone() const {
  return std::make_unique<PermutationAdversary>(*this);
}

Instance PermutationAdversary::NextInstance() {
  if (t_ >= static_cast<int>(order_.size())) {
    throw std::out_of_range("sequence exhausted");
  }
  return order_[t_];
}

RoundOutcome PermutationAdversary::Respond(Label prediction) {
  CheckPrediction(prediction, k_);
  const Label truth = labeling_[order_[t_++]];
  return {prediction == truth, LabelSet::Single(truth)};
}

Justification PermutationAdversary::Justify() const {
  LabeledSequence played(num_instances(), k_);
  for (int t = 0; t < t_; ++t) played.Append(order_[t], labeling_[order_[t]]);
  return {std::move(played), labeling_};
}

// -- MinimaxAdversary ---------------------------------------------------------

MinimaxAdversary::MinimaxAdversary(const VersionSpace& v) : survivors_(v) {
  if (v.empty()) throw std::invalid_argument("minimax adversary needs a nonempty class");
  MaybeCommit();
}

void MinimaxAdversary::MaybeCommit() {
  if (!committed_ && Bldim(survivors_) == 0) committed_ = survivors_.First();
}

std::unique_ptr<Adversary> MinimaxAdversary::Clone() const {
  return std::make_unique<MinimaxAdversary>(*this);
}

Instance MinimaxAdversary::NextInstance() {
  if (current_ >= 0) return current_;
  const int n = num_instances();
  if (committed_) {
    current_ = honest_ % n;
    return current_;
  }
  const int b = Bldim(survivors_);
  for (Instance x = 0; x < n; ++x) {
    int worst = b;
    for (Label y = 0; y < num_labels(); ++y) {
      worst = std::min(worst, Bldim(RestrictNe(survivors_, x, y)));
    }
    if (1 + worst == b) {
      current_ = x;
      return x;
    }
  }
  throw std::logic_error("no instance attains the bandit dimension");
}

RoundOutcome MinimaxAdversary::Respond(Label prediction) {
  CheckPrediction(prediction, num_labels());
  if (current_ < 0) NextInstance();
  const Instance x = current_;
  current_ = -1;
  shown_.push_back(x);
  RoundOutcome out;
  if (!committed_) {
    survivors_ = RestrictNe(survivors_, x, prediction);
    if (survivors_.empty()) throw std::logic_error("survivor space emptied");
    ++forced_;
    out.correct = false;
    MaybeCommit();
  } else {
    const Label truth = survivors_.klass().At(*committed_, x);
    ++honest_;
    out.correct = prediction == truth;
    out.allowed = LabelSet::Single(truth);
  }
  trace_.push_back(Bldim(survivors_));
  return out;
}

Justification MinimaxAdversary::Justify() const {
  const int h = committed_ ? *committed_ : survivors_.First();
  std::vector<Label> labeling = RowOf(survivors_, h);
  LabeledSequence played(num_instances(), num_labels());
  for (Instance x : shown_) played.Append(x, labeling[x]);
  return {std::move(played), std::move(labeling)};
}

// -- GuessingAdversary --------------------------------------------------------

GuessingAdversary::GuessingAdversary(const VersionSpace& v, std::uint64_t seed)
    : k_(v.num_labels()) {
  if (v.empty()) throw std::invalid_argument("guessing adversary needs a nonempty class");
  Rng rng(seed);
  const std::vector<int> members = v.Indices();
  labeling_ = RowOf(v, members[UniformInt(rng, 0, static_cast<int>(members.size()) - 1)]);
}

std::unique_ptr<Adversary> GuessingAdversary::Clone() const {
  return std::make_unique<GuessingAdversary>(*this);
}

Instance GuessingAdversary::NextInstance() {
  if (t_ >= Length(0)) throw std::out_of_range("sequence exhausted");
  return t_ / (k_ - 1);
}

RoundOutcome GuessingAdversary::Respond(Label prediction) {
  CheckPrediction(prediction, k_);
  const Label truth = labeling_[NextInstance()];
  ++t_;
  return {prediction == truth, LabelSet::Single(truth)};
}

Justification GuessingAdversary::Justify() const {
  LabeledSequence played(num_instances(), k_);
  for (int t = 0; t < t_; ++t) played.Append(t / (k_ - 1), labeling_[t / (k_ - 1)]);
  return {std::move(played), labeling_};
}

}  // namespace banditlab
