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

#include "banditlab/experts.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "banditlab/simd/kernels.h"

namespace banditlab {
namespace {

BigInt Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt c = 1;
  for (int i = 0; i < r; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

// Calls emit(rounds, labels) for every A with |A| = size and every phi on A,
// rounds in lexicographic order, then labels in base-k order.
template <typename Emit>
void ForEachDeviationSet(int horizon, int k, int size, Emit&& emit) {
  std::vector<int> rounds(size);
  std::vector<int> labels(size);
  auto labels_loop = [&]() {
    std::fill(labels.begin(), labels.end(), 0);
    while (true) {
      emit(rounds, labels);
      int i = size - 1;
      while (i >= 0 && labels[i] == k - 1) labels[i--] = 0;
      if (i < 0) return;
      ++labels[i];
    }
  };
  if (size == 0) {
    emit(rounds, labels);
    return;
  }
  for (int i = 0; i < size; ++i) rounds[i] = i;
  while (true) {
    labels_loop();
    int i = size - 1;
    while (i >= 0 && rounds[i] == horizon - size + i) --i;
    if (i < 0) return;
    ++rounds[i];
    for (int j = i + 1; j < size; ++j) rounds[j] = rounds[j - 1] + 1;
  }
}

}  // namespace

BigInt CountExperts(int horizon, int num_labels, int ldim) {
  BigInt total = 0;
  BigInt power = 1;
  for (int j = 0; j <= ldim; ++j) {
    total += Binomial(horizon, j) * power;
    power *= num_labels;
  }
  return total;
}

BigInt ExpertCountCeiling(int horizon, int num_labels, int ldim) {
  BigInt base = BigInt(horizon) * num_labels;
  BigInt out = 1;
  for (int j = 0; j < ldim; ++j) out *= base;
  return out;
}

// -- ExpertsPool --------------------------------------------------------------

ExpertsPool::ExpertsPool(const VersionSpace& hypotheses, int horizon,
                         std::int64_t cap)
    : klass_(hypotheses.class_ptr()),
      n_(hypotheses.num_instances()),
      k_(hypotheses.num_labels()),
      horizon_(horizon),
      ldim_(Ldim(hypotheses)) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (hypotheses.empty()) throw std::invalid_argument("empty hypothesis space");
  const int slots = std::min(ldim_, horizon_);
  const BigInt count = CountExperts(horizon_, k_, slots);
  if (count > cap) {
    throw std::length_error(fmt::format(
        "{} experts exceed the enumeration cap {}", count.str(), cap));
  }
  num_experts_ = static_cast<int>(count);
  const int width = std::max(slots, 1);
  dev_round_.assign(static_cast<std::size_t>(num_experts_) * width, -1);
  dev_label_.assign(dev_round_.size(), -1);
  dev_count_.reserve(num_experts_);
  int e = 0;
  for (int j = 0; j <= slots; ++j) {
    ForEachDeviationSet(horizon_, k_, j,
                        [&](const std::vector<int>& rounds,
                            const std::vector<int>& labels) {
                          for (int i = 0; i < j; ++i) {
                            dev_round_[e * width + i] = rounds[i];
                            dev_label_[e * width + i] = labels[i];
                          }
                          dev_count_.push_back(j);
                          ++e;
                        });
  }
  Intern(hypotheses);
  Reset();
}

std::vector<Deviation> ExpertsPool::deviations(int expert) const {
  const int width = std::max(std::min(ldim_, horizon_), 1);
  std::vector<Deviation> out;
  for (int i = 0; i < dev_count_[expert]; ++i) {
    out.push_back({dev_round_[expert * width + i], dev_label_[expert * width + i]});
  }
  return out;
}

void ExpertsPool::Reset() {
  round_ = 0;
  cursor_.assign(num_experts_, 0);
  state_.assign(num_experts_, 0);
}

int ExpertsPool::Intern(VersionSpace v) {
  auto [it, inserted] = ids_.emplace(v.members(), static_cast<int>(spaces_.size()));
  if (inserted) {
    spaces_.push_back(std::move(v));
    soa_cache_.resize(spaces_.size() * n_, -1);
    trans_cache_.resize(spaces_.size() * n_ * k_, -1);
  }
  return it->second;
}

Label ExpertsPool::SoaLabelOf(int id, Instance x) {
  std::int32_t& slot = soa_cache_[static_cast<std::size_t>(id) * n_ + x];
  if (slot < 0) slot = SoaLabel(spaces_[id], x);
  return slot;
}

int ExpertsPool::Transition(int id, Instance x, Label y) {
  const std::size_t at = (static_cast<std::size_t>(id) * n_ + x) * k_ + y;
  if (trans_cache_[at] < 0) {
    const int next = Intern(RestrictEq(spaces_[id], x, y));
    trans_cache_[at] = next;  // Intern may have grown the table
  }
  return trans_cache_[at];
}

void ExpertsPool::Advise(Instance x, std::vector<std::int32_t>* advice) {
  if (x < 0 || x >= n_) throw std::out_of_range("instance out of range");
  const int width = std::max(std::min(ldim_, horizon_), 1);
  advice->resize(num_experts_);
  for (int e = 0; e < num_experts_; ++e) {
    const int c = cursor_[e];
    if (c < dev_count_[e] && dev_round_[e * width + c] == round_) {
      (*advice)[e] = dev_label_[e * width + c];
    } else {
      (*advice)[e] = SoaLabelOf(state_[e], x);
    }
  }
}

void ExpertsPool::Advance(Instance x, const std::vector<std::int32_t>& advice) {
  const int width = std::max(std::min(ldim_, horizon_), 1);
  for (int e = 0; e < num_experts_; ++e) {
    const int c = cursor_[e];
    if (c < dev_count_[e] && dev_round_[e * width + c] == round_) ++cursor_[e];
    state_[e] = Transition(state_[e], x, advice[e]);
  }
  ++round_;
}

std::vector<int> ExpertLosses(const VersionSpace& hypotheses,
                              const LabeledSequence& z, std::int64_t cap) {
  ExpertsPool pool(hypotheses, std::max(z.size(), 1), cap);
  std::vector<int> losses(pool.size(), 0);
  std::vector<std::int32_t> advice;
  for (const MultiLabelExample& item : z.items()) {
    pool.Advise(item.x, &advice);
    for (int e = 0; e < pool.size(); ++e) {
      if (!item.allowed.Contains(advice[e])) ++losses[e];
    }
    pool.Advance(item.x, advice);
  }
  return losses;
}

// -- Exp4 ---------------------------------------------------------------------

double Exp4Gamma(int num_labels, std::int64_t num_experts, int horizon) {
  const double e = std::numbers::e;
  const double g = std::sqrt(num_labels * std::log(static_cast<double>(num_experts)) /
                             ((e - 1.0) * horizon));
  return std::min(1.0, g);
}

double Exp4RegretBound(int num_labels, std::int64_t num_experts, int horizon) {
  return std::numbers::e *
         std::sqrt(static_cast<double>(num_labels) * horizon *
                   std::log(static_cast<double>(num_experts)));
}

Exp4::Exp4(int num_labels, int num_experts, double gamma)
    : k_(num_labels), gamma_(gamma), weights_(num_experts, 1.0) {
  if (num_experts < 1) throw std::invalid_argument("Exp4 needs an expert");
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma outside [0, 1]");
  }
}

std::vector<double> Exp4::Distribution(
    const std::vector<std::int32_t>& advice) const {
  const double total = simd::Sum(weights_);
  if (!(total > 0.0)) throw std::runtime_error("Exp4 weights sum to zero");
  std::vector<double> p(k_);
  for (Label y = 0; y < k_; ++y) {
    p[y] = (1.0 - gamma_) * simd::MaskedSum(weights_, advice, y) / total +
           gamma_ / k_;
  }
  return p;
}

void Exp4::Update(const std::vector<std::int32_t>& advice, Label played,
                  double p_played, bool reward) {
  if (!reward || gamma_ == 0.0) return;
  simd::MaskedScale(weights_, advice, played,
                    std::exp(gamma_ / (k_ * p_played)));
  const double total = simd::Sum(weights_);
  if (total > 1e200) simd::Scale(weights_, 1.0 / total);
}

Label SampleLabel(const std::vector<double>& p, Rng& rng) {
  const double u = UniformReal(rng);
  double acc = 0.0;
  int last = 0;
  for (int y = 0; y < static_cast<int>(p.size()); ++y) {
    if (p[y] <= 0.0) continue;
    acc += p[y];
    last = y;
    if (u < acc) return y;
  }
  return last;
}

// -- Exp4Learner --------------------------------------------------------------

Exp4Learner::Exp4Learner(const VersionSpace& hypotheses, int horizon,
                         std::int64_t cap)
    : pool_(std::make_shared<ExpertsPool>(hypotheses, horizon, cap)),
      exp4_(hypotheses.num_labels(), pool_->size(),
            Exp4Gamma(hypotheses.num_labels(), pool_->size(), horizon)) {}

std::unique_ptr<Learner> Exp4Learner::Clone() const {
  auto copy = std::make_unique<Exp4Learner>(*this);
  copy->pool_ = std::make_shared<ExpertsPool>(*pool_);
  return copy;
}

Label Exp4Learner::Predict(Instance x, Rng& rng) {
  if (advised_x_ != x) {
    pool_->Advise(x, &advice_);
    p_ = exp4_.Distribution(advice_);
    advised_x_ = x;
  }
  return SampleLabel(p_, rng);
}

void Exp4Learner::Update(Instance x, Label prediction, const Feedback& feedback) {
  if (advised_x_ != x) {
    pool_->Advise(x, &advice_);
    p_ = exp4_.Distribution(advice_);
  }
  exp4_.Update(advice_, prediction, p_[prediction],
               std::get<BanditFeedback>(feedback).correct);
  pool_->Advance(x, advice_);
  advised_x_ = -1;
}

}  // namespace banditlab
