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


#include "banditlab/guessing.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace banditlab {
namespace {

class ConstantGuesser : public Guesser {
 public:
  std::string name() const override { return "constant"; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Guesser> Clone() const override {
    return std::make_unique<ConstantGuesser>(*this);
  }
  void Reset(int, Rng&) override {}
  int Guess(Rng&) override { return 0; }
  void Observe(int, bool) override {}
};

class RandomGuesser : public Guesser {
 public:
  std::string name() const override { return "random"; }
  bool deterministic() const override { return false; }
  std::unique_ptr<Guesser> Clone() const override {
    return std::make_unique<RandomGuesser>(*this);
  }
  void Reset(int num_labels, Rng&) override { k_ = num_labels; }
  int Guess(Rng& rng) override { return UniformInt(rng, 0, k_ - 1); }
  void Observe(int, bool) override {}

 private:
  int k_ = 2;
};

class CyclingGuesser : public Guesser {
 public:
  std::string name() const override { return "cycling"; }
  bool deterministic() const override { return true; }
  std::unique_ptr<Guesser> Clone() const override {
    return std::make_unique<CyclingGuesser>(*this);
  }
  void Reset(int num_labels, Rng&) override {
    k_ = num_labels;
    t_ = 0;
  }
  int Guess(Rng&) override { return t_ % k_; }
  void Observe(int, bool) override { ++t_; }

 private:
  int k_ = 2;
  int t_ = 0;
};

// Walks an order of the labels, stopping at the first hit.
class OrderGuesser : public Guesser {
 public:
  explicit OrderGuesser(bool shuffled) : shuffled_(shuffled) {}
  std::string name() const override {
    return shuffled_ ? "shuffled-non-repeating" : "non-repeating";
  }
  bool deterministic() const override { return !shuffled_; }
  std::unique_ptr<Guesser> Clone() const override {
    return std::make_unique<OrderGuesser>(*this);
  }
  void Reset(int num_labels, Rng& rng) override {
    order_.resize(num_labels);
    std::iota(order_.begin(), order_.end(), 0);
    if (shuffled_) {
      for (int i = num_labels - 1; i > 0; --i) {
        std::swap(order_[i], order_[UniformInt(rng, 0, i)]);
      }
    }
    next_ = 0;
    hit_ = -1;
  }
  int Guess(Rng&) override {
    return hit_ >= 0 ? hit_ : order_[std::min<int>(next_, order_.size() - 1)];
  }
  void Observe(int guess, bool correct) override {
    if (correct) hit_ = guess;
    ++next_;
  }

 private:
  bool shuffled_;
  std::vector<int> order_;
  int next_ = 0;
  int hit_ = -1;
};

}  // namespace

std::unique_ptr<Guesser> MakeConstantGuesser() {
  return std::make_unique<ConstantGuesser>();
}
std::unique_ptr<Guesser> MakeRandomGuesser() {
  return std::make_unique<RandomGuesser>();
}
std::unique_ptr<Guesser> MakeCyclingGuesser() {
  return std::make_unique<CyclingGuesser>();
}
std::unique_ptr<Guesser> MakeNonRepeatingGuesser() {
  return std::make_unique<OrderGuesser>(false);
}
std::unique_ptr<Guesser> MakeShuffledGuesser() {
  return std::make_unique<OrderGuesser>(true);
}

std::vector<std::unique_ptr<Guesser>> GuesserZoo() {
  std::vector<std::unique_ptr<Guesser>> zoo;
  zoo.push_back(MakeConstantGuesser());
  zoo.push_back(MakeRandomGuesser());
  zoo.push_back(MakeCyclingGuesser());
  zoo.push_back(MakeNonRepeatingGuesser());
  zoo.push_back(MakeShuffledGuesser());
  return zoo;
}

namespace {

int PlayAgainst(int num_labels, int secret, Guesser& guesser, Rng& rng) {
  guesser.Reset(num_labels, rng);
  int wrong = 0;
  for (int t = 0; t < num_labels - 1; ++t) {
    const int g = guesser.Guess(rng);
    const bool correct = g == secret;
    if (!correct) ++wrong;
    guesser.Observe(g, correct);
  }
  return wrong;
}

}  // namespace

int PlayGuessingGame(int num_labels, Guesser& guesser, Rng& rng) {
  if (num_labels < 2) throw std::invalid_argument("guessing game needs k >= 2");
  const int secret = UniformInt(rng, 0, num_labels - 1);
  return PlayAgainst(num_labels, secret, guesser, rng);
}

double ExactGuessingExpectation(int num_labels, const Guesser& guesser) {
  if (!guesser.deterministic()) {
    throw std::invalid_argument("exact expectation needs a deterministic guesser");
  }
  if (num_labels < 2) throw std::invalid_argument("guessing game needs k >= 2");
  Rng unused(0);
  long total = 0;
  for (int u = 0; u < num_labels; ++u) {
    auto g = guesser.Clone();
    total += PlayAgainst(num_labels, u, *g, unused);
  }
  return static_cast<double>(total) / num_labels;
}

double GuessingFloor(int num_labels) { return (num_labels - 1) / 2.0; }

}  // namespace banditlab
