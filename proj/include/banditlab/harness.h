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


#ifndef BANDITLAB_HARNESS_H_
#define BANDITLAB_HARNESS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "banditlab/adversaries.h"
#include "banditlab/hypothesis.h"
#include "banditlab/learners.h"

namespace banditlab {

// -- Factories ----------------------------------------------------------------

// soa, soa-bandit, capacity, exp4, random, constant, cycling,
// perceptron-bandit (instances embedded as e_x in R^n).
std::unique_ptr<Learner> MakeLearner(const std::string& name,
                                     const VersionSpace& hypotheses, int horizon);

std::vector<std::string> LearnerNames();

// guessing, permutation:<delta>, minimax, random-realizable:<set size>,
// random-noisy:<rate>. Throws std::invalid_argument on unknown names or when
// the adversary's universe does not match the class.
std::unique_ptr<Adversary> MakeAdversary(const std::string& spec,
                                         const VersionSpace& hypotheses,
                                         int horizon, std::uint64_t seed);

// -- Games --------------------------------------------------------------------

struct RoundRecord {
  Instance x;
  Label prediction;
  bool correct;
  int mistakes;  // cumulative, this round included
};

struct GameTranscript {
  std::vector<RoundRecord> rounds;
  Justification justification;
  int mistakes = 0;
  int class_error = 0;  // of the played sequence against the class
};

// Called after every round with the learner's updated state.
using RoundObserver =
    std::function<void(const Learner& learner, const RoundRecord& record)>;

// One game of adversary.Length(horizon) rounds. Bandit learners see only the
// indicator, full-information learners the label set; a full-information
// learner facing an adversary that withholds the set is an error.
GameTranscript PlayGame(const VersionSpace& hypotheses, Learner& learner,
                        Adversary& adversary, int horizon, Rng& rng,
                        const RoundObserver& observer = nullptr);

struct GameConfig {
  ClassPtr klass;
  std::string learner;
  std::string adversary;
  int horizon = 1;
  int trials = 1;
  std::uint64_t seed = 0;
};

// Trial i uses seed DeriveSeed(cfg.seed, i): its learner randomness and its
// adversary are seeded from two streams of it. Trials run on worker threads
// and come back in trial order. `make_observer`, if given, is called once per
// trial for that trial's observer.
std::vector<GameTranscript> RunGame(
    const GameConfig& cfg,
    const std::function<RoundObserver()>& make_observer = nullptr);

// Parallel map over [0, count) in index order of results.
void ParallelFor(int count, const std::function<void(int)>& body);

// -- Bounds -------------------------------------------------------------------

enum class Direction { kBelow, kAtMost, kAtLeast, kEqual, kInfo };

// "<", "<=", ">=", "==", "n/a"
std::string DirectionSymbol(Direction d);

struct Bound {
  std::string label;  // what the bound is, in words
  double value = 0.0;
  Direction direction = Direction::kAtMost;
  // Whether the bound is on E[mistakes] (checked on the mean at 3 standard
  // errors) or on every single run.
  bool in_expectation = false;
};

bool Satisfies(double measured, const Bound& bound, double tolerance = 0.0);

// 4 k ln(k) ldim
double CapacityCeiling(int num_labels, int ldim);

// mistakes < 4 k ln(k) ldim, or mistakes == 0 when ldim = 0.
bool WithinCapacityCeiling(int mistakes, int num_labels, int ldim);

// The bound that applies to one trial of (learner, adversary) on a class, if
// any. For exp4 the bound includes the trial's class error.
std::optional<Bound> TrialBound(const GameConfig& cfg, const Learner& learner,
                                const Adversary& adversary,
                                const GameTranscript& transcript);

struct Stats {
  double mean = 0.0;
  double std_error = 0.0;
};

Stats MeanAndStderr(const std::vector<double>& values);

}  // namespace banditlab

#endif  // BANDITLAB_HARNESS_H_
