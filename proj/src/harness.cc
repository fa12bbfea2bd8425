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


#include "banditlab/harness.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "banditlab/capacity_learner.h"
#include "banditlab/dimensions.h"
#include "banditlab/experts.h"
#include "banditlab/linear.h"

namespace banditlab {
namespace {

// Splits "name:arg" into its parts; arg is empty without a colon.
std::pair<std::string, std::string> SplitSpec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

int ParseIntArg(const std::string& spec, const std::string& arg) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw std::invalid_argument(fmt::format("bad integer in '{}'", spec));
  }
  return value;
}

double ParseRateArg(const std::string& spec, const std::string& arg) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(arg, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (arg.empty() || used != arg.size()) {
    throw std::invalid_argument(fmt::format("bad number in '{}'", spec));
  }
  return value;
}

bool IsFullClass(const VersionSpace& v) {
  double count = std::pow(double(v.num_labels()), v.num_instances());
  return count == double(v.size());
}

bool SingleLabel(const LabeledSequence& z) {
  return std::all_of(z.items().begin(), z.items().end(),
                     [](const MultiLabelExample& e) { return e.allowed.size() == 1; });
}

}  // namespace

// -- Factories ----------------------------------------------------------------

std::vector<std::string> LearnerNames() {
  return {"soa",      "soa-bandit", "capacity", "exp4",
          "random",   "constant",   "cycling",  "perceptron-bandit"};
}

std::unique_ptr<Learner> MakeLearner(const std::string& name,
                                     const VersionSpace& hypotheses, int horizon) {
  const int k = hypotheses.num_labels();
  if (name == "soa") return std::make_unique<SoaLearner>(hypotheses);
  if (name == "soa-bandit") return std::make_unique<SoaBanditLearner>(hypotheses);
  if (name == "capacity") return std::make_unique<CapacityLearner>(hypotheses);
  if (name == "exp4") return std::make_unique<Exp4Learner>(hypotheses, horizon);
  if (name == "random") return std::make_unique<RandomLearner>(k);
  if (name == "constant") return std::make_unique<ConstantLearner>(0);
  if (name == "cycling") return std::make_unique<CyclingLearner>(k);
  if (name == "perceptron-bandit") {
    const int n = hypotheses.num_instances();
    std::vector<Vector> basis;
    for (int x = 0; x < n; ++x) basis.push_back(BasisVector(x, n));
    return std::make_unique<BanditPerceptronLearner>(std::move(basis), k);
  }
  throw std::invalid_argument(fmt::format("unknown learner '{}'", name));
}

std::unique_ptr<Adversary> MakeAdversary(const std::string& spec,
                                         const VersionSpace& hypotheses,
                                         int horizon, std::uint64_t seed) {
  const auto [name, arg] = SplitSpec(spec);
  const int n = hypotheses.num_instances();
  const int k = hypotheses.num_labels();
  if (name == "guessing" && arg.empty()) {
    return std::make_unique<GuessingAdversary>(hypotheses, seed);
  }
  if (name == "minimax" && arg.empty()) {
    return std::make_unique<MinimaxAdversary>(hypotheses);
  }
  if (name == "random-realizable") {
    return std::make_unique<RandomRealizableAdversary>(
        hypotheses, horizon, ParseIntArg(spec, arg), seed);
  }
  if (name == "random-noisy") {
    return std::make_unique<NoisyAdversary>(hypotheses, horizon,
                                            ParseRateArg(spec, arg), seed);
  }
  if (name == "permutation") {
    const int delta = ParseIntArg(spec, arg);
    if (delta < 1 || delta * k != n) {
      throw std::invalid_argument(fmt::format(
          "permutation:{} needs {} instances, the class has {}", delta,
          delta * k, n));
    }
    return std::make_unique<PermutationAdversary>(delta, k, seed);
  }
  throw std::invalid_argument(fmt::format("unknown adversary '{}'", spec));
}

// -- Games --------------------------------------------------------------------

GameTranscript PlayGame(const VersionSpace& hypotheses, Learner& learner,
                        Adversary& adversary, int horizon, Rng& rng,
                        const RoundObserver& observer) {
  if (adversary.num_instances() != hypotheses.num_instances() ||
      adversary.num_labels() != hypotheses.num_labels()) {
    throw std::invalid_argument("adversary and class disagree on the universe");
  }
  const bool bandit = learner.feedback_kind() == FeedbackKind::kBandit;
  GameTranscript out{{}, {LabeledSequence(hypotheses.num_instances(),
                                           hypotheses.num_labels()), {}}};
  const int length = adversary.Length(horizon);
  out.rounds.reserve(length);
  for (int t = 0; t < length; ++t) {
    const Instance x = adversary.NextInstance();
    const Label prediction = learner.Predict(x, rng);
    const RoundOutcome outcome = adversary.Respond(prediction);
    if (bandit) {
      learner.Observe(x, prediction, BanditFeedback{outcome.correct});
    } else {
      if (!outcome.allowed) {
        throw std::invalid_argument(fmt::format(
            "adversary '{}' withholds label sets; learner '{}' needs them",
            adversary.name(), learner.name()));
      }
      learner.Observe(x, prediction, FullInfoFeedback{*outcome.allowed});
    }
    if (!outcome.correct) ++out.mistakes;
    out.rounds.push_back({x, prediction, outcome.correct, out.mistakes});
    if (observer) observer(learner, out.rounds.back());
  }
  out.justification = adversary.Justify();
  out.class_error = out.justification.sequence.empty()
                        ? 0
                        : ClassError(hypotheses, out.justification.sequence);
  return out;
}

void ParallelFor(int count, const std::function<void(int)>& body) {
  const int workers = std::max(
      1, std::min<int>(count, static_cast<int>(std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<GameTranscript> RunGame(
    const GameConfig& cfg, const std::function<RoundObserver()>& make_observer) {
  if (!cfg.klass) throw std::invalid_argument("no class");
  if (cfg.horizon < 1) throw std::invalid_argument("T must be at least 1");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const VersionSpace all = VersionSpace::All(cfg.klass);
  const std::unique_ptr<Learner> proto = MakeLearner(cfg.learner, all, cfg.horizon);
  // Resolve the adversary name up front so errors surface before any work.
  MakeAdversary(cfg.adversary, all, cfg.horizon, cfg.seed);
  std::vector<std::optional<GameTranscript>> slots(cfg.trials);
  ParallelFor(cfg.trials, [&](int trial) {
    const std::uint64_t s = DeriveSeed(cfg.seed, trial);
    Rng rng(DeriveSeed(s, 1));
    auto learner = proto->Clone();
    auto adversary = MakeAdversary(cfg.adversary, all, cfg.horizon, DeriveSeed(s, 2));
    const RoundObserver observer = make_observer ? make_observer() : nullptr;
    slots[trial] = PlayGame(all, *learner, *adversary, cfg.horizon, rng, observer);
  });
  std::vector<GameTranscript> out;
  out.reserve(cfg.trials);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

// -- Bounds -------------------------------------------------------------------

std::string DirectionSymbol(Direction d) {
  switch (d) {
    case Direction::kBelow: return "<";
    case Direction::kAtMost: return "<=";
    case Direction::kAtLeast: return ">=";
    case Direction::kEqual: return "==";
    case Direction::kInfo: return "n/a";
  }
  return "?";
}

bool Satisfies(double measured, const Bound& bound, double tolerance) {
  switch (bound.direction) {
    case Direction::kBelow: return measured < bound.value + tolerance;
    case Direction::kAtMost: return measured <= bound.value + tolerance;
    case Direction::kAtLeast: return measured >= bound.value - tolerance;
    case Direction::kEqual: return std::abs(measured - bound.value) <= tolerance;
    case Direction::kInfo: return true;
  }
  return false;
}

double CapacityCeiling(int num_labels, int ldim) {
  return 4.0 * num_labels * std::log(double(num_labels)) * ldim;
}

bool WithinCapacityCeiling(int mistakes, int num_labels, int ldim) {
  if (ldim <= 0) return mistakes == 0;
  return mistakes < CapacityCeiling(num_labels, ldim);
}

std::optional<Bound> TrialBound(const GameConfig& cfg, const Learner& learner,
                                const Adversary& adversary,
                                const GameTranscript& transcript) {
  const VersionSpace all = VersionSpace::All(cfg.klass);
  const int k = all.num_labels();
  const int played = static_cast<int>(transcript.rounds.size());
  const std::string adv = SplitSpec(adversary.name()).first;
  const bool bandit = learner.feedback_kind() == FeedbackKind::kBandit;

  if (adv == "minimax" && bandit && learner.deterministic()) {
    return Bound{"deterministic bandit learner vs minimax adversary: "
                 "mistakes >= min(T, bldim)",
                 double(std::min(played, Bldim(all))), Direction::kAtLeast, false};
  }
  if (learner.name() == "capacity" && adversary.realizable()) {
    const int ldim = Ldim(all);
    if (ldim == 0) {
      return Bound{"capacity learner on a class of ldim 0: no mistakes", 0.0,
                   Direction::kAtMost, false};
    }
    return Bound{"capacity learner: mistakes < 4 k ln(k) ldim",
                 CapacityCeiling(k, ldim), Direction::kBelow, false};
  }
  if (learner.name() == "soa" && adversary.realizable() &&
      SingleLabel(transcript.justification.sequence)) {
    return Bound{"SOA on a realizable single-label run: mistakes <= ldim",
                 double(Ldim(all)), Direction::kAtMost, false};
  }
  if (learner.name() == "exp4") {
    const auto& exp4 = static_cast<const Exp4Learner&>(learner);
    return Bound{"exp4 over E_{A,phi}: E[mistakes] <= class error + "
                 "e sqrt(k T ln N)",
                 transcript.class_error +
                     Exp4RegretBound(k, exp4.pool().size(), cfg.horizon),
                 Direction::kAtMost, true};
  }
  if (adv == "permutation" && bandit) {
    const int delta = adversary.num_instances() / k;
    return Bound{"permutation adversary: E[mistakes] >= delta (k-1) k / 4",
                 delta * (k - 1) * k / 4.0, Direction::kAtLeast, true};
  }
  if (adv == "guessing" && bandit && IsFullClass(all)) {
    return Bound{"guessing game per instance: E[mistakes] >= n (k-1) / 2",
                 all.num_instances() * (k - 1) / 2.0, Direction::kAtLeast, true};
  }
  return std::nullopt;
}

Stats MeanAndStderr(const std::vector<double>& values) {
  Stats s;
  const int n = static_cast<int>(values.size());
  if (n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / n;
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std_error = std::sqrt(ss / (n - 1) / n);
  }
  return s;
}

}  // namespace banditlab
