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


// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// nonzero when any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "banditlab/adversaries.h"
#include "banditlab/capacity_learner.h"
#include "banditlab/corpus.h"
#include "banditlab/dimensions.h"
#include "banditlab/experts.h"
#include "banditlab/guessing.h"
#include "banditlab/harness.h"
#include "banditlab/learners.h"
#include "banditlab/linear.h"
#include "banditlab/presets.h"

namespace banditlab {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<ClassPtr> CorpusClasses(std::uint64_t seed, int randoms) {
  std::vector<ClassPtr> out = {FullClass(1, 2), FullClass(1, 3), FullClass(1, 4),
                               FullClass(2, 2), FullClass(2, 3), FullClass(3, 2),
                               FullClass(3, 3), PermutationClass(1, 3),
                               PermutationClass(2, 3), PermutationClass(1, 4)};
  Rng rng(seed);
  for (int i = 0; i < randoms; ++i) {
    out.push_back(RandomClass(UniformInt(rng, 1, 3), UniformInt(rng, 2, 3), rng));
  }
  return out;
}

// -- 1 ------------------------------------------------------------------------

Outcome OracleEquivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int checked = 0;
  auto check = [&](const VersionSpace& v, const std::string& where) {
    const int l = Ldim(v);
    const int b = Bldim(v);
    const int ol = OracleDimension(v, ShatterMode::kLittlestone);
    const int ob = OracleDimension(v, ShatterMode::kBandit);
    o.Expect(l == ol, fmt::format("{}: ldim {} vs oracle {}", where, l, ol));
    o.Expect(b == ob, fmt::format("{}: bldim {} vs oracle {}", where, b, ob));
    ++checked;
  };
  for (auto [n, k] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    const auto subs = AllNonemptySubspaces(FullClass(n, k));
    const std::size_t expected = (std::size_t{1} << int(std::pow(k, n))) - 1;
    o.Expect(subs.size() == expected,
             fmt::format("n={} k={}: {} subsets, expected {}", n, k, subs.size(), expected));
    for (std::size_t i = 0; i < subs.size(); ++i) {
      check(subs[i], fmt::format("subset {} of full n={} k={}", i, n, k));
    }
  }
  Rng rng(20260);
  for (int i = 0; i < 200; ++i) {
    auto c = RandomClass(UniformInt(rng, 1, 3), UniformInt(rng, 2, 3), rng);
    check(VersionSpace::All(c), fmt::format("random class {}", i));
  }
  const double secs = Seconds(start);
  o.Expect(secs < 60.0, fmt::format("took {:.1f}s", secs));
  o.detail = fmt::format("{} spaces, {:.2f}s", checked, secs);
  return o;
}

// -- 2 ------------------------------------------------------------------------

Outcome KnownDimensions() {
  Outcome o;
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 2; k <= 4; ++k) {
      VersionSpace all = VersionSpace::All(FullClass(n, k));
      o.Expect(Ldim(all) == n, fmt::format("ldim full n={} k={} = {}", n, k, Ldim(all)));
      o.Expect(Bldim(all) == (k - 1) * n,
               fmt::format("bldim full n={} k={} = {}", n, k, Bldim(all)));
      ++checked;
    }
  }
  o.detail = fmt::format("{} full classes", checked);
  return o;
}

// -- 3 ------------------------------------------------------------------------

Outcome CapacityCeilingAndShrinkage() {
  Outcome o;
  int runs = 0;
  std::atomic<long> mistaken_rounds = 0;
  std::atomic<long> shrink_failures = 0;
  int worst_slack_num = 0;
  double worst_ratio = 0.0;
  const auto classes = CorpusClasses(777, 24);
  std::uint64_t seed = 100;
  for (const ClassPtr& c : classes) {
    VersionSpace all = VersionSpace::All(c);
    const int k = c->num_labels();
    const int ldim = Ldim(all);
    const BigInt c0 = CapacityTerm(k, ldim);
    for (const std::string adv :
         {"random-realizable:1", "random-realizable:2", "guessing", "minimax"}) {
      GameConfig cfg{c, "capacity", adv, 40, 10, seed++};
      auto make_observer = [&, c0, k]() -> RoundObserver {
        auto prev = std::make_shared<BigInt>(c0);
        return [&, prev, k](const Learner& l, const RoundRecord& r) {
          const BigInt& now = static_cast<const CapacityLearner&>(l).capacity();
          if (!r.correct) {
            ++mistaken_rounds;
            if (now * 2 * k > *prev * (2 * k - 1)) ++shrink_failures;
          } else if (now != *prev) {
            ++shrink_failures;
          }
          *prev = now;
        };
      };
      for (const GameTranscript& g : RunGame(cfg, make_observer)) {
        ++runs;
        o.Expect(g.class_error == 0, fmt::format("{} vs {}: run not realizable", c->name(), adv));
        o.Expect(WithinCapacityCeiling(g.mistakes, k, ldim),
                 fmt::format("{} vs {}: {} mistakes, ceiling {:.3f} (ldim {})", c->name(),
                             adv, g.mistakes, CapacityCeiling(k, ldim), ldim));
        if (ldim > 0) {
          const double ratio = g.mistakes / CapacityCeiling(k, ldim);
          if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_slack_num = g.mistakes;
          }
        }
      }
    }
  }
  o.Expect(runs >= 1000, fmt::format("only {} runs", runs));
  o.Expect(shrink_failures == 0,
           fmt::format("{} rounds broke the capacity shrinkage", shrink_failures.load()));
  o.detail = fmt::format("{} runs, {} mistaken rounds, max mistakes/ceiling {:.3f} ({} mistakes)",
                         runs, mistaken_rounds.load(), worst_ratio, worst_slack_num);
  return o;
}

// -- 4 ------------------------------------------------------------------------

Outcome MinimaxFloor() {
  Outcome o;
  int games = 0;
  int classes_used = 0;
  for (const ClassPtr& c : CorpusClasses(4242, 30)) {
    VersionSpace all = VersionSpace::All(c);
    const int b = Bldim(all);
    if (b > 6) continue;
    ++classes_used;
    for (const std::string learner : {"capacity", "soa-bandit", "constant", "cycling"}) {
      for (int T : {1, std::max(b, 1), b + 5}) {
        GameConfig cfg{c, learner, "minimax", T, 1, 0};
        const GameTranscript g = RunGame(cfg)[0];
        ++games;
        o.Expect(g.mistakes >= std::min(T, b),
                 fmt::format("{} on {} T={}: {} mistakes < min(T, bldim={})", learner,
                             c->name(), T, g.mistakes, b));
        o.Expect(g.class_error == 0, fmt::format("{} on {}: unrealizable", learner, c->name()));
      }
    }
  }
  o.detail = fmt::format("{} classes, {} games", classes_used, games);
  return o;
}

// -- 5 ------------------------------------------------------------------------

Outcome AgnosticRegret() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::vector<ClassPtr> classes = {FullClass(1, 3), FullClass(2, 3), PermutationClass(1, 3)};
  Rng rng(31337);
  while (classes.size() < 5) {
    auto c = RandomClass(3, 3, rng);
    const int l = Ldim(VersionSpace::All(c));
    if (l >= 1 && l <= 2) classes.push_back(c);
  }
  const int T = 200;
  const int trials = 50;
  std::vector<std::string> parts;
  std::uint64_t seed = 5;
  for (const ClassPtr& c : classes) {
    VersionSpace all = VersionSpace::All(c);
    const int k = c->num_labels();
    const int ldim = Ldim(all);
    o.Expect(k == 3 && ldim <= 2, c->name() + ": outside k=3, ldim<=2");
    GameConfig cfg{c, "exp4", "random-noisy:0.2", T, trials, seed++};
    const auto runs = RunGame(cfg);
    std::vector<double> regret;
    for (const GameTranscript& g : runs) regret.push_back(g.mistakes - g.class_error);
    const double mean = std::accumulate(regret.begin(), regret.end(), 0.0) / trials;
    double ss = 0;
    for (double r : regret) ss += (r - mean) * (r - mean);
    const double se = std::sqrt(ss / (trials - 1) / trials);
    const double bound = std::numbers::e * std::sqrt(k * T * ldim * std::log(double(T) * k));
    o.Expect(mean <= bound + 3 * se,
             fmt::format("{}: mean regret {:.2f} > {:.2f}", c->name(), mean, bound));
    std::vector<int> ok(trials, 0);
    ParallelFor(trials, [&](int t) {
      const auto losses = ExpertLosses(all, runs[t].justification.sequence);
      ok[t] = *std::min_element(losses.begin(), losses.end()) <= runs[t].class_error;
    });
    for (int t = 0; t < trials; ++t) {
      o.Expect(ok[t] != 0, fmt::format("{} trial {}: best expert loss above class error",
                                       c->name(), t));
    }
    parts.push_back(fmt::format("{} regret {:.1f}/{:.1f}", c->name(), mean, bound));
  }
  const double secs = Seconds(start);
  o.Expect(secs < 300.0, fmt::format("took {:.1f}s", secs));
  o.detail = fmt::format("{}; {:.1f}s", fmt::join(parts, ", "), secs);
  return o;
}

// -- 6 ------------------------------------------------------------------------

Outcome GuessingClaim() {
  Outcome o;
  const int trials = 100000;
  double worst = 1e9;
  for (int k = 2; k <= 8; ++k) {
    for (auto& g : GuesserZoo()) {
      Rng rng(DeriveSeed(k, std::hash<std::string>{}(g->name())));
      double sum = 0, sq = 0;
      for (int i = 0; i < trials; ++i) {
        const double r = PlayGuessingGame(k, *g, rng);
        sum += r;
        sq += r * r;
      }
      const double mean = sum / trials;
      const double se = std::sqrt((sq / trials - mean * mean) * trials / (trials - 1) / trials);
      const double floor = (k - 1) / 2.0;
      o.Expect(mean >= floor - 3 * se,
               fmt::format("{} k={}: mean {:.4f} < {:.4f} - 3*{:.4f}", g->name(), k, mean,
                           floor, se));
      if (g->name() == "non-repeating") {
        o.Expect(std::abs(mean - floor) <= 3 * se,
                 fmt::format("non-repeating k={}: mean {:.4f} vs {:.4f}", k, mean, floor));
      }
      worst = std::min(worst, (mean - floor) / std::max(se, 1e-12));
    }
  }
  o.detail = fmt::format("k=2..8, {} guessers, min (mean-floor)/se {:.2f}", GuesserZoo().size(),
                         worst);
  return o;
}

// -- 7 ------------------------------------------------------------------------

Outcome PermutationClaim() {
  Outcome o;
  std::vector<std::string> parts;
  std::uint64_t seed = 9;
  for (auto [delta, k] : {std::pair{1, 3}, {2, 4}}) {
    auto c = PermutationClass(delta, k);
    const double floor = delta * (k - 1) * k / 4.0;
    for (const std::string learner :
         {"capacity", "soa-bandit", "constant", "cycling", "random", "perceptron-bandit"}) {
      GameConfig cfg{c, learner, fmt::format("permutation:{}", delta), 1, 10000, seed++};
      std::vector<double> m;
      for (const GameTranscript& g : RunGame(cfg)) m.push_back(g.mistakes);
      const Stats s = MeanAndStderr(m);
      o.Expect(s.mean >= floor - 3 * s.std_error,
               fmt::format("{} at ({}, {}): mean {:.4f} < {:.2f}", learner, delta, k, s.mean,
                           floor));
      parts.push_back(fmt::format("{}@{},{}={:.3f}", learner, delta, k, s.mean));
    }
  }
  o.detail = fmt::format("floors 1.5 and 6; {}", fmt::join(parts, " "));
  return o;
}

// -- 8 ------------------------------------------------------------------------

Outcome LinearConstructions() {
  Outcome o;
  std::vector<std::string> flags;
  Rng rng(8);
  for (auto [delta, k] : {std::pair{1, 3}, {2, 4}, {3, 5}}) {
    const double gap = double(k) * k * (1 - std::cos(2 * std::numbers::pi / k));
    const double frob = delta * std::pow(double(k), 5);
    for (int run = 0; run < 100; ++run) {
      std::vector<Label> f(delta * k);
      for (int j = 0; j < delta; ++j) {
        std::iota(f.begin() + j * k, f.begin() + (j + 1) * k, 0);
        std::shuffle(f.begin() + j * k, f.begin() + (j + 1) * k, rng);
      }
      RootsOfUnityConstruction c = RootsOfUnity(f, delta, k, 2 * delta);
      const MarginReport r = CheckMarginRealization(c.w, c.graph);
      o.Expect(r.realized && std::abs(r.min_gap - gap) <= 1e-9,
               fmt::format("({}, {}): min gap {:.12f} vs {:.12f}", delta, k, r.min_gap, gap));
      o.Expect(std::abs(c.w.FrobeniusSquared() - frob) <= 1e-9 * frob,
               fmt::format("({}, {}): |W|^2 {} vs {}", delta, k, c.w.FrobeniusSquared(), frob));
      const double d2 = c.normalized.FrobeniusSquared();
      const PerceptronRun p = RunPerceptron(k, 2 * delta, SampleFromGraph(c.graph, 300, rng));
      o.Expect(p.mistakes <= 2 * d2,
               fmt::format("({}, {}): perceptron {} > 2D^2 = {:.2f}", delta, k, p.mistakes,
                           2 * d2));
    }
    const LinearCheck lc = CheckRootsOfUnity(delta, k);
    if (!lc.fits_threshold) {
      flags.push_back(fmt::format("({}, {}) normalized {:.1f} > k^3 d {:.0f}", delta, k,
                                  lc.normalized_frobenius_squared, lc.threshold));
    }
  }
  for (int L = 1; L <= 5; ++L) {
    for (int k = 2; k <= 4; ++k) {
      for (int run = 0; run < 100; ++run) {
        std::vector<Label> f(L);
        for (auto& y : f) y = UniformInt(rng, 0, k - 1);
        StandardEmbedding e = EmbedFunction(f, k, L);
        const MarginReport r = CheckMarginRealization(e.w, e.graph);
        o.Expect(r.realized && r.min_gap == 1.0,
                 fmt::format("embedding L={} k={}: gap {}", L, k, r.min_gap));
        o.Expect(std::abs(e.w.FrobeniusNorm() - std::sqrt(double(L))) <= 1e-12,
                 fmt::format("embedding L={}: norm {}", L, e.w.FrobeniusNorm()));
        const PerceptronRun p = RunPerceptron(k, L, SampleFromGraph(e.graph, 100, rng));
        o.Expect(p.mistakes <= 2 * L,
                 fmt::format("embedding L={} k={}: perceptron {} > {}", L, k, p.mistakes, 2 * L));
      }
    }
  }
  // The k^3 d threshold is reported, never asserted.
  for (int k : {16, 27, 28}) {
    const LinearCheck big = CheckRootsOfUnity(1, k);
    flags.push_back(fmt::format("(1, {}) normalized {:.1f} vs k^3 d {:.0f}: {}", k,
                                big.normalized_frobenius_squared, big.threshold,
                                big.fits_threshold ? "fits" : "exceeds"));
  }
  o.detail = fmt::format("k^3 d notes: {}", fmt::join(flags, "; "));
  return o;
}

// -- 9 ------------------------------------------------------------------------

Outcome Determinism() {
  Outcome o;
  std::vector<std::string> parts;
  for (const std::string& preset : PresetNames()) {
    ExperimentOptions opts;
    opts.seed = 2024;
    opts.trials = 3;
    const std::string a = ReportCsv(RunExperiment(preset, opts));
    const std::string b = ReportCsv(RunExperiment(preset, opts));
    o.Expect(a == b, preset + ": CSV differs between identical runs");
    o.Expect(a.size() > 100, preset + ": empty report");
    parts.push_back(fmt::format("{} {}B", preset, a.size()));
  }
  o.detail = fmt::format("{}", fmt::join(parts, ", "));
  return o;
}

}  // namespace
}  // namespace banditlab

int main() {
  using banditlab::Outcome;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "dimension recursion matches shattering oracle", banditlab::OracleEquivalence},
      {2, "full-class dimensions", banditlab::KnownDimensions},
      {3, "capacity learner ceiling and shrinkage", banditlab::CapacityCeilingAndShrinkage},
      {4, "minimax floor for deterministic learners", banditlab::MinimaxFloor},
      {5, "experts + Exp4 regret", banditlab::AgnosticRegret},
      {6, "guessing game floor", banditlab::GuessingClaim},
      {7, "permutation adversary floor", banditlab::PermutationClaim},
      {8, "linear constructions", banditlab::LinearConstructions},
      {9, "preset determinism", banditlab::Determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s (%s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str());
    for (const std::string& f : out.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
