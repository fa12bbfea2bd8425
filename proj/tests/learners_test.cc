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


#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "banditlab/capacity_learner.h"
#include "banditlab/corpus.h"
#include "banditlab/dimensions.h"
#include "banditlab/learners.h"
#include "banditlab/rng.h"

namespace banditlab {
namespace {

VersionSpace Singleton(const ClassPtr& c, int h) {
  const int rows[] = {h};
  return VersionSpace::FromIndices(c, rows);
}

// Brute-force potential: build the refinement from the definition and
// subtract capacities.
BigInt LiteralPotential(const ClassCollection& c, Instance x, Label y0) {
  ClassCollection refined(c.class_ptr());
  const int k = c.num_labels();
  for (const VersionSpace& v : c.spaces()) {
    bool stable = true;
    for (Label y = 0; y < k; ++y) {
      if (y != y0 && Ldim(RestrictEq(v, x, y)) >= Ldim(v)) stable = false;
    }
    if (!stable) {
      refined.Add(v);
      continue;
    }
    for (Label y = 0; y < k; ++y) {
      if (y == y0) continue;
      VersionSpace part = RestrictEq(v, x, y);
      if (!part.empty()) refined.Add(part);
    }
  }
  BigInt before = 0, after = 0;
  for (const VersionSpace& v : c.spaces()) before += CapacityTerm(k, Ldim(v));
  for (const VersionSpace& v : refined.spaces()) after += CapacityTerm(k, Ldim(v));
  return before - after;
}

TEST_CASE("soa prediction rule") {
  auto consts = FullClass(1, 2);
  SoaLearner soa(VersionSpace::All(consts));
  Rng rng(0);
  CHECK(soa.Predict(0, rng) == 0);

  // rows 00, 01, 10 on two points: label 0 at x=0 keeps dimension 1
  auto a = MakeClass("a", 2, 2, {{0, 0}, {0, 1}, {1, 0}});
  CHECK(SoaLabel(VersionSpace::All(a), 0) == 0);
  auto b = MakeClass("b", 2, 2, {{1, 0}, {1, 1}, {0, 0}});
  CHECK(SoaLabel(VersionSpace::All(b), 0) == 1);

  Rng crng(4);
  for (int i = 0; i < 40; ++i) {
    auto c = RandomClass(UniformInt(crng, 1, 3), UniformInt(crng, 2, 4), crng);
    VersionSpace v = VersionSpace::All(c);
    for (Instance x = 0; x < c->num_instances(); ++x) {
      Label best = 0;
      for (Label y = 1; y < c->num_labels(); ++y) {
        if (Ldim(RestrictEq(v, x, y)) > Ldim(RestrictEq(v, x, best))) best = y;
      }
      CHECK(SoaLabel(v, x) == best);
    }
  }
}

TEST_CASE("soa stays within ldim on realizable runs") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto c = RandomClass(UniformInt(rng, 1, 4), UniformInt(rng, 2, 4), rng);
    VersionSpace v = VersionSpace::All(c);
    const int target = UniformInt(rng, 0, c->size() - 1);
    SoaLearner soa(v);
    for (int t = 0; t < 30; ++t) {
      const Instance x = UniformInt(rng, 0, c->num_instances() - 1);
      const Label truth = c->At(target, x);
      const Label guess = soa.Predict(x, rng);
      soa.Observe(x, guess, FullInfoFeedback{LabelSet::Single(truth)});
      CHECK(soa.version_space().Contains(target));
    }
    CHECK(soa.mistakes() <= Ldim(v));
  }
}

TEST_CASE("soa reports an unrealizable run") {
  auto consts = FullClass(1, 2);
  SoaLearner soa(Singleton(consts, 0));
  Rng rng(0);
  soa.Observe(0, 0, FullInfoFeedback{LabelSet::Single(1)});
  CHECK_THROWS_AS(soa.Predict(0, rng), RealizabilityError);
}

TEST_CASE("bandit_potential examples") {
  auto full12 = FullClass(1, 2);
  for (Label y0 = 0; y0 < 2; ++y0) {
    ClassCollection h(full12, {VersionSpace::All(full12)});
    BanditPotentialResult r = BanditPotential(h, 0, y0);
    CHECK(r.stable == std::vector<int>{0});
    REQUIRE(r.refined.size() == 1);
    CHECK(r.refined[0].size() == 1);
    CHECK(r.refined[0].Contains(1 - y0));
    CHECK(r.potential == 3);
  }

  ClassCollection c1(full12, {Singleton(full12, 1)});
  BanditPotentialResult hit = BanditPotential(c1, 0, 1);
  CHECK(hit.stable == std::vector<int>{0});
  CHECK(hit.refined.empty());
  CHECK(hit.potential == 1);

  BanditPotentialResult miss = BanditPotential(c1, 0, 0);
  CHECK(miss.stable.empty());
  REQUIRE(miss.refined.size() == 1);
  CHECK(miss.refined[0] == c1[0]);
  CHECK(miss.potential == 0);
}

TEST_CASE("refinement keeps unstable members in place") {
  auto full13 = FullClass(1, 3);
  // member 0 unstable for y0 = 0 (restriction to 1 keeps ldim 0), member 1
  // stable.
  ClassCollection c(full13, {Singleton(full13, 1), VersionSpace::All(full13)});
  BanditPotentialResult r = BanditPotential(c, 0, 0);
  CHECK(r.stable == std::vector<int>{1});
  REQUIRE(r.refined.size() == 3);
  CHECK(r.refined[0] == c[0]);
  CHECK(r.refined[1] == Singleton(full13, 1));
  CHECK(r.refined[2] == Singleton(full13, 2));
  CHECK(r.potential == 9 - 2);
}

TEST_CASE("capacity learner makes one mistake on two constants") {
  auto full12 = FullClass(1, 2);
  CapacityLearner learner(VersionSpace::All(full12));
  Rng rng(0);
  const Label first = learner.Predict(0, rng);
  const Label truth = 1 - first;
  learner.Observe(0, first, BanditFeedback{false});
  for (int t = 0; t < 10; ++t) {
    const Label y = learner.Predict(0, rng);
    CHECK(y == truth);
    learner.Observe(0, y, BanditFeedback{y == truth});
  }
  CHECK(learner.mistakes() == 1);
  CHECK(learner.capacity() == 1);
}

TEST_CASE("capacity learner invariants along random realizable runs") {
  Rng rng(13);
  int mistaken_rounds = 0;
  for (int run = 0; run < 60; ++run) {
    const int n = UniformInt(rng, 1, 3);
    const int k = UniformInt(rng, 2, 4);
    auto c = RandomClass(n, k, rng);
    VersionSpace v = VersionSpace::All(c);
    const int target = UniformInt(rng, 0, c->size() - 1);
    CapacityLearner learner(v);
    HypothesisBits consistent = v.members();
    for (int t = 0; t < 25; ++t) {
      const Instance x = UniformInt(rng, 0, n - 1);
      const std::vector<BigInt> fast = learner.Potentials(x);
      BigInt best = 0;
      BigInt mass = 0;
      for (Label y = 0; y < k; ++y) {
        CHECK(fast[y] == LiteralPotential(learner.collection(), x, y));
        if (fast[y] > best) best = fast[y];
        mass += fast[y];
      }
      const BigInt before = learner.capacity();
      CHECK(mass * k >= before * (k - 1));
      // Some label always recovers a 1/(2k) share of the capacity.
      CHECK(best * 2 * k >= before);

      const Label guess = learner.Predict(x, rng);
      CHECK(fast[guess] == best);
      for (Label y = 0; y < guess; ++y) CHECK(fast[y] < best);
      const bool correct = guess == c->At(target, x);
      auto copy = Step(learner, x, guess, BanditFeedback{correct});
      CHECK(learner.capacity() == before);
      learner.Observe(x, guess, BanditFeedback{correct});
      CHECK(copy->mistakes() == learner.mistakes());

      if (correct) {
        consistent = consistent & c->Column(x, guess);
        CHECK(learner.capacity() == before);
      } else {
        consistent = consistent.AndNot(c->Column(x, guess));
        ++mistaken_rounds;
        CHECK(learner.capacity() * 2 * k <= before * (2 * k - 1));
      }
      // Every hypothesis consistent with the feedback is covered.
      HypothesisBits covered(c->size());
      for (const VersionSpace& member : learner.collection().spaces()) {
        covered = covered | member.members();
      }
      CHECK(consistent.IsSubsetOf(covered));
      CHECK(learner.capacity() >= 1);
    }
    const int l = Ldim(v);
    if (l == 0) {
      CHECK(learner.mistakes() == 0);
    } else {
      CHECK(learner.mistakes() < 4.0 * k * std::log(k) * l);
    }
  }
  CHECK(mistaken_rounds > 0);
}

TEST_CASE("capacity learner detects unrealizable feedback") {
  auto full12 = FullClass(1, 2);
  CapacityLearner learner(Singleton(full12, 0));
  Rng rng(0);
  const Label y = learner.Predict(0, rng);
  CHECK(y == 0);
  CHECK_THROWS_AS(learner.Observe(0, y, BanditFeedback{false}), RealizabilityError);
}

TEST_CASE("feedback kind is enforced") {
  auto full12 = FullClass(1, 2);
  CapacityLearner capacity(VersionSpace::All(full12));
  CHECK_THROWS_AS(capacity.Observe(0, 0, FullInfoFeedback{LabelSet::Single(0)}),
                  std::invalid_argument);
  SoaLearner soa(VersionSpace::All(full12));
  CHECK_THROWS_AS(soa.Observe(0, 0, BanditFeedback{true}), std::invalid_argument);
}

TEST_CASE("soa-bandit narrows on hits and misses") {
  auto full13 = FullClass(1, 3);
  SoaBanditLearner learner(VersionSpace::All(full13));
  Rng rng(0);
  const Label y = learner.Predict(0, rng);
  learner.Observe(0, y, BanditFeedback{false});
  CHECK(learner.version_space().size() == 2);
  CHECK_FALSE(learner.version_space().Contains(y));
  const Label y2 = learner.Predict(0, rng);
  CHECK(y2 != y);
  learner.Observe(0, y2, BanditFeedback{true});
  CHECK(learner.version_space().size() == 1);
  CHECK(learner.mistakes() == 1);
  CHECK(learner.rounds() == 2);
}

TEST_CASE("baseline learners") {
  Rng rng(1);
  ConstantLearner constant(2);
  CyclingLearner cycling(3);
  for (int t = 0; t < 7; ++t) {
    CHECK(constant.Predict(0, rng) == 2);
    CHECK(cycling.Predict(0, rng) == t % 3);
    cycling.Observe(0, t % 3, BanditFeedback{false});
  }
  CHECK(cycling.mistakes() == 7);

  RandomLearner random(4);
  Rng a(9), b(9);
  auto clone = random.Clone();
  for (int t = 0; t < 20; ++t) {
    const Label y = random.Predict(0, a);
    CHECK(y >= 0);
    CHECK(y < 4);
    CHECK(clone->Predict(0, b) == y);
  }
}

}  // namespace
}  // namespace banditlab
