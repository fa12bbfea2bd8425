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


#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "banditlab/class_io.h"
#include "banditlab/corpus.h"
#include "banditlab/hypothesis.h"
#include "banditlab/rng.h"

namespace banditlab {
namespace {

// Plain row scans, independent of the column bitsets.
int NaiveError(const FiniteClass& c, int h, const LabeledSequence& z) {
  int e = 0;
  for (const auto& item : z.items()) {
    if (!item.allowed.Contains(c.Row(h)[item.x])) ++e;
  }
  return e;
}

int NaiveClassError(const VersionSpace& v, const LabeledSequence& z) {
  int best = std::numeric_limits<int>::max();
  for (int h = 0; h < v.klass().size(); ++h) {
    if (v.Contains(h)) best = std::min(best, NaiveError(v.klass(), h, z));
  }
  return best;
}

LabeledSequence RandomSequence(int n, int k, int T, Rng& rng) {
  LabeledSequence z(n, k);
  for (int t = 0; t < T; ++t) {
    LabelSet s;
    while (s.empty()) s = LabelSet::FromBits(UniformInt(rng, 0, (1 << k) - 1));
    z.Append(UniformInt(rng, 0, n - 1), s);
  }
  return z;
}

TEST_CASE("load_class") {
  auto two = ParseClass(R"({"name": "c", "n": 1, "k": 2, "rows": [[0], [1]]})");
  CHECK(two->size() == 2);
  CHECK(FullClass(2, 3)->size() == 9);

  auto dup = ParseClass(R"({"name": "d", "n": 1, "k": 2, "rows": [[0], [0]]})");
  CHECK(dup->size() == 1);

  auto order = ParseClass(R"({"name": "o", "n": 2, "k": 2, "rows": [[1, 0], [0, 0], [1, 0], [0, 1]]})");
  REQUIRE(order->size() == 3);
  CHECK(order->At(0, 0) == 1);
  CHECK(order->At(1, 0) == 0);
  CHECK(order->At(2, 1) == 1);
}

TEST_CASE("load_class rejects malformed documents") {
  CHECK_THROWS_AS(ParseClass("not json"), std::invalid_argument);
  CHECK_THROWS_AS(ParseClass(R"({"name": "x", "n": 1, "k": 2, "rows": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseClass(R"({"name": "x", "n": 2, "k": 2, "rows": [[0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseClass(R"({"name": "x", "n": 1, "k": 2, "rows": [[2]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseClass(R"({"name": "x", "n": 1, "k": 1, "rows": [[0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseClass(R"({"n": 1, "k": 2, "rows": [[0]], "name": 3})"),
                  std::invalid_argument);
}

TEST_CASE("class and sequence documents round-trip") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto c = RandomClass(UniformInt(rng, 1, 3), UniformInt(rng, 2, 4), rng);
    const std::string text = SerializeClass(*c);
    auto back = ParseClass(text);
    CHECK(*back == *c);
    CHECK(SerializeClass(*back) == text);

    LabeledSequence z = RandomSequence(c->num_instances(), c->num_labels(), 6, rng);
    const std::string seq = SerializeSequence(z);
    LabeledSequence z2 = ParseSequence(seq, c->num_instances(), c->num_labels());
    CHECK(z2 == z);
    CHECK(SerializeSequence(z2) == seq);
  }
  CHECK_THROWS_AS(ParseSequence(R"([{"x": 3, "allowed": [0]}])", 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseSequence(R"([{"x": 0, "allowed": []}])", 2, 2),
                  std::invalid_argument);
}

TEST_CASE("restrict_eq and restrict_ne") {
  auto full22 = FullClass(2, 2);
  VersionSpace all = VersionSpace::All(full22);
  VersionSpace r = RestrictEq(all, 0, 1);
  CHECK(r.size() == 2);
  for (int h : r.Indices()) CHECK(full22->At(h, 0) == 1);

  auto full13 = FullClass(1, 3);
  VersionSpace consts = VersionSpace::All(full13);
  VersionSpace ne = RestrictNe(consts, 0, 2);
  CHECK(ne.size() == 2);
  CHECK_FALSE(ne.Contains(2));

  const int c0[] = {0};
  VersionSpace single = VersionSpace::FromIndices(full13, c0);
  CHECK(RestrictEq(single, 0, 1).empty());
  CHECK(RestrictNe(single, 0, 0).empty());

  VersionSpace none = VersionSpace::None(full13);
  for (Label y = 0; y < 3; ++y) {
    CHECK(RestrictEq(none, 0, y).empty());
    CHECK(RestrictNe(none, 0, y).empty());
  }
}

TEST_CASE("restrictions partition and shrink") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto c = RandomClass(UniformInt(rng, 1, 4), UniformInt(rng, 2, 4), rng);
    VersionSpace v = VersionSpace::All(c);
    // random subspace
    std::vector<int> keep;
    for (int h = 0; h < c->size(); ++h) {
      if (rng() & 1) keep.push_back(h);
    }
    VersionSpace sub = VersionSpace::FromIndices(c, keep);
    for (const VersionSpace& s : {v, sub}) {
      for (Instance x = 0; x < c->num_instances(); ++x) {
        int total = 0;
        for (Label y = 0; y < c->num_labels(); ++y) {
          VersionSpace eq = RestrictEq(s, x, y);
          VersionSpace ne = RestrictNe(s, x, y);
          CHECK(eq.IsSubsetOf(s));
          CHECK(ne.IsSubsetOf(s));
          CHECK(eq.size() + ne.size() == s.size());
          for (Label y2 = y + 1; y2 < c->num_labels(); ++y2) {
            CHECK(RestrictEq(eq, x, y2).empty());
          }
          total += eq.size();
        }
        CHECK(total == s.size());
      }
    }
  }
}

TEST_CASE("is_realizable and class_error examples") {
  Rng rng(3);
  CHECK(IsRealizable(VersionSpace::All(FullClass(1, 3)), RandomSequence(1, 3, 1, rng)));

  auto consts = FullClass(1, 2);
  const int c0[] = {0};
  VersionSpace single = VersionSpace::FromIndices(consts, c0);
  LabeledSequence one(1, 2);
  one.Append(0, 1);
  CHECK_FALSE(IsRealizable(single, one));

  LabeledSequence three(1, 2);
  three.Append(0, 1);
  three.Append(0, 0);
  three.Append(0, 1);
  CHECK(ClassError(single, three) == 2);

  LabeledSequence both(1, 2);
  both.Append(0, 0);
  both.Append(0, 1);
  CHECK(ClassError(VersionSpace::All(consts), both) == 1);

  VersionSpace none = VersionSpace::None(consts);
  CHECK(IsRealizable(none, LabeledSequence(1, 2)));
  CHECK_FALSE(IsRealizable(none, one));
  CHECK_THROWS_AS(ClassError(none, one), std::invalid_argument);

  CHECK_THROWS_AS(IsRealizable(single, LabeledSequence(2, 2)), std::invalid_argument);
}

TEST_CASE("full class realizes every sequence") {
  Rng rng(8);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 2; k <= 3; ++k) {
      VersionSpace all = VersionSpace::All(FullClass(n, k));
      for (int i = 0; i < 20; ++i) {
        // Consistent per instance: allowed sets at the same x must intersect.
        LabeledSequence z(n, k);
        std::vector<Label> f(n);
        for (auto& y : f) y = UniformInt(rng, 0, k - 1);
        for (int t = 0; t < 8; ++t) {
          const Instance x = UniformInt(rng, 0, n - 1);
          LabelSet s = LabelSet::Single(f[x]);
          s.Insert(UniformInt(rng, 0, k - 1));
          z.Append(x, s);
        }
        CHECK(IsRealizable(all, z));
        CHECK(ClassError(all, z) == 0);
      }
    }
  }
}

TEST_CASE("class_error is zero exactly when realizable") {
  Rng rng(21);
  int checked = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = UniformInt(rng, 1, 3);
    const int k = UniformInt(rng, 2, 3);
    auto c = RandomClass(n, k, rng);
    REQUIRE(c->size() <= 64);
    VersionSpace v = VersionSpace::All(c);
    for (int T = 0; T <= 8; ++T) {
      LabeledSequence z = RandomSequence(n, k, T, rng);
      const int err = ClassError(v, z);
      CHECK(err == NaiveClassError(v, z));
      CHECK((err == 0) == IsRealizable(v, z));
      for (int h = 0; h < c->size(); ++h) {
        CHECK(HypothesisError(*c, h, z) == NaiveError(*c, h, z));
      }
      ++checked;
    }
  }
  CHECK(checked == 200 * 9);
}

TEST_CASE("label sets") {
  LabelSet s;
  CHECK(s.empty());
  s.Insert(3);
  s.Insert(1);
  CHECK(s.size() == 2);
  CHECK(s.Min() == 1);
  CHECK(s.ToVector() == std::vector<Label>{1, 3});
  s.Erase(1);
  CHECK(s == LabelSet::Single(3));
  CHECK(LabelSet::All(4).size() == 4);
  CHECK(LabelSet::All(32).size() == 32);
}

TEST_CASE("bitsets across word boundaries") {
  for (int size : {1, 63, 64, 65, 130}) {
    HypothesisBits b(size);
    CHECK(b.None());
    CHECK(b.First() == -1);
    b.SetAll();
    CHECK(b.Count() == size);
    b.Reset(0);
    CHECK(b.First() == (size > 1 ? 1 : -1));
    HypothesisBits c(size);
    c.Set(size - 1);
    CHECK(c.IsSubsetOf(b) == (size > 1));
    CHECK((b & c).Count() == (size > 1 ? 1 : 0));
    CHECK((b | c).Count() == (size > 1 ? size - 1 : 1));
    CHECK(b.AndNot(c).Count() == std::max(size - 2, 0));
  }
}

}  // namespace
}  // namespace banditlab
