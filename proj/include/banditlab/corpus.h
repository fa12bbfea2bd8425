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

#ifndef BANDITLAB_CORPUS_H_
#define BANDITLAB_CORPUS_H_

#include <vector>

#include "banditlab/hypothesis.h"
#include "banditlab/rng.h"

// Standard hypothesis classes used by tests, presets and the CLI.

namespace banditlab {

// Y^X for |X| = n, |Y| = k. Row r maps x to digit x of r in base k.
ClassPtr FullClass(int n, int k);

// All f : [delta] x [k] -> [k] with f(j, .) a bijection for every j.
// Instance (j, m) is encoded as j * k + m.
ClassPtr PermutationClass(int delta, int k);

inline Instance PermutationInstance(int j, int m, int k) { return j * k + m; }

// A random nonempty subset of Y^X, each row kept with probability 1/2.
ClassPtr RandomClass(int n, int k, Rng& rng);

// Every nonempty subset of the rows of `full`, as version spaces of it.
// Requires full->size() <= 24.
std::vector<VersionSpace> AllNonemptySubspaces(const ClassPtr& full);

// Copies a version space into a standalone class (rows in index order).
ClassPtr Materialize(const VersionSpace& v, std::string name);

}  // namespace banditlab

#endif  // BANDITLAB_CORPUS_H_
