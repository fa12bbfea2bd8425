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


#ifndef BANDITLAB_GUESSING_H_
#define BANDITLAB_GUESSING_H_

#include <memory>
#include <string>
#include <vector>

#include "banditlab/rng.h"

// The single-instance guessing game: U is uniform on [0, k), the guesser has
// k-1 rounds and learns only whether each guess equals U.

namespace banditlab {

class Guesser {
 public:
  virtual ~Guesser() = default;
  virtual std::string name() const = 0;
  virtual bool deterministic() const = 0;
  virtual std::unique_ptr<Guesser> Clone() const = 0;

  // Called once per game before the first guess.
  virtual void Reset(int num_labels, Rng& rng) = 0;
  virtual int Guess(Rng& rng) = 0;
  virtual void Observe(int guess, bool correct) = 0;
};

// Always 0.
std::unique_ptr<Guesser> MakeConstantGuesser();
// Uniform every round, ignoring feedback.
std::unique_ptr<Guesser> MakeRandomGuesser();
// 0, 1, 2, ... ignoring feedback.
std::unique_ptr<Guesser> MakeCyclingGuesser();
// 0, 1, 2, ... until a hit, then repeats the hit.
std::unique_ptr<Guesser> MakeNonRepeatingGuesser();
// Like the non-repeating guesser over a fresh random order each game.
std::unique_ptr<Guesser> MakeShuffledGuesser();

// Every guesser above, in a fixed order.
std::vector<std::unique_ptr<Guesser>> GuesserZoo();

// Plays one game; returns the number of wrong guesses R.
int PlayGuessingGame(int num_labels, Guesser& guesser, Rng& rng);

// E[R] for a deterministic guesser, averaging over the k values of U.
double ExactGuessingExpectation(int num_labels, const Guesser& guesser);

// (k - 1) / 2
double GuessingFloor(int num_labels);

}  // namespace banditlab

#endif  // BANDITLAB_GUESSING_H_
