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


#ifndef BANDITLAB_PRESETS_H_
#define BANDITLAB_PRESETS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "banditlab/harness.h"

namespace banditlab {

struct ReportRow {
  std::string preset;
  std::string class_name;
  std::string learner;
  std::string adversary;
  int horizon = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double measured = 0.0;  // mean over trials
  double std_error = 0.0;
  Bound bound;
  bool pass = true;
  std::string note;
};

struct Report {
  std::string preset;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;

  // Every asserted row passed; rows with Direction::kInfo are not asserted.
  bool AllPass() const;
};

struct ExperimentOptions {
  std::uint64_t seed = 1;
  // Replaces the preset's Monte Carlo trial counts when set.
  std::optional<int> trials;
};

std::vector<std::string> PresetNames();

// Throws std::invalid_argument for an unknown preset.
Report RunExperiment(const std::string& preset, const ExperimentOptions& options);

// preset,class,learner,adversary,T,trials,seed,mean_mistakes,stderr,bound,
// direction,pass
std::string ReportCsv(const Report& report);
std::string ReportJson(const Report& report);

}  // namespace banditlab

#endif  // BANDITLAB_PRESETS_H_
