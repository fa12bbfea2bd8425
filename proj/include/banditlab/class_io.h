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

#ifndef BANDITLAB_CLASS_IO_H_
#define BANDITLAB_CLASS_IO_H_

#include <string>
#include <string_view>

#include "banditlab/hypothesis.h"

// JSON documents for classes and sequences.
//
// Class file:
//   {"name": "...", "n": 2, "k": 3, "rows": [[0, 1], [2, 2]]}
// Sequence file:
//   [{"x": 0, "allowed": [1, 2]}, {"x": 1, "allowed": [0]}]
//
// Serialize* emits a canonical layout (one row or record per line) that
// parses back to an equal value and re-serializes to the same bytes.
// Malformed input throws std::invalid_argument.

namespace banditlab {

ClassPtr ParseClass(std::string_view text);
std::string SerializeClass(const FiniteClass& klass);

LabeledSequence ParseSequence(std::string_view text, int num_instances,
                              int num_labels);
std::string SerializeSequence(const LabeledSequence& z);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

ClassPtr LoadClassFile(const std::string& path);

}  // namespace banditlab

#endif  // BANDITLAB_CLASS_IO_H_
