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

#include "banditlab/class_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"

namespace banditlab {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(fmt::format("malformed document: {}", e.what()));
  }
}

int RequireInt(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    throw std::invalid_argument(
        fmt::format("missing or non-integer field '{}'", field));
  }
  return doc[field].get<int>();
}

std::string JoinInts(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  out += "]";
  return out;
}

}  // namespace

ClassPtr ParseClass(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw std::invalid_argument("class document must be an object");
  const int n = RequireInt(doc, "n");
  const int k = RequireInt(doc, "k");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw std::invalid_argument("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::invalid_argument("missing 'rows' array");
  }
  std::vector<std::vector<Label>> rows;
  rows.reserve(doc["rows"].size());
  for (const json& row : doc["rows"]) {
    if (!row.is_array()) throw std::invalid_argument("each row must be an array");
    std::vector<Label>& out = rows.emplace_back();
    for (const json& entry : row) {
      if (!entry.is_number_integer()) {
        throw std::invalid_argument("row entries must be integers");
      }
      out.push_back(entry.get<int>());
    }
  }
  return MakeClass(std::move(name), n, k, rows);
}

std::string SerializeClass(const FiniteClass& klass) {
  std::string out = "{\n";
  out += fmt::format("  \"name\": {},\n", json(klass.name()).dump());
  out += fmt::format("  \"n\": {},\n", klass.num_instances());
  out += fmt::format("  \"k\": {},\n", klass.num_labels());
  out += "  \"rows\": [\n";
  for (int h = 0; h < klass.size(); ++h) {
    auto row = klass.Row(h);
    out += "    " + JoinInts(std::vector<int>(row.begin(), row.end()));
    out += h + 1 < klass.size() ? ",\n" : "\n";
  }
  out += "  ]\n}\n";
  return out;
}

LabeledSequence ParseSequence(std::string_view text, int num_instances,
                              int num_labels) {
  const json doc = ParseJson(text);
  if (!doc.is_array()) throw std::invalid_argument("sequence document must be an array");
  LabeledSequence z(num_instances, num_labels);
  for (const json& record : doc) {
    if (!record.is_object()) throw std::invalid_argument("sequence records must be objects");
    const int x = RequireInt(record, "x");
    if (!record.contains("allowed") || !record["allowed"].is_array()) {
      throw std::invalid_argument("record missing 'allowed' array");
    }
    LabelSet allowed;
    for (const json& y : record["allowed"]) {
      if (!y.is_number_integer()) throw std::invalid_argument("labels must be integers");
      const int label = y.get<int>();
      if (label < 0 || label >= num_labels) {
        throw std::invalid_argument(
            fmt::format("label {} outside [0, {})", label, num_labels));
      }
      allowed.Insert(label);
    }
    if (x < 0 || x >= num_instances) {
      throw std::invalid_argument(
          fmt::format("instance {} outside [0, {})", x, num_instances));
    }
    if (allowed.empty()) throw std::invalid_argument("empty allowed label set");
    z.Append(x, allowed);
  }
  return z;
}

std::string SerializeSequence(const LabeledSequence& z) {
  if (z.empty()) return "[]\n";
  std::string out = "[\n";
  for (int t = 0; t < z.size(); ++t) {
    out += fmt::format("  {{\"x\": {}, \"allowed\": {}}}", z[t].x,
                       JoinInts(z[t].allowed.ToVector()));
    out += t + 1 < z.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

ClassPtr LoadClassFile(const std::string& path) {
  return ParseClass(ReadTextFile(path));
}

}  // namespace banditlab
