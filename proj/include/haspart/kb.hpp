// Copyright 2026 The hasPartKB Pipeline Authors.
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

#ifndef HASPART_KB_HPP_
#define HASPART_KB_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "haspart/aggregate.hpp"

namespace haspart {

struct KbHeader {
  std::string version = "haspart-kb v1";
  std::string corpus_id;
  std::map<std::string, std::string> thresholds;

  bool operator==(const KbHeader&) const = default;
};

struct KnowledgeBase {
  KbHeader header;
  std::vector<HasPartTuple> tuples;

  bool operator==(const KnowledgeBase&) const = default;
};

struct IoFailureError : std::runtime_error {
  explicit IoFailureError(const std::string& path)
      : std::runtime_error("io failure: " + path) {}
};
struct SchemaVersionMismatchError : std::runtime_error {
  explicit SchemaVersionMismatchError(const std::string& found)
      : std::runtime_error("unsupported KB schema version: " + found) {}
};

// Tab-separated flat file: '#'-prefixed header lines, then one tuple per
// row. Columns: whole, part, score, count, quantifiers, modifiers,
// support ids, best support id, sense ids, title links.
void WriteKbTsv(const KnowledgeBase& kb, const std::string& path);
KnowledgeBase ReadKbTsv(const std::string& path);

// Line-delimited structured format carrying the same fields as JSON.
void WriteKbJsonl(const KnowledgeBase& kb, const std::string& path);
KnowledgeBase ReadKbJsonl(const std::string& path);

// Tuples whose whole (resp. part) name matches, case-insensitively,
// sorted by descending score then name ascending.
std::vector<HasPartTuple> PartsOf(const KnowledgeBase& kb,
                                  const std::string& entity);
std::vector<HasPartTuple> WholesOf(const KnowledgeBase& kb,
                                   const std::string& entity);

}  // namespace haspart

#endif  // HASPART_KB_HPP_
