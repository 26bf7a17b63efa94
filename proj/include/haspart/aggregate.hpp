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

#ifndef HASPART_AGGREGATE_HPP_
#define HASPART_AGGREGATE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "haspart/classify.hpp"
#include "haspart/normalize.hpp"

namespace haspart {

// A merged, scored (whole, part) relation. score is the arithmetic mean of
// the pooled per-sentence scores; count is the number pooled.
struct HasPartTuple {
  NormalizedEntity whole;
  NormalizedEntity part;
  double score = 0.0;
  int count = 0;
  std::set<std::string> support;           // sentence ids
  std::string best_support;                // support id with the top raw score
  std::map<std::string, int> quantifiers;  // multiset, both arguments
  std::map<std::string, int> modifiers;    // multiset, both arguments
  std::optional<std::string> whole_sense;
  std::optional<std::string> part_sense;
  std::optional<std::string> whole_link;
  std::optional<std::string> part_link;

  bool operator==(const HasPartTuple&) const = default;
};

// Normalizes raw tuples and merges duplicates under the key
// (whole.name, part.name), average-pooling their scores. Output is sorted
// by key, so aggregation is order-independent.
std::vector<HasPartTuple> AggregateTuples(const std::vector<RawTuple>& raw,
                                          const QuantifierLexicon& quantifiers,
                                          const TitleLexicon& titles);

// Keeps tuples with pooled score strictly greater than cutoff.
std::vector<HasPartTuple> ApplyThreshold(const std::vector<HasPartTuple>& tuples,
                                         double cutoff = 0.9985);

struct YieldRow {
  double cutoff;
  int yield;
};

// Per-cutoff yields for an ascending cutoff grid.
std::vector<YieldRow> YieldReport(const std::vector<HasPartTuple>& tuples,
                                  const std::vector<double>& cutoffs);

}  // namespace haspart

#endif  // HASPART_AGGREGATE_HPP_
