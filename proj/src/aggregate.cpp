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

#include "haspart/aggregate.hpp"

namespace haspart {

namespace {

struct Group {
  NormalizedEntity whole;
  NormalizedEntity part;
  double score_sum = 0.0;
  int count = 0;
  double best_score = -1.0;
  std::string best_support;
  std::set<std::string> support;
  std::map<std::string, int> quantifiers;
  std::map<std::string, int> modifiers;
};

void RecordMetadata(Group& g, const NormalizedEntity& e) {
  if (e.quantifier) ++g.quantifiers[*e.quantifier];
  for (const auto& m : e.modifiers) ++g.modifiers[m];
}

}  // namespace

std::vector<HasPartTuple> AggregateTuples(const std::vector<RawTuple>& raw,
                                          const QuantifierLexicon& quantifiers,
                                          const TitleLexicon& titles) {
  std::map<std::pair<std::string, std::string>, Group> groups;
  for (const auto& t : raw) {
    NormalizedEntity whole = NormalizeEntity(t.whole_text, quantifiers, titles);
    NormalizedEntity part = NormalizeEntity(t.part_text, quantifiers, titles);
    auto key = std::make_pair(whole.name, part.name);
    Group& g = groups[key];
    if (g.count == 0) {
      g.whole = whole;
      g.part = part;
      // The group key carries no per-mention metadata.
      g.whole.quantifier.reset();
      g.whole.modifiers.clear();
      g.part.quantifier.reset();
      g.part.modifiers.clear();
    }
    g.score_sum += t.score;
    ++g.count;
    g.support.insert(t.sentence_id);
    if (t.score > g.best_score ||
        (t.score == g.best_score && t.sentence_id < g.best_support)) {
      g.best_score = t.score;
      g.best_support = t.sentence_id;
    }
    RecordMetadata(g, whole);
    RecordMetadata(g, part);
  }

  std::vector<HasPartTuple> out;
  out.reserve(groups.size());
  for (auto& [key, g] : groups) {
    HasPartTuple t;
    t.whole = std::move(g.whole);
    t.part = std::move(g.part);
    t.score = g.score_sum / g.count;
    t.count = g.count;
    t.support = std::move(g.support);
    t.best_support = std::move(g.best_support);
    t.quantifiers = std::move(g.quantifiers);
    t.modifiers = std::move(g.modifiers);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<HasPartTuple> ApplyThreshold(const std::vector<HasPartTuple>& tuples,
                                         double cutoff) {
  std::vector<HasPartTuple> out;
  for (const auto& t : tuples) {
    if (t.score > cutoff) out.push_back(t);
  }
  return out;
}

std::vector<YieldRow> YieldReport(const std::vector<HasPartTuple>& tuples,
                                  const std::vector<double>& cutoffs) {
  std::vector<YieldRow> rows;
  for (double c : cutoffs) {
    int n = 0;
    for (const auto& t : tuples) {
      if (t.score > c) ++n;
    }
    rows.push_back({c, n});
  }
  return rows;
}

}  // namespace haspart
