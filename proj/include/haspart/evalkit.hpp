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

#ifndef HASPART_EVALKIT_HPP_
#define HASPART_EVALKIT_HPP_

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "haspart/corpus.hpp"
#include "haspart/kb.hpp"
#include "haspart/normalize.hpp"

namespace haspart {

class VocabList {
 public:
  VocabList() = default;
  static VocabList FromFile(const std::string& path);  // one word per line

  void Add(const std::string& word);
  // A word is in-vocab if its lowercased or singularized form is listed.
  bool Contains(const std::string& word) const;
  bool empty() const { return words_.empty(); }

 private:
  std::set<std::string> words_;  // lowercased
};

std::set<std::string> DefaultEvalStopwords();

// True when every content token (non-quantifier, non-stopword) of the name
// is in the vocabulary. Names with no content tokens count as out of vocab.
bool NameInVocab(const std::string& name, const VocabList& vocab,
                 const std::set<std::string>& stopwords,
                 const QuantifierLexicon& quantifiers);

struct VocabYield {
  int total = 0;
  int in_vocab = 0;
};

VocabYield ComputeVocabYield(const KnowledgeBase& kb, const VocabList& vocab,
                             const std::set<std::string>& stopwords,
                             const QuantifierLexicon& quantifiers);

struct DistinctCounts {
  int wholes = 0;
  int parts = 0;
};

// Distinct whole and part names among the in-vocab tuples.
DistinctCounts ComputeDistinctCounts(const KnowledgeBase& kb,
                                     const VocabList& vocab,
                                     const std::set<std::string>& stopwords,
                                     const QuantifierLexicon& quantifiers);

// Inverted index from singularized token unigrams/bigrams to sentence ids,
// with the sentence store kept for longer-phrase verification.
class CorpusIndex {
 public:
  static CorpusIndex Build(const std::vector<GenericSentence>& corpus);

  // Sentence ids containing the name as a token-boundary match (on
  // singularized lowercased tokens).
  std::set<std::string> Lookup(const std::string& name) const;

  bool CoMentioned(const std::string& a, const std::string& b) const;
  size_t sentence_count() const { return sentences_.size(); }

 private:
  std::unordered_map<std::string, std::set<std::string>> unigrams_;
  std::unordered_map<std::string, std::set<std::string>> bigrams_;
  std::unordered_map<std::string, std::vector<std::string>> sentences_;  // id -> keys
};

struct SalienceResult {
  int sampled = 0;
  int salient = 0;
  bool sample_truncated = false;  // requested sample exceeded the KB size
  double percent() const {
    return sampled ? 100.0 * salient / sampled : 0.0;
  }
};

// A tuple is salient iff some indexed sentence co-mentions both entity
// names. Sampling is uniform without replacement, deterministic per seed.
SalienceResult SalienceRate(const KnowledgeBase& kb, const CorpusIndex& index,
                            size_t sample_size, unsigned seed);

// Uniform sample of n tuples without replacement for human judgment,
// written with support sentences and an empty judgment column.
std::vector<const HasPartTuple*> PrecisionSample(const KnowledgeBase& kb,
                                                 size_t n, unsigned seed);

void WritePrecisionSample(const std::vector<const HasPartTuple*>& sample,
                          const std::vector<GenericSentence>& corpus,
                          const std::string& path);

}  // namespace haspart

#endif  // HASPART_EVALKIT_HPP_
