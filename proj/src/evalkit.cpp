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

#include "haspart/evalkit.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "haspart/text.hpp"

namespace haspart {

namespace {

// Singularized lowercased content token keys of a sentence or name.
std::vector<std::string> TokenKeys(const std::string& s) {
  std::vector<std::string> keys;
  for (const auto& t : text::Tokenize(text::Lower(s))) {
    if (text::IsPunct(t)) continue;
    keys.push_back(text::Singularize(t));
  }
  return keys;
}

bool ContainsSubsequence(const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < needle.size(); ++j) {
      if (haystack[i + j] != needle[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

VocabList VocabList::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  VocabList v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    v.Add(line);
  }
  return v;
}

void VocabList::Add(const std::string& word) { words_.insert(text::Lower(word)); }

bool VocabList::Contains(const std::string& word) const {
  std::string w = text::Lower(word);
  return words_.count(w) > 0 || words_.count(text::Singularize(w)) > 0;
}

std::set<std::string> DefaultEvalStopwords() {
  return {"a", "an", "the", "of", "to", "in", "on", "and", "or", "for", "with"};
}

bool NameInVocab(const std::string& name, const VocabList& vocab,
                 const std::set<std::string>& stopwords,
                 const QuantifierLexicon& quantifiers) {
  int content = 0;
  for (const auto& t : text::Tokenize(text::Lower(name))) {
    if (text::IsPunct(t)) continue;
    if (stopwords.count(t) || quantifiers.Contains(t)) continue;
    ++content;
    if (!vocab.Contains(t)) return false;
  }
  return content > 0;
}

VocabYield ComputeVocabYield(const KnowledgeBase& kb, const VocabList& vocab,
                             const std::set<std::string>& stopwords,
                             const QuantifierLexicon& quantifiers) {
  VocabYield y;
  for (const auto& t : kb.tuples) {
    ++y.total;
    if (NameInVocab(t.whole.name, vocab, stopwords, quantifiers) &&
        NameInVocab(t.part.name, vocab, stopwords, quantifiers))
      ++y.in_vocab;
  }
  return y;
}

DistinctCounts ComputeDistinctCounts(const KnowledgeBase& kb,
                                     const VocabList& vocab,
                                     const std::set<std::string>& stopwords,
                                     const QuantifierLexicon& quantifiers) {
  std::set<std::string> wholes, parts;
  for (const auto& t : kb.tuples) {
    if (!NameInVocab(t.whole.name, vocab, stopwords, quantifiers) ||
        !NameInVocab(t.part.name, vocab, stopwords, quantifiers))
      continue;
    wholes.insert(text::Lower(t.whole.name));
    parts.insert(text::Lower(t.part.name));
  }
  return {static_cast<int>(wholes.size()), static_cast<int>(parts.size())};
}

CorpusIndex CorpusIndex::Build(const std::vector<GenericSentence>& corpus) {
  CorpusIndex index;
  for (const auto& s : corpus) {
    std::vector<std::string> keys = TokenKeys(s.text);
    index.sentences_[s.id] = keys;
    for (size_t i = 0; i < keys.size(); ++i) {
      index.unigrams_[keys[i]].insert(s.id);
      if (i + 1 < keys.size())
        index.bigrams_[keys[i] + " " + keys[i + 1]].insert(s.id);
    }
  }
  return index;
}

std::set<std::string> CorpusIndex::Lookup(const std::string& name) const {
  std::vector<std::string> keys = TokenKeys(name);
  if (keys.empty()) return {};
  if (keys.size() == 1) {
    auto it = unigrams_.find(keys[0]);
    return it == unigrams_.end() ? std::set<std::string>{} : it->second;
  }
  if (keys.size() == 2) {
    auto it = bigrams_.find(keys[0] + " " + keys[1]);
    return it == bigrams_.end() ? std::set<std::string>{} : it->second;
  }
  // Longer phrases: intersect unigram postings, then verify contiguity.
  auto it = unigrams_.find(keys[0]);
  if (it == unigrams_.end()) return {};
  std::set<std::string> candidates = it->second;
  for (size_t i = 1; i < keys.size() && !candidates.empty(); ++i) {
    auto pit = unigrams_.find(keys[i]);
    if (pit == unigrams_.end()) return {};
    std::set<std::string> narrowed;
    std::set_intersection(candidates.begin(), candidates.end(),
                          pit->second.begin(), pit->second.end(),
                          std::inserter(narrowed, narrowed.begin()));
    candidates = std::move(narrowed);
  }
  std::set<std::string> out;
  for (const auto& id : candidates) {
    if (ContainsSubsequence(sentences_.at(id), keys)) out.insert(id);
  }
  return out;
}

bool CorpusIndex::CoMentioned(const std::string& a, const std::string& b) const {
  std::set<std::string> in_a = Lookup(a);
  if (in_a.empty()) return false;
  std::set<std::string> in_b = Lookup(b);
  for (const auto& id : in_a) {
    if (in_b.count(id)) return true;
  }
  return false;
}

SalienceResult SalienceRate(const KnowledgeBase& kb, const CorpusIndex& index,
                            size_t sample_size, unsigned seed) {
  SalienceResult result;
  std::vector<size_t> order(kb.tuples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (sample_size >= kb.tuples.size()) {
    result.sample_truncated = sample_size > kb.tuples.size();
  } else {
    std::mt19937 rng(seed);
    // Partial Fisher-Yates: the first sample_size slots are the sample.
    for (size_t i = 0; i < sample_size; ++i) {
      std::uniform_int_distribution<size_t> pick(i, order.size() - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    order.resize(sample_size);
  }
  for (size_t i : order) {
    const HasPartTuple& t = kb.tuples[i];
    ++result.sampled;
    if (index.CoMentioned(t.whole.name, t.part.name)) ++result.salient;
  }
  return result;
}

std::vector<const HasPartTuple*> PrecisionSample(const KnowledgeBase& kb,
                                                 size_t n, unsigned seed) {
  std::vector<size_t> order(kb.tuples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (n < order.size()) {
    std::mt19937 rng(seed);
    for (size_t i = 0; i < n; ++i) {
      std::uniform_int_distribution<size_t> pick(i, order.size() - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    order.resize(n);
  }
  std::vector<const HasPartTuple*> sample;
  sample.reserve(order.size());
  for (size_t i : order) sample.push_back(&kb.tuples[i]);
  return sample;
}

void WritePrecisionSample(const std::vector<const HasPartTuple*>& sample,
                          const std::vector<GenericSentence>& corpus,
                          const std::string& path) {
  std::unordered_map<std::string, const GenericSentence*> by_id;
  for (const auto& s : corpus) by_id[s.id] = &s;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# columns whole part score support_sentences judgment\n";
  for (const HasPartTuple* t : sample) {
    std::string sentences;
    for (const auto& id : t->support) {
      auto it = by_id.find(id);
      if (it == by_id.end()) continue;
      if (!sentences.empty()) sentences += " | ";
      sentences += it->second->text;
    }
    out << t->whole.name << "\t" << t->part.name << "\t"
        << text::FormatDouble(t->score) << "\t" << sentences << "\t\n";
  }
}

}  // namespace haspart
