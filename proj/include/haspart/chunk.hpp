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

#ifndef HASPART_CHUNK_HPP_
#define HASPART_CHUNK_HPP_

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "haspart/corpus.hpp"

namespace haspart {

// Coarse tagset: DET ADJ NOUN VERB ADP PRON ADV NUM CONJ PART PUNCT X

// Closed-class lexicon plus suffix rules, noun as the default open-class
// tag. A user lexicon file (word<TAB>tag per line) overrides the built-ins.
class PosTagger {
 public:
  PosTagger();

  void LoadLexicon(const std::string& path);
  void AddEntry(const std::string& word, const std::string& tag);

  // Tag one token. Returns "NOUN" for unknown open-class words.
  std::string Tag(const std::string& token) const;

  // True if the word hits the lexicon (user or built-in), as opposed to
  // falling through to suffix rules or the noun default.
  bool InLexicon(const std::string& token) const;

 private:
  std::unordered_map<std::string, std::string> lexicon_;
};

struct NounChunk {
  std::string sentence_id;
  int start = 0;  // token index, inclusive
  int end = 0;    // token index, exclusive
  std::string text;

  bool operator==(const NounChunk&) const = default;
};

struct UntaggableSentenceError : std::runtime_error {
  explicit UntaggableSentenceError(const std::string& id)
      : std::runtime_error("untaggable sentence: " + id) {}
};

// Tags for a sentence: record-provided tags when present, else the tagger.
// Throws UntaggableSentenceError when no tags are provided and the tagger
// lexicon misses every token.
std::vector<std::string> SentencePosTags(const GenericSentence& sentence,
                                         const PosTagger& tagger);

// Maximal non-overlapping base noun phrases, left to right. Grammar:
// optional determiner, zero or more adjective/noun modifiers, ending in a
// noun; longest match wins, ties leftmost.
std::vector<NounChunk> ExtractChunks(const GenericSentence& sentence,
                                     const PosTagger& tagger);

std::vector<NounChunk> ExtractChunks(const std::string& sentence_id,
                                     const std::vector<std::string>& tokens,
                                     const std::vector<std::string>& tags);

}  // namespace haspart

#endif  // HASPART_CHUNK_HPP_
