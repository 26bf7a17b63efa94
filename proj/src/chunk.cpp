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

#include "haspart/chunk.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "haspart/text.hpp"

namespace haspart {

namespace {

struct BuiltinEntry {
  const char* word;
  const char* tag;
};

// Closed-class words plus frequent verbs and adjectives. Open-class words
// not listed here fall through to suffix rules, then default to NOUN.
constexpr BuiltinEntry kBuiltins[] = {
    // determiners and quantifiers
    {"a", "DET"}, {"an", "DET"}, {"the", "DET"}, {"this", "DET"},
    {"that", "DET"}, {"these", "DET"}, {"those", "DET"}, {"all", "DET"},
    {"some", "DET"}, {"most", "DET"}, {"many", "DET"}, {"few", "DET"},
    {"several", "DET"}, {"each", "DET"}, {"every", "DET"}, {"no", "DET"},
    {"any", "DET"}, {"both", "DET"},
    // pronouns
    {"it", "PRON"}, {"they", "PRON"}, {"he", "PRON"}, {"she", "PRON"},
    {"we", "PRON"}, {"you", "PRON"}, {"i", "PRON"}, {"them", "PRON"},
    {"their", "PRON"}, {"its", "PRON"}, {"his", "PRON"}, {"her", "PRON"},
    {"our", "PRON"}, {"your", "PRON"}, {"who", "PRON"}, {"which", "PRON"},
    {"what", "PRON"}, {"something", "PRON"}, {"one", "PRON"},
    // adpositions
    {"in", "ADP"}, {"on", "ADP"}, {"at", "ADP"}, {"of", "ADP"},
    {"from", "ADP"}, {"with", "ADP"}, {"by", "ADP"}, {"for", "ADP"},
    {"into", "ADP"}, {"over", "ADP"}, {"under", "ADP"}, {"through", "ADP"},
    {"between", "ADP"}, {"during", "ADP"}, {"about", "ADP"},
    {"against", "ADP"}, {"among", "ADP"}, {"around", "ADP"},
    {"within", "ADP"}, {"without", "ADP"}, {"near", "ADP"}, {"inside", "ADP"},
    {"along", "ADP"}, {"across", "ADP"},
    // conjunctions and particles
    {"and", "CONJ"}, {"or", "CONJ"}, {"but", "CONJ"}, {"nor", "CONJ"},
    {"so", "CONJ"}, {"yet", "CONJ"}, {"because", "CONJ"},
    {"although", "CONJ"}, {"while", "CONJ"}, {"when", "CONJ"},
    {"if", "CONJ"}, {"than", "CONJ"}, {"as", "CONJ"}, {"to", "PART"},
    // auxiliaries and common verbs
    {"is", "VERB"}, {"are", "VERB"}, {"was", "VERB"}, {"were", "VERB"},
    {"be", "VERB"}, {"been", "VERB"}, {"being", "VERB"}, {"am", "VERB"},
    {"have", "VERB"}, {"has", "VERB"}, {"had", "VERB"}, {"having", "VERB"},
    {"do", "VERB"}, {"does", "VERB"}, {"did", "VERB"}, {"can", "VERB"},
    {"could", "VERB"}, {"will", "VERB"}, {"would", "VERB"},
    {"shall", "VERB"}, {"should", "VERB"}, {"may", "VERB"},
    {"might", "VERB"}, {"must", "VERB"},
    {"contain", "VERB"}, {"contains", "VERB"}, {"consist", "VERB"},
    {"consists", "VERB"}, {"include", "VERB"}, {"includes", "VERB"},
    {"use", "VERB"}, {"uses", "VERB"}, {"eat", "VERB"}, {"eats", "VERB"},
    {"live", "VERB"}, {"lives", "VERB"}, {"grow", "VERB"}, {"grows", "VERB"},
    {"make", "VERB"}, {"makes", "VERB"}, {"help", "VERB"}, {"helps", "VERB"},
    {"breathe", "VERB"}, {"breathes", "VERB"}, {"swim", "VERB"},
    {"swims", "VERB"}, {"fly", "VERB"}, {"need", "VERB"}, {"needs", "VERB"},
    {"protect", "VERB"}, {"protects", "VERB"}, {"belong", "VERB"},
    {"belongs", "VERB"}, {"feed", "VERB"}, {"feeds", "VERB"},
    {"produce", "VERB"}, {"produces", "VERB"}, {"move", "VERB"},
    {"moves", "VERB"}, {"keep", "VERB"}, {"keeps", "VERB"},
    {"give", "VERB"}, {"gives", "VERB"},
    // common adjectives
    {"large", "ADJ"}, {"small", "ADJ"}, {"big", "ADJ"}, {"long", "ADJ"},
    {"short", "ADJ"}, {"strong", "ADJ"}, {"red", "ADJ"}, {"blue", "ADJ"},
    {"green", "ADJ"}, {"white", "ADJ"}, {"black", "ADJ"}, {"sharp", "ADJ"},
    {"soft", "ADJ"}, {"hard", "ADJ"}, {"thick", "ADJ"}, {"thin", "ADJ"},
    {"shiny", "ADJ"}, {"young", "ADJ"}, {"old", "ADJ"}, {"tiny", "ADJ"},
    {"warm", "ADJ"}, {"cold", "ADJ"}, {"wild", "ADJ"}, {"furry", "ADJ"},
    // adverbs and negation
    {"not", "ADV"}, {"very", "ADV"}, {"also", "ADV"}, {"often", "ADV"},
    {"usually", "ADV"}, {"sometimes", "ADV"}, {"never", "ADV"},
    {"always", "ADV"}, {"only", "ADV"}, {"quite", "ADV"}, {"too", "ADV"},
    {"well", "ADV"}, {"there", "ADV"}, {"here", "ADV"},
};

bool EndsWith(const std::string& s, const char* suffix) {
  std::string_view sv(suffix);
  return s.size() >= sv.size() && s.compare(s.size() - sv.size(), sv.size(), sv) == 0;
}

bool IsNumber(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != ',')
      return false;
  }
  return true;
}

}  // namespace

PosTagger::PosTagger() {
  for (const auto& e : kBuiltins) lexicon_.emplace(e.word, e.tag);
}

void PosTagger::LoadLexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string word, tag;
    if (ss >> word >> tag) lexicon_[text::Lower(word)] = tag;
  }
}

void PosTagger::AddEntry(const std::string& word, const std::string& tag) {
  lexicon_[text::Lower(word)] = tag;
}

bool PosTagger::InLexicon(const std::string& token) const {
  return lexicon_.count(text::Lower(token)) > 0;
}

std::string PosTagger::Tag(const std::string& token) const {
  if (text::IsPunct(token)) return "PUNCT";
  std::string w = text::Lower(token);
  auto it = lexicon_.find(w);
  if (it != lexicon_.end()) return it->second;
  if (IsNumber(w)) return "NUM";
  if (EndsWith(w, "ly") && w.size() > 3) return "ADV";
  if (EndsWith(w, "ing") && w.size() > 5) return "VERB";
  if (EndsWith(w, "ous") || EndsWith(w, "ful") || EndsWith(w, "ive") ||
      EndsWith(w, "less") || EndsWith(w, "able"))
    return "ADJ";
  return "NOUN";
}

std::vector<std::string> SentencePosTags(const GenericSentence& sentence,
                                         const PosTagger& tagger) {
  std::vector<std::string> tokens = SentenceTokens(sentence);
  if (sentence.has_pos()) return sentence.pos;
  bool any_known = false;
  for (const auto& t : tokens) {
    if (tagger.InLexicon(t)) {
      any_known = true;
      break;
    }
  }
  if (!any_known && !tokens.empty())
    throw UntaggableSentenceError(sentence.id);
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(tagger.Tag(t));
  return tags;
}

std::vector<NounChunk> ExtractChunks(const std::string& sentence_id,
                                     const std::vector<std::string>& tokens,
                                     const std::vector<std::string>& tags) {
  std::vector<NounChunk> chunks;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    const std::string& tag = tags[i];
    if (tag != "DET" && tag != "ADJ" && tag != "NOUN") {
      ++i;
      continue;
    }
    int k = (tag == "DET") ? i + 1 : i;
    int m = k;
    while (m < n && (tags[m] == "ADJ" || tags[m] == "NOUN")) ++m;
    // Chunk ends at the last noun within [k, m).
    int last_noun = -1;
    for (int p = k; p < m; ++p) {
      if (tags[p] == "NOUN") last_noun = p;
    }
    if (last_noun < 0) {
      ++i;
      continue;
    }
    NounChunk c;
    c.sentence_id = sentence_id;
    c.start = i;
    c.end = last_noun + 1;
    std::vector<std::string> span(tokens.begin() + i, tokens.begin() + c.end);
    c.text = text::Join(span);
    chunks.push_back(std::move(c));
    i = last_noun + 1;
  }
  return chunks;
}

std::vector<NounChunk> ExtractChunks(const GenericSentence& sentence,
                                     const PosTagger& tagger) {
  std::vector<std::string> tokens = SentenceTokens(sentence);
  std::vector<std::string> tags = SentencePosTags(sentence, tagger);
  return ExtractChunks(sentence.id, tokens, tags);
}

}  // namespace haspart
