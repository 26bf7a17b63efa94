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

#include "haspart/normalize.hpp"

#include <fstream>

#include "haspart/corpus.hpp"
#include "haspart/text.hpp"

namespace haspart {

QuantifierLexicon QuantifierLexicon::Default() {
  QuantifierLexicon q;
  for (const char* w :
       {"all", "some", "most", "many", "few", "several", "each", "every", "no"})
    q.words_.insert(w);
  return q;
}

QuantifierLexicon QuantifierLexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  QuantifierLexicon q;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    q.words_.insert(text::Lower(line));
  }
  return q;
}

bool QuantifierLexicon::Contains(const std::string& word) const {
  return words_.count(text::Lower(word)) > 0;
}

void QuantifierLexicon::Add(const std::string& word) {
  words_.insert(text::Lower(word));
}

TitleLexicon TitleLexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  TitleLexicon t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    bool disambig = false;
    std::string title = line;
    if (tab != std::string::npos) {
      disambig = line.substr(tab + 1) == "D";
      title = line.substr(0, tab);
    }
    t.Add(title, disambig);
  }
  return t;
}

void TitleLexicon::Add(const std::string& title, bool disambiguation) {
  titles_[text::MatchKey(title)] = {title, disambiguation};
}

std::optional<std::string> TitleLexicon::Find(const std::string& name) const {
  auto it = titles_.find(text::MatchKey(name));
  if (it == titles_.end()) return std::nullopt;
  return it->second.title;
}

bool TitleLexicon::IsDisambiguation(const std::string& title) const {
  auto it = titles_.find(text::MatchKey(title));
  return it != titles_.end() && it->second.disambiguation;
}

std::pair<std::string, std::optional<std::string>> StripQuantifier(
    const std::string& raw, const QuantifierLexicon& quantifiers) {
  std::vector<std::string> tokens = text::Tokenize(raw);
  if (tokens.size() >= 2 && quantifiers.Contains(tokens[0])) {
    std::string quant = text::Lower(tokens[0]);
    tokens.erase(tokens.begin());
    return {text::Join(tokens), quant};
  }
  return {raw, std::nullopt};
}

PeelResult PeelModifiers(const std::string& name, const TitleLexicon& titles) {
  std::vector<std::string> tokens = text::Tokenize(name);
  for (size_t k = 0; k < tokens.size(); ++k) {
    std::vector<std::string> rest(tokens.begin() + k, tokens.end());
    std::string candidate = text::Join(rest);
    if (auto hit = titles.Find(candidate)) {
      return {candidate,
              std::vector<std::string>(tokens.begin(), tokens.begin() + k),
              hit};
    }
  }
  // No suffix matched: keep the full name, no modifiers.
  return {name, {}, std::nullopt};
}

NormalizedEntity NormalizeEntity(const std::string& raw,
                                 const QuantifierLexicon& quantifiers,
                                 const TitleLexicon& titles) {
  auto [rest, quantifier] = StripQuantifier(raw, quantifiers);
  std::vector<std::string> tokens = text::Tokenize(text::Lower(rest));
  std::vector<std::string> words;
  for (auto& t : tokens) {
    if (text::IsPunct(t)) continue;
    words.push_back(std::move(t));
  }
  if (words.empty()) return {raw, quantifier, {}, std::nullopt};
  words.back() = text::Singularize(words.back());
  PeelResult peeled = PeelModifiers(text::Join(words), titles);

  NormalizedEntity entity;
  entity.name = peeled.name;
  entity.quantifier = quantifier;
  entity.modifiers = std::move(peeled.modifiers);
  entity.title_hit = std::move(peeled.title_hit);
  return entity;
}

}  // namespace haspart
