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

#ifndef HASPART_NORMALIZE_HPP_
#define HASPART_NORMALIZE_HPP_

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace haspart {

// Quantifier word list, matched case-insensitively against the first token
// of an entity name.
class QuantifierLexicon {
 public:
  // Default contents: all, some, most, many, few, several, each, every, no.
  static QuantifierLexicon Default();
  static QuantifierLexicon FromFile(const std::string& path);

  bool Contains(const std::string& word) const;
  void Add(const std::string& word);
  const std::set<std::string>& words() const { return words_; }

 private:
  std::set<std::string> words_;  // lowercased
};

// Title set matched case-insensitively on singularized forms, with an
// optional disambiguation-page flag per title.
class TitleLexicon {
 public:
  TitleLexicon() = default;
  // One title per line; a trailing tab-separated "D" marks a
  // disambiguation page.
  static TitleLexicon FromFile(const std::string& path);

  void Add(const std::string& title, bool disambiguation = false);
  // Returns the stored title string on a hit.
  std::optional<std::string> Find(const std::string& name) const;
  bool IsDisambiguation(const std::string& title) const;
  bool empty() const { return titles_.empty(); }
  size_t size() const { return titles_.size(); }

 private:
  struct Entry {
    std::string title;
    bool disambiguation;
  };
  std::unordered_map<std::string, Entry> titles_;  // keyed by match key
};

struct NormalizedEntity {
  std::string name;
  std::optional<std::string> quantifier;
  std::vector<std::string> modifiers;
  std::optional<std::string> title_hit;

  bool operator==(const NormalizedEntity&) const = default;
};

// If the first token is a quantifier it is removed and returned; only the
// first token is ever checked.
std::pair<std::string, std::optional<std::string>> StripQuantifier(
    const std::string& raw, const QuantifierLexicon& quantifiers);

struct PeelResult {
  std::string name;
  std::vector<std::string> modifiers;
  std::optional<std::string> title_hit;
};

// Iteratively checks the name against the title lexicon, moving the first
// word to the modifier list on each miss. If no suffix ever matches, the
// original full name is returned with no modifiers.
PeelResult PeelModifiers(const std::string& name, const TitleLexicon& titles);

// Quantifier strip + head-token singularization + modifier peeling. The
// canonical name is lowercased with a singular head token.
NormalizedEntity NormalizeEntity(const std::string& raw,
                                 const QuantifierLexicon& quantifiers,
                                 const TitleLexicon& titles);

}  // namespace haspart

#endif  // HASPART_NORMALIZE_HPP_
