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

#include "haspart/text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace haspart {
namespace text {

namespace {

bool IsPunctChar(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

const std::unordered_set<std::string>& PluralExceptions() {
  static const std::unordered_set<std::string> kExceptions = {
      "species", "series", "glasses", "scissors", "physics", "mathematics",
      "news",    "molasses", "lens",   "iris",    "gas",     "bus",
      "is",      "this",   "its",     "has",     "as",      "us",
      "was",     "his",    "yes",     "thus",    "does",    "goes",
      "always",  "perhaps", "pants",  "clothes",
  };
  return kExceptions;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    std::string_view word = s.substr(i, j - i);
    // Detach leading punctuation.
    size_t lead = 0;
    while (lead < word.size() && IsPunctChar(word[lead])) ++lead;
    if (lead == word.size()) {
      // All punctuation: each char is its own token.
      for (char c : word) out.emplace_back(1, c);
      i = j;
      continue;
    }
    size_t trail = word.size();
    while (trail > lead && IsPunctChar(word[trail - 1])) --trail;
    for (size_t k = 0; k < lead; ++k) out.emplace_back(1, word[k]);
    out.emplace_back(word.substr(lead, trail - lead));
    for (size_t k = trail; k < word.size(); ++k) out.emplace_back(1, word[k]);
    i = j;
  }
  return out;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsPunct(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (!IsPunctChar(c)) return false;
  }
  return true;
}

std::string Singularize(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  if (PluralExceptions().count(w)) return w;
  if (EndsWith(w, "ies") && w.size() > 3) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "es") && w.size() > 3) {
    std::string_view stem(w.data(), w.size() - 2);
    if (EndsWith(stem, "s") || EndsWith(stem, "x") || EndsWith(stem, "z") ||
        EndsWith(stem, "ch") || EndsWith(stem, "sh")) {
      return std::string(stem);
    }
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss")) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

std::string Join(const std::vector<std::string>& tokens, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += sep;
    out += tokens[i];
  }
  return out;
}

std::string MatchKey(std::string_view name) {
  std::vector<std::string> tokens = Tokenize(Lower(name));
  std::vector<std::string> keep;
  for (auto& t : tokens) {
    if (IsPunct(t)) continue;
    keep.push_back(Singularize(t));
  }
  return Join(keep);
}

std::string FormatDouble(double v) {
  std::array<char, 64> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace text
}  // namespace haspart
