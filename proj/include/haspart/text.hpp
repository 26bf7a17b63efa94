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

#ifndef HASPART_TEXT_HPP_
#define HASPART_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace haspart {
namespace text {

// Whitespace split with leading/trailing ASCII punctuation detached as
// separate tokens. "Dogs have tails." -> {"Dogs", "have", "tails", "."}
std::vector<std::string> Tokenize(std::string_view s);

std::string Lower(std::string_view s);

bool IsPunct(std::string_view token);

// Rule-based singularization: ies->y, es stripped after sibilant stems,
// trailing s stripped otherwise. Words on the exception list (species,
// glasses, ...) are returned unchanged. Input is expected lowercased.
std::string Singularize(std::string_view word);

std::string Join(const std::vector<std::string>& tokens, std::string_view sep = " ");

// Lowercased, per-token singularized form of a (possibly multiword) name.
// This is the canonical matching key used by lexicons and the corpus index.
std::string MatchKey(std::string_view name);

// Shortest decimal form that round-trips the double exactly.
std::string FormatDouble(double v);

}  // namespace text
}  // namespace haspart

#endif  // HASPART_TEXT_HPP_
