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

#include "haspart/corpus.hpp"

#include <fstream>

#include "haspart/text.hpp"
#include "json.hpp"

namespace haspart {

using nlohmann::json;

GenericSentence ParseSentenceRecord(const std::string& line, int line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw MalformedRecordError(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedRecordError(line_number, "record is not an object");
  GenericSentence s;
  if (!j.contains("id") || !j["id"].is_string())
    throw MalformedRecordError(line_number, "missing or non-string field 'id'");
  if (!j.contains("text") || !j["text"].is_string())
    throw MalformedRecordError(line_number, "missing or non-string field 'text'");
  if (!j.contains("confidence") || !j["confidence"].is_number())
    throw MalformedRecordError(line_number, "missing or non-numeric field 'confidence'");
  s.id = j["id"].get<std::string>();
  s.text = j["text"].get<std::string>();
  s.confidence = j["confidence"].get<double>();
  if (s.confidence < 0.0 || s.confidence > 1.0)
    throw MalformedRecordError(line_number, "confidence outside [0,1]");
  if (j.contains("tokens")) {
    if (!j["tokens"].is_array())
      throw MalformedRecordError(line_number, "field 'tokens' is not an array");
    for (const auto& t : j["tokens"]) {
      if (!t.is_string())
        throw MalformedRecordError(line_number, "non-string token");
      s.tokens.push_back(t.get<std::string>());
    }
  }
  if (j.contains("pos")) {
    if (!j["pos"].is_array())
      throw MalformedRecordError(line_number, "field 'pos' is not an array");
    for (const auto& t : j["pos"]) {
      if (!t.is_string()) throw MalformedRecordError(line_number, "non-string pos tag");
      s.pos.push_back(t.get<std::string>());
    }
    if (s.tokens.empty())
      throw MalformedRecordError(line_number, "'pos' present without 'tokens'");
    if (s.pos.size() != s.tokens.size())
      throw MalformedRecordError(line_number, "'pos' length differs from 'tokens'");
  }
  return s;
}

LoadResult LoadSentences(const std::string& path, bool skip_malformed) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  LoadResult result;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      result.sentences.push_back(ParseSentenceRecord(line, line_number));
    } catch (const MalformedRecordError& e) {
      if (!skip_malformed) throw;
      result.issues.push_back({e.line_number, e.reason});
    }
  }
  return result;
}

std::string SentenceRecordToJson(const GenericSentence& s) {
  json j;
  j["id"] = s.id;
  j["text"] = s.text;
  j["confidence"] = s.confidence;
  if (!s.tokens.empty()) j["tokens"] = s.tokens;
  if (!s.pos.empty()) j["pos"] = s.pos;
  return j.dump();
}

void WriteSentences(const std::vector<GenericSentence>& sentences,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& s : sentences) out << SentenceRecordToJson(s) << "\n";
}

std::vector<GenericSentence> FilterGenerics(
    const std::vector<GenericSentence>& sentences, double threshold) {
  std::vector<GenericSentence> out;
  for (const auto& s : sentences) {
    if (s.confidence > threshold) out.push_back(s);
  }
  return out;
}

std::vector<std::string> SentenceTokens(const GenericSentence& s) {
  if (!s.tokens.empty()) return s.tokens;
  return text::Tokenize(s.text);
}

}  // namespace haspart
