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

#ifndef HASPART_CORPUS_HPP_
#define HASPART_CORPUS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace haspart {

// A standalone generic statement with its classifier confidence.
struct GenericSentence {
  std::string id;
  std::string text;
  double confidence = 0.0;
  std::vector<std::string> tokens;
  std::vector<std::string> pos;  // empty or same length as tokens

  bool has_pos() const { return !pos.empty(); }
};

struct MissingFileError : std::runtime_error {
  explicit MissingFileError(const std::string& path)
      : std::runtime_error("missing file: " + path) {}
};

// Raised in strict mode; in skip-and-report mode collected into LoadReport.
struct MalformedRecordError : std::runtime_error {
  MalformedRecordError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_number(line),
        reason(reason) {}
  int line_number;
  std::string reason;
};

struct LoadIssue {
  int line_number;
  std::string reason;
};

struct LoadResult {
  std::vector<GenericSentence> sentences;
  std::vector<LoadIssue> issues;
};

// Parse one JSONL corpus record. Throws MalformedRecordError on bad input.
// Fields: id, text, confidence, optional tokens, optional pos.
GenericSentence ParseSentenceRecord(const std::string& line, int line_number);

// Load a line-delimited corpus file. With skip_malformed, bad lines are
// reported in the result instead of aborting the load.
LoadResult LoadSentences(const std::string& path, bool skip_malformed = true);

std::string SentenceRecordToJson(const GenericSentence& s);

void WriteSentences(const std::vector<GenericSentence>& sentences,
                    const std::string& path);

// Keeps sentences with confidence strictly greater than threshold.
std::vector<GenericSentence> FilterGenerics(
    const std::vector<GenericSentence>& sentences, double threshold = 0.5);

// Tokens from the record if present, else the default tokenizer on text.
std::vector<std::string> SentenceTokens(const GenericSentence& s);

}  // namespace haspart

#endif  // HASPART_CORPUS_HPP_
