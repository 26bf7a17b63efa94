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

#ifndef HASPART_EXTERNAL_SCORER_HPP_
#define HASPART_EXTERNAL_SCORER_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "haspart/classify.hpp"

namespace haspart {

struct ScorerUnavailableError : std::runtime_error {
  explicit ScorerUnavailableError(const std::string& why)
      : std::runtime_error("external scorer unavailable: " + why) {}
};

// Wire protocol with an out-of-process scorer over a byte stream:
// request  {"id": "...", "marked_text": "..."}  one per line
// response {"id": "...", "score": 0.93}         one per line
std::string ScoreRequestJson(const std::string& id, const std::string& marked_text);
// Parses a response line; throws on malformed input or id mismatch.
double ParseScoreResponse(const std::string& line, const std::string& expected_id);

struct ExternalScorerConfig {
  std::vector<std::string> command;  // argv of the scorer subprocess
  int timeout_ms = 5000;
  int retries = 1;
};

// Spawns the scorer command and speaks the line protocol over its stdio.
class ExternalScorer : public Scorer {
 public:
  explicit ExternalScorer(ExternalScorerConfig config);
  ~ExternalScorer() override;

  ExternalScorer(const ExternalScorer&) = delete;
  ExternalScorer& operator=(const ExternalScorer&) = delete;

  double ScorePair(const GenericSentence& sentence,
                   const CandidatePair& pair) override;

  // One protocol round trip. Throws ScorerUnavailableError after the
  // configured retries are exhausted.
  double ScoreMarked(const std::string& id, const std::string& marked_text);

 private:
  void Start();
  void Stop();
  double RoundTrip(const std::string& id, const std::string& marked_text);

  ExternalScorerConfig config_;
  int child_pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string read_buffer_;
  long request_counter_ = 0;
};

}  // namespace haspart

#endif  // HASPART_EXTERNAL_SCORER_HPP_
