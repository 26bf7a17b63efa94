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

#ifndef HASPART_PIPELINE_HPP_
#define HASPART_PIPELINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "haspart/classify.hpp"
#include "haspart/kb.hpp"

namespace haspart {

struct PipelineConfig {
  // Paths
  std::string corpus;
  std::string out_dir = "out";
  std::string titles;            // title lexicon, shared with linking
  std::string quantifiers;       // optional; defaults built in
  std::string tagger_lexicon;    // optional
  std::string seeds_haspart;
  std::string seeds_other;       // optional
  std::string senses;            // optional; linking skipped without it
  std::string vocab;             // optional; eval-yield needs it
  std::string stopwords;         // optional
  std::string corpus_id;         // recorded in the KB header; defaults to corpus

  // Thresholds
  double generic_threshold = 0.5;
  double keep_threshold = 0.5;
  double cutoff = 0.9985;

  // Scorer selection
  std::string scorer = "builtin";     // builtin | external
  std::string external_command;       // shell-split argv for the subprocess
  int external_timeout_ms = 5000;
  int external_retries = 1;

  // Training hyperparameters and seeds
  double learning_rate = 0.2;
  int epochs = 30;
  unsigned seed = 13;
  unsigned sample_seed = 42;

  static PipelineConfig FromFile(const std::string& path);
  // key=value override, same keys as the config file.
  void Set(const std::string& key, const std::string& value);
  // Empty when valid; otherwise one message per problem.
  std::vector<std::string> Validate() const;
};

struct StageFailure : std::runtime_error {
  StageFailure(const std::string& stage, const std::string& why)
      : std::runtime_error("stage '" + stage + "' failed: " + why), stage(stage) {}
  std::string stage;
};

struct PipelineResult {
  KnowledgeBase kb;
  std::string kb_tsv_path;
  std::string kb_jsonl_path;
  std::vector<std::string> stage_log;
};

// Runs filter -> train -> extract -> aggregate -> link, writing a
// checkpoint file per stage under out_dir. With resume, stages whose
// checkpoint already exists are loaded instead of recomputed.
PipelineResult RunPipeline(const PipelineConfig& config, bool resume = false);

// Checkpoint file helpers (tab-separated raw tuple list).
void WriteRawTuples(const std::vector<RawTuple>& raw, const std::string& path);
std::vector<RawTuple> ReadRawTuples(const std::string& path);

// Seed pair file: whole <TAB> part, one pair per line.
std::vector<NamePair> ReadNamePairs(const std::string& path);

}  // namespace haspart

#endif  // HASPART_PIPELINE_HPP_
