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

#include "haspart/pipeline.hpp"

#include <filesystem>

#include "doctest.h"
#include "test_util.hpp"

using namespace haspart;
namespace fs = std::filesystem;

namespace {

PipelineConfig FixtureConfig(const std::string& out_dir) {
  PipelineConfig config;
  config.corpus = testutil::DataFile("mini_corpus.jsonl");
  config.seeds_haspart = testutil::DataFile("seeds_haspart.tsv");
  config.seeds_other = testutil::DataFile("seeds_other.tsv");
  config.titles = testutil::DataFile("titles.txt");
  config.senses = testutil::DataFile("senses.tsv");
  config.out_dir = out_dir;
  config.cutoff = 0.9;
  return config;
}

bool LogContains(const std::vector<std::string>& log, const std::string& needle) {
  for (const auto& line : log) {
    if (line.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("config files, overrides, and validation") {
  testutil::TempDir dir;
  std::string path = dir.Write("p.conf",
                               "# pipeline settings\n"
                               "corpus = c.jsonl\n"
                               "cutoff = 0.75\n"
                               "scorer = external\n"
                               "external_command = python3 scorer.py\n"
                               "epochs = 12\n");
  PipelineConfig config = PipelineConfig::FromFile(path);
  CHECK(config.corpus == "c.jsonl");
  CHECK(config.cutoff == doctest::Approx(0.75));
  CHECK(config.scorer == "external");
  CHECK(config.external_command == "python3 scorer.py");
  CHECK(config.epochs == 12);
  CHECK(config.generic_threshold == doctest::Approx(0.5));  // defaults stand

  config.Set("keep_threshold", "0.6");
  CHECK(config.keep_threshold == doctest::Approx(0.6));
  CHECK_THROWS(config.Set("no_such_key", "1"));

  std::string bad = dir.Write("bad.conf", "corpus c.jsonl\n");
  CHECK_THROWS_AS(PipelineConfig::FromFile(bad), MalformedRecordError);
  CHECK_THROWS_AS(PipelineConfig::FromFile(dir.File("absent.conf")),
                  MissingFileError);
}

TEST_CASE("validation reports every problem") {
  PipelineConfig config;  // no corpus, builtin scorer without seeds
  std::vector<std::string> errors = config.Validate();
  CHECK(errors.size() == 2);

  config = FixtureConfig("/tmp/unused");
  CHECK(config.Validate().empty());

  config.cutoff = 1.5;
  config.generic_threshold = -0.1;
  config.titles = "/nonexistent/titles.txt";
  config.scorer = "quantum";
  errors = config.Validate();
  CHECK(errors.size() == 4);
}

TEST_CASE("seed pair files") {
  std::vector<NamePair> seeds =
      ReadNamePairs(testutil::DataFile("seeds_haspart.tsv"));
  CHECK(seeds.size() == 15);
  bool found = false;
  for (const auto& p : seeds) {
    if (p.first == "dog" && p.second == "tail") found = true;
  }
  CHECK(found);

  testutil::TempDir dir;
  std::string bad = dir.Write("bad.tsv", "dog tail\n");
  CHECK_THROWS_AS(ReadNamePairs(bad), MalformedRecordError);
  CHECK_THROWS_AS(ReadNamePairs(dir.File("absent")), MissingFileError);
}

TEST_CASE("raw tuple checkpoints round trip") {
  std::vector<RawTuple> raw = {
      {"Some pond snails", "gills", "s1", 0.875},
      {"dogs", "tails", "s2", 1.0 / 3.0},
  };
  testutil::TempDir dir;
  std::string path = dir.File("raw.tsv");
  WriteRawTuples(raw, path);
  std::vector<RawTuple> back = ReadRawTuples(path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].whole_text == raw[0].whole_text);
  CHECK(back[0].part_text == raw[0].part_text);
  CHECK(back[0].sentence_id == raw[0].sentence_id);
  CHECK(back[0].score == raw[0].score);  // exact through the text format
  CHECK(back[1].score == raw[1].score);

  std::string bad = dir.Write("bad.tsv", "only\tthree\tfields\n");
  CHECK_THROWS_AS(ReadRawTuples(bad), MalformedRecordError);
}

TEST_CASE("the full pipeline produces a deterministic knowledge base") {
  testutil::TempDir dir;
  PipelineResult first = RunPipeline(FixtureConfig(dir.File("run1")));

  CHECK_FALSE(first.kb.tuples.empty());
  CHECK(first.kb.header.thresholds.at("cutoff") == "0.9");
  for (const char* name : {"01_generics.jsonl", "02_distant.jsonl",
                           "02_model.txt", "03_raw.tsv", "04_aggregated.jsonl",
                           "kb.tsv", "kb.jsonl"}) {
    CHECK(fs::exists(dir.File("run1") + "/" + std::string(name)));
  }
  CHECK(LogContains(first.stage_log, "filter: kept"));
  CHECK(LogContains(first.stage_log, "train:"));
  CHECK(LogContains(first.stage_log, "extract:"));
  CHECK(LogContains(first.stage_log, "aggregate:"));
  CHECK(LogContains(first.stage_log, "link:"));

  // Every kept tuple clears the cutoff strictly.
  for (const auto& t : first.kb.tuples) CHECK(t.score > 0.9);

  // A second run from scratch is byte-identical.
  PipelineResult second = RunPipeline(FixtureConfig(dir.File("run2")));
  CHECK(testutil::Slurp(first.kb_tsv_path) == testutil::Slurp(second.kb_tsv_path));
  CHECK(testutil::Slurp(first.kb_jsonl_path) ==
        testutil::Slurp(second.kb_jsonl_path));
  CHECK(first.kb == second.kb);
}

TEST_CASE("resuming from checkpoints reproduces the same knowledge base") {
  testutil::TempDir dir;
  PipelineConfig config = FixtureConfig(dir.File("run"));
  PipelineResult fresh = RunPipeline(config);
  std::string tsv = testutil::Slurp(fresh.kb_tsv_path);

  // Resume with everything present: all stages load their checkpoints.
  PipelineResult resumed = RunPipeline(config, /*resume=*/true);
  CHECK(testutil::Slurp(resumed.kb_tsv_path) == tsv);
  CHECK(LogContains(resumed.stage_log, "resumed"));

  // Resume after losing the later checkpoints: recomputed stages agree.
  fs::remove(dir.File("run") + "/03_raw.tsv");
  fs::remove(dir.File("run") + "/04_aggregated.jsonl");
  PipelineResult partial = RunPipeline(config, /*resume=*/true);
  CHECK(testutil::Slurp(partial.kb_tsv_path) == tsv);
  CHECK(LogContains(partial.stage_log, "train: resumed"));
  CHECK(LogContains(partial.stage_log, "extract: 185"));
}

TEST_CASE("the external scorer drives the pipeline end to end") {
  testutil::TempDir dir;
  PipelineConfig config = FixtureConfig(dir.File("ext"));
  config.scorer = "external";
  config.external_command = STUB_SCORER_PATH;
  config.cutoff = 0.5;
  PipelineResult result = RunPipeline(config);
  CHECK_FALSE(result.kb.tuples.empty());
  CHECK(LogContains(result.stage_log, "train: skipped (external scorer)"));
  // The stub scores every "have" sentence pair 0.9.
  for (const auto& t : result.kb.tuples) CHECK(t.score == doctest::Approx(0.9));
}

TEST_CASE("stage failures name the failing stage") {
  testutil::TempDir dir;
  PipelineConfig config = FixtureConfig(dir.File("fail"));
  config.seeds_haspart = dir.Write("bad_seeds.tsv", "dog tail no tab\n");
  try {
    RunPipeline(config);
    FAIL("expected StageFailure");
  } catch (const StageFailure& e) {
    CHECK(e.stage == "train");
  }

  PipelineConfig invalid;
  CHECK_THROWS_WITH_AS(RunPipeline(invalid),
                       doctest::Contains("invalid config"), std::runtime_error);
}
