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
#include <fstream>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "haspart/aggregate.hpp"
#include "haspart/external_scorer.hpp"
#include "haspart/link.hpp"
#include "haspart/text.hpp"

namespace haspart {

namespace fs = std::filesystem;

namespace {

std::string Trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> ShellSplit(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string word;
  while (ss >> word) out.push_back(word);
  return out;
}

}  // namespace

PipelineConfig PipelineConfig::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  PipelineConfig config;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw MalformedRecordError(line_number, "expected key = value");
    config.Set(Trim(t.substr(0, eq)), Trim(t.substr(eq + 1)));
  }
  return config;
}

void PipelineConfig::Set(const std::string& key, const std::string& value) {
  if (key == "corpus") corpus = value;
  else if (key == "out_dir") out_dir = value;
  else if (key == "titles") titles = value;
  else if (key == "quantifiers") quantifiers = value;
  else if (key == "tagger_lexicon") tagger_lexicon = value;
  else if (key == "seeds_haspart") seeds_haspart = value;
  else if (key == "seeds_other") seeds_other = value;
  else if (key == "senses") senses = value;
  else if (key == "vocab") vocab = value;
  else if (key == "stopwords") stopwords = value;
  else if (key == "corpus_id") corpus_id = value;
  else if (key == "generic_threshold") generic_threshold = std::stod(value);
  else if (key == "keep_threshold") keep_threshold = std::stod(value);
  else if (key == "cutoff") cutoff = std::stod(value);
  else if (key == "scorer") scorer = value;
  else if (key == "external_command") external_command = value;
  else if (key == "external_timeout_ms") external_timeout_ms = std::stoi(value);
  else if (key == "external_retries") external_retries = std::stoi(value);
  else if (key == "learning_rate") learning_rate = std::stod(value);
  else if (key == "epochs") epochs = std::stoi(value);
  else if (key == "seed") seed = static_cast<unsigned>(std::stoul(value));
  else if (key == "sample_seed") sample_seed = static_cast<unsigned>(std::stoul(value));
  else throw std::runtime_error("unknown config key: " + key);
}

std::vector<std::string> PipelineConfig::Validate() const {
  std::vector<std::string> errors;
  auto check_unit = [&](const char* name, double v) {
    if (v < 0.0 || v > 1.0)
      errors.push_back(std::string(name) + " outside [0,1]");
  };
  check_unit("generic_threshold", generic_threshold);
  check_unit("keep_threshold", keep_threshold);
  check_unit("cutoff", cutoff);
  if (corpus.empty()) errors.push_back("corpus path not set");
  else if (!fs::exists(corpus)) errors.push_back("corpus file missing: " + corpus);
  auto check_path = [&](const char* name, const std::string& p) {
    if (!p.empty() && !fs::exists(p))
      errors.push_back(std::string(name) + " file missing: " + p);
  };
  check_path("titles", titles);
  check_path("quantifiers", quantifiers);
  check_path("tagger_lexicon", tagger_lexicon);
  check_path("seeds_haspart", seeds_haspart);
  check_path("seeds_other", seeds_other);
  check_path("senses", senses);
  check_path("vocab", vocab);
  check_path("stopwords", stopwords);
  if (scorer != "builtin" && scorer != "external")
    errors.push_back("scorer must be 'builtin' or 'external'");
  if (scorer == "external" && external_command.empty())
    errors.push_back("external scorer selected but external_command not set");
  if (scorer == "builtin" && seeds_haspart.empty())
    errors.push_back("builtin scorer needs seeds_haspart for training");
  return errors;
}

std::vector<NamePair> ReadNamePairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  std::vector<NamePair> pairs;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw MalformedRecordError(line_number, "expected first<TAB>second");
    pairs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return pairs;
}

void WriteRawTuples(const std::vector<RawTuple>& raw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& t : raw) {
    out << t.whole_text << "\t" << t.part_text << "\t" << t.sentence_id << "\t"
        << text::FormatDouble(t.score) << "\n";
  }
}

std::vector<RawTuple> ReadRawTuples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  std::vector<RawTuple> raw;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> f;
    size_t start = 0;
    while (true) {
      size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        f.push_back(line.substr(start));
        break;
      }
      f.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (f.size() != 4)
      throw MalformedRecordError(line_number, "expected 4 tab-separated fields");
    raw.push_back({f[0], f[1], f[2], std::stod(f[3])});
  }
  return raw;
}

PipelineResult RunPipeline(const PipelineConfig& config, bool resume) {
  {
    std::vector<std::string> errors = config.Validate();
    if (!errors.empty()) {
      std::string msg;
      for (const auto& e : errors) msg += e + "; ";
      throw std::runtime_error("invalid config: " + msg);
    }
  }
  fs::create_directories(config.out_dir);
  PipelineResult result;
  auto ckpt = [&](const char* name) { return config.out_dir + "/" + name; };
  auto log = [&](const std::string& line) { result.stage_log.push_back(line); };

  QuantifierLexicon quantifiers = config.quantifiers.empty()
                                      ? QuantifierLexicon::Default()
                                      : QuantifierLexicon::FromFile(config.quantifiers);
  TitleLexicon titles;
  if (!config.titles.empty()) titles = TitleLexicon::FromFile(config.titles);
  PosTagger tagger;
  if (!config.tagger_lexicon.empty()) tagger.LoadLexicon(config.tagger_lexicon);

  // Stage 1: confidence filter.
  const std::string generics_path = ckpt("01_generics.jsonl");
  std::vector<GenericSentence> generics;
  try {
    if (resume && fs::exists(generics_path)) {
      generics = LoadSentences(generics_path, false).sentences;
      log("filter: resumed from checkpoint (" + std::to_string(generics.size()) +
          " sentences)");
    } else {
      LoadResult loaded = LoadSentences(config.corpus, true);
      for (const auto& issue : loaded.issues)
        log("filter: skipped line " + std::to_string(issue.line_number) + ": " +
            issue.reason);
      generics = FilterGenerics(loaded.sentences, config.generic_threshold);
      WriteSentences(generics, generics_path);
      log("filter: kept " + std::to_string(generics.size()) + " of " +
          std::to_string(loaded.sentences.size()));
    }
  } catch (const std::exception& e) {
    throw StageFailure("filter", e.what());
  }

  // Stage 2: distant supervision + training (builtin scorer only).
  const std::string model_path = ckpt("02_model.txt");
  std::unique_ptr<Scorer> scorer;
  try {
    if (config.scorer == "external") {
      ExternalScorerConfig ext;
      ext.command = ShellSplit(config.external_command);
      ext.timeout_ms = config.external_timeout_ms;
      ext.retries = config.external_retries;
      scorer = std::make_unique<ExternalScorer>(std::move(ext));
      log("train: skipped (external scorer)");
    } else if (resume && fs::exists(model_path)) {
      scorer = std::make_unique<BuiltinScorer>(ScorerModel::Load(model_path));
      log("train: resumed from checkpoint");
    } else {
      std::vector<NamePair> seeds = ReadNamePairs(config.seeds_haspart);
      std::vector<NamePair> others;
      if (!config.seeds_other.empty()) others = ReadNamePairs(config.seeds_other);
      std::vector<LabeledExample> dataset =
          BuildDistantDataset(generics, seeds, others, tagger);
      WriteLabeledExamples(dataset, ckpt("02_distant.jsonl"));
      TrainConfig tc{config.learning_rate, config.epochs, config.seed};
      ScorerModel model = ScorerModel::Train(generics, dataset, tc);
      model.Save(model_path);
      log("train: " + std::to_string(dataset.size()) + " distant examples, " +
          std::to_string(model.vocabulary().size()) + " features");
      scorer = std::make_unique<BuiltinScorer>(std::move(model));
    }
  } catch (const std::exception& e) {
    throw StageFailure("train", e.what());
  }

  // Stage 3: corpus-wide pair scoring.
  const std::string raw_path = ckpt("03_raw.tsv");
  std::vector<RawTuple> raw;
  try {
    if (resume && fs::exists(raw_path)) {
      raw = ReadRawTuples(raw_path);
      log("extract: resumed from checkpoint (" + std::to_string(raw.size()) +
          " tuples)");
    } else {
      ExtractionReport report;
      raw = ExtractCorpus(*scorer, generics, tagger, config.keep_threshold, &report);
      WriteRawTuples(raw, raw_path);
      for (const auto& s : report.skipped) log("extract: skipped " + s);
      log("extract: " + std::to_string(raw.size()) + " raw tuples from " +
          std::to_string(report.pairs_scored) + " scored pairs");
    }
  } catch (const std::exception& e) {
    throw StageFailure("extract", e.what());
  }

  // Stage 4: normalize, aggregate, threshold.
  const std::string agg_path = ckpt("04_aggregated.jsonl");
  KnowledgeBase kb;
  kb.header.corpus_id = config.corpus_id.empty() ? config.corpus : config.corpus_id;
  kb.header.thresholds["generic_threshold"] =
      text::FormatDouble(config.generic_threshold);
  kb.header.thresholds["keep_threshold"] = text::FormatDouble(config.keep_threshold);
  kb.header.thresholds["cutoff"] = text::FormatDouble(config.cutoff);
  try {
    if (resume && fs::exists(agg_path)) {
      kb = ReadKbJsonl(agg_path);
      log("aggregate: resumed from checkpoint");
    } else {
      std::vector<HasPartTuple> pooled = AggregateTuples(raw, quantifiers, titles);
      kb.tuples = ApplyThreshold(pooled, config.cutoff);
      WriteKbJsonl(kb, agg_path);
      log("aggregate: " + std::to_string(pooled.size()) + " pooled, " +
          std::to_string(kb.tuples.size()) + " above cutoff");
    }
  } catch (const std::exception& e) {
    throw StageFailure("aggregate", e.what());
  }

  // Stage 5: sense assignment and title linking.
  try {
    std::unordered_map<std::string, const GenericSentence*> by_id;
    for (const auto& s : generics) by_id[s.id] = &s;
    std::optional<SenseInventory> inventory;
    if (!config.senses.empty()) inventory = SenseInventory::FromFile(config.senses);
    OverlapScorer gloss_scorer;
    DisambiguationReport wsd_report;
    for (auto& tuple : kb.tuples) {
      if (inventory) {
        std::string context;
        auto it = by_id.find(tuple.best_support);
        if (it != by_id.end()) context = it->second->text;
        DisambiguateTuple(tuple, context, *inventory, gloss_scorer, &wsd_report);
      }
      tuple.whole_link = LinkWikipedia(tuple.whole, titles);
      tuple.part_link = LinkWikipedia(tuple.part, titles);
    }
    if (inventory)
      log("link: " + std::to_string(wsd_report.assigned) + " senses assigned (" +
          std::to_string(wsd_report.monosemous) + " monosemous, " +
          std::to_string(wsd_report.omitted.size()) + " omitted)");
    LinkRateReport rates = ComputeLinkRates(kb.tuples, titles);
    log("link: " + std::to_string(rates.linked) + "/" +
        std::to_string(rates.entities) + " entities linked");

    result.kb_tsv_path = ckpt("kb.tsv");
    result.kb_jsonl_path = ckpt("kb.jsonl");
    WriteKbTsv(kb, result.kb_tsv_path);
    WriteKbJsonl(kb, result.kb_jsonl_path);
  } catch (const std::exception& e) {
    throw StageFailure("link", e.what());
  }

  result.kb = std::move(kb);
  return result;
}

}  // namespace haspart
