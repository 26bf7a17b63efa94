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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "haspart/aggregate.hpp"
#include "haspart/evalkit.hpp"
#include "haspart/external_scorer.hpp"
#include "haspart/link.hpp"
#include "haspart/pipeline.hpp"
#include "haspart/text.hpp"

namespace fs = std::filesystem;
using namespace haspart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitStageFailure = 2;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  std::optional<double> generic_threshold;
  std::optional<double> keep_threshold;
  std::optional<double> cutoff;
  std::optional<std::string> out_dir;
  std::optional<std::string> corpus;
};

void AddCommonOptions(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("-c,--config", opts.config_path, "pipeline config file");
  cmd->add_option("--set", opts.overrides, "config override, key=value");
  cmd->add_option("--generic-threshold", opts.generic_threshold,
                  "generic confidence threshold (strict >)");
  cmd->add_option("--keep-threshold", opts.keep_threshold,
                  "raw extraction score threshold (strict >)");
  cmd->add_option("--cutoff", opts.cutoff, "pooled score cutoff (strict >)");
  cmd->add_option("--out-dir", opts.out_dir, "output/checkpoint directory");
  cmd->add_option("--corpus", opts.corpus, "corpus file");
}

PipelineConfig BuildConfig(const CommonOptions& opts) {
  PipelineConfig config;
  if (!opts.config_path.empty())
    config = PipelineConfig::FromFile(opts.config_path);
  for (const auto& kv : opts.overrides) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("--set expects key=value, got: " + kv);
    config.Set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opts.generic_threshold) config.generic_threshold = *opts.generic_threshold;
  if (opts.keep_threshold) config.keep_threshold = *opts.keep_threshold;
  if (opts.cutoff) config.cutoff = *opts.cutoff;
  if (opts.out_dir) config.out_dir = *opts.out_dir;
  if (opts.corpus) config.corpus = *opts.corpus;
  return config;
}

int ReportConfigErrors(const std::vector<std::string>& errors) {
  if (errors.empty()) return kExitOk;
  for (const auto& e : errors) std::cerr << "config error: " << e << "\n";
  return kExitValidation;
}

int ValidateOrFail(const PipelineConfig& config) {
  return ReportConfigErrors(config.Validate());
}

// Evaluation commands read an existing KB; they need none of the training
// inputs, only (sometimes) the corpus.
int ValidateEvalOrFail(const PipelineConfig& config, bool needs_corpus) {
  std::vector<std::string> errors;
  if (needs_corpus) {
    if (config.corpus.empty())
      errors.push_back("corpus path not set");
    else if (!fs::exists(config.corpus))
      errors.push_back("corpus file missing: " + config.corpus);
  }
  if (!config.vocab.empty() && !fs::exists(config.vocab))
    errors.push_back("vocab file missing: " + config.vocab);
  return ReportConfigErrors(errors);
}

struct Lexicons {
  QuantifierLexicon quantifiers;
  TitleLexicon titles;
  PosTagger tagger;
};

Lexicons LoadLexicons(const PipelineConfig& config) {
  Lexicons lx;
  lx.quantifiers = config.quantifiers.empty()
                       ? QuantifierLexicon::Default()
                       : QuantifierLexicon::FromFile(config.quantifiers);
  if (!config.titles.empty()) lx.titles = TitleLexicon::FromFile(config.titles);
  if (!config.tagger_lexicon.empty()) lx.tagger.LoadLexicon(config.tagger_lexicon);
  return lx;
}

std::string Ckpt(const PipelineConfig& config, const char* name) {
  return config.out_dir + "/" + name;
}

std::vector<GenericSentence> LoadGenericsCheckpoint(const PipelineConfig& config) {
  std::string path = Ckpt(config, "01_generics.jsonl");
  if (!fs::exists(path))
    throw std::runtime_error("checkpoint missing (run 'ingest' first): " + path);
  return LoadSentences(path, false).sentences;
}

KnowledgeBase LoadKb(const std::string& path) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".tsv")
    return ReadKbTsv(path);
  return ReadKbJsonl(path);
}

int RunIngest(const PipelineConfig& config) {
  fs::create_directories(config.out_dir);
  LoadResult loaded = LoadSentences(config.corpus, true);
  for (const auto& issue : loaded.issues)
    std::cerr << "skipped line " << issue.line_number << ": " << issue.reason << "\n";
  std::vector<GenericSentence> generics =
      FilterGenerics(loaded.sentences, config.generic_threshold);
  WriteSentences(generics, Ckpt(config, "01_generics.jsonl"));
  std::cout << "kept " << generics.size() << " of " << loaded.sentences.size()
            << " sentences (confidence > "
            << text::FormatDouble(config.generic_threshold) << ")\n";
  return kExitOk;
}

int RunTrainDistant(const PipelineConfig& config) {
  Lexicons lx = LoadLexicons(config);
  std::vector<GenericSentence> generics = LoadGenericsCheckpoint(config);
  std::vector<NamePair> seeds = ReadNamePairs(config.seeds_haspart);
  std::vector<NamePair> others;
  if (!config.seeds_other.empty()) others = ReadNamePairs(config.seeds_other);
  std::vector<LabeledExample> dataset =
      BuildDistantDataset(generics, seeds, others, lx.tagger);
  WriteLabeledExamples(dataset, Ckpt(config, "02_distant.jsonl"));
  TrainConfig tc{config.learning_rate, config.epochs, config.seed};
  ScorerModel model = ScorerModel::Train(generics, dataset, tc);
  model.Save(Ckpt(config, "02_model.txt"));
  std::cout << "trained on " << dataset.size() << " distant examples; "
            << model.vocabulary().size() << " features\n";
  return kExitOk;
}

int RunExtract(const PipelineConfig& config) {
  Lexicons lx = LoadLexicons(config);
  std::vector<GenericSentence> generics = LoadGenericsCheckpoint(config);
  std::unique_ptr<Scorer> scorer;
  if (config.scorer == "external") {
    ExternalScorerConfig ext;
    std::istringstream ss(config.external_command);
    std::string word;
    while (ss >> word) ext.command.push_back(word);
    ext.timeout_ms = config.external_timeout_ms;
    ext.retries = config.external_retries;
    scorer = std::make_unique<ExternalScorer>(std::move(ext));
  } else {
    scorer = std::make_unique<BuiltinScorer>(
        ScorerModel::Load(Ckpt(config, "02_model.txt")));
  }
  ExtractionReport report;
  std::vector<RawTuple> raw =
      ExtractCorpus(*scorer, generics, lx.tagger, config.keep_threshold, &report);
  WriteRawTuples(raw, Ckpt(config, "03_raw.tsv"));
  for (const auto& s : report.skipped) std::cerr << "skipped " << s << "\n";
  std::cout << raw.size() << " raw tuples from " << report.pairs_scored
            << " scored pairs\n";
  return kExitOk;
}

int RunAggregate(const PipelineConfig& config) {
  Lexicons lx = LoadLexicons(config);
  std::vector<RawTuple> raw = ReadRawTuples(Ckpt(config, "03_raw.tsv"));
  std::vector<HasPartTuple> pooled =
      AggregateTuples(raw, lx.quantifiers, lx.titles);
  KnowledgeBase kb;
  kb.header.corpus_id = config.corpus_id.empty() ? config.corpus : config.corpus_id;
  kb.header.thresholds["generic_threshold"] =
      text::FormatDouble(config.generic_threshold);
  kb.header.thresholds["keep_threshold"] = text::FormatDouble(config.keep_threshold);
  kb.header.thresholds["cutoff"] = text::FormatDouble(config.cutoff);
  kb.tuples = ApplyThreshold(pooled, config.cutoff);
  WriteKbJsonl(kb, Ckpt(config, "04_aggregated.jsonl"));
  std::cout << pooled.size() << " pooled tuples, " << kb.tuples.size()
            << " above cutoff " << text::FormatDouble(config.cutoff) << "\n";
  return kExitOk;
}

int RunLink(const PipelineConfig& config) {
  Lexicons lx = LoadLexicons(config);
  KnowledgeBase kb = ReadKbJsonl(Ckpt(config, "04_aggregated.jsonl"));
  std::vector<GenericSentence> generics = LoadGenericsCheckpoint(config);
  std::unordered_map<std::string, const GenericSentence*> by_id;
  for (const auto& s : generics) by_id[s.id] = &s;
  std::optional<SenseInventory> inventory;
  if (!config.senses.empty()) inventory = SenseInventory::FromFile(config.senses);
  OverlapScorer gloss_scorer;
  DisambiguationReport wsd;
  for (auto& t : kb.tuples) {
    if (inventory) {
      std::string context;
      auto it = by_id.find(t.best_support);
      if (it != by_id.end()) context = it->second->text;
      DisambiguateTuple(t, context, *inventory, gloss_scorer, &wsd);
    }
    t.whole_link = LinkWikipedia(t.whole, lx.titles);
    t.part_link = LinkWikipedia(t.part, lx.titles);
  }
  WriteKbTsv(kb, Ckpt(config, "kb.tsv"));
  WriteKbJsonl(kb, Ckpt(config, "kb.jsonl"));
  LinkRateReport rates = ComputeLinkRates(kb.tuples, lx.titles);
  std::cout << "senses assigned: " << wsd.assigned << " (" << wsd.omitted.size()
            << " omitted)\n";
  std::cout << "entities linked: " << rates.linked << "/" << rates.entities
            << " (titled " << rates.titled << ", unambiguous "
            << rates.unambiguous << ")\n";
  return kExitOk;
}

int RunFull(const PipelineConfig& config, bool resume) {
  PipelineResult result = RunPipeline(config, resume);
  for (const auto& line : result.stage_log) std::cout << line << "\n";
  std::cout << "KB written: " << result.kb_tsv_path << " ("
            << result.kb.tuples.size() << " tuples)\n";
  return kExitOk;
}

int RunEvalYield(const PipelineConfig& config, const std::string& kb_path,
                 const std::vector<double>& cutoffs) {
  KnowledgeBase kb = LoadKb(kb_path);
  QuantifierLexicon quantifiers = config.quantifiers.empty()
                                      ? QuantifierLexicon::Default()
                                      : QuantifierLexicon::FromFile(config.quantifiers);
  std::set<std::string> stop = DefaultEvalStopwords();
  if (!config.stopwords.empty()) {
    stop.clear();
    std::ifstream in(config.stopwords);
    std::string w;
    while (std::getline(in, w))
      if (!w.empty() && w[0] != '#') stop.insert(text::Lower(w));
  }
  std::cout << "total\t" << kb.tuples.size() << "\n";
  if (!config.vocab.empty()) {
    VocabList vocab = VocabList::FromFile(config.vocab);
    VocabYield y = ComputeVocabYield(kb, vocab, stop, quantifiers);
    DistinctCounts d = ComputeDistinctCounts(kb, vocab, stop, quantifiers);
    std::cout << "in_vocab\t" << y.in_vocab << "\n";
    std::cout << "distinct_wholes\t" << d.wholes << "\n";
    std::cout << "distinct_parts\t" << d.parts << "\n";
  }
  if (!cutoffs.empty()) {
    std::cout << "cutoff\tyield\n";
    for (const auto& row : YieldReport(kb.tuples, cutoffs))
      std::cout << text::FormatDouble(row.cutoff) << "\t" << row.yield << "\n";
  }
  return kExitOk;
}

int RunEvalSalience(const PipelineConfig& config, const std::string& kb_path,
                    size_t sample, unsigned seed) {
  KnowledgeBase kb = LoadKb(kb_path);
  LoadResult corpus = LoadSentences(config.corpus, true);
  CorpusIndex index = CorpusIndex::Build(corpus.sentences);
  SalienceResult r = SalienceRate(kb, index, sample, seed);
  // Local stand-in for a web-scale co-mention query; not comparable to
  // search-engine salience numbers.
  std::cout << "local co-mention salience\t" << r.salient << "/" << r.sampled
            << "\t" << text::FormatDouble(r.percent()) << "%\n";
  if (r.sample_truncated)
    std::cout << "note: requested sample exceeded KB size; whole KB used\n";
  return kExitOk;
}

int RunSamplePrecision(const PipelineConfig& config, const std::string& kb_path,
                       size_t n, const std::string& out_path) {
  KnowledgeBase kb = LoadKb(kb_path);
  if (kb.tuples.empty()) {
    std::cerr << "KB is empty; nothing to sample\n";
    return kExitValidation;
  }
  LoadResult corpus = LoadSentences(config.corpus, true);
  auto sample = PrecisionSample(kb, n, config.sample_seed);
  WritePrecisionSample(sample, corpus.sentences, out_path);
  std::cout << "wrote " << sample.size() << " tuples to " << out_path << "\n";
  return kExitOk;
}

int RunQuery(const std::string& kb_path, const std::string& direction,
             const std::string& entity) {
  KnowledgeBase kb = LoadKb(kb_path);
  std::vector<HasPartTuple> rows = (direction == "parts-of")
                                       ? PartsOf(kb, entity)
                                       : WholesOf(kb, entity);
  for (const auto& t : rows) {
    std::cout << t.whole.name << "\t" << t.part.name << "\t"
              << text::FormatDouble(t.score) << "\t" << t.count << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hasPart extraction pipeline over generic sentences"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string kb_path, entity, direction, out_path = "precision_sample.tsv";
  std::vector<double> cutoffs;
  size_t sample_n = 1000, precision_n = 200;
  unsigned salience_seed = 42;
  bool resume = false;

  auto* ingest = app.add_subcommand("ingest", "filter the corpus to high-confidence generics");
  AddCommonOptions(ingest, opts);
  auto* train = app.add_subcommand("train-distant", "build distant dataset and train the scorer");
  AddCommonOptions(train, opts);
  auto* extract = app.add_subcommand("extract", "score all chunk pairs and keep raw tuples");
  AddCommonOptions(extract, opts);
  auto* aggregate = app.add_subcommand("aggregate", "normalize, pool duplicates, apply cutoff");
  AddCommonOptions(aggregate, opts);
  auto* link = app.add_subcommand("link", "assign word senses and title links");
  AddCommonOptions(link, opts);
  auto* run = app.add_subcommand("run", "run the whole pipeline");
  AddCommonOptions(run, opts);
  run->add_flag("--resume", resume, "reuse existing stage checkpoints");

  auto* eval_yield = app.add_subcommand("eval-yield", "yield, vocab coverage, distinct counts");
  AddCommonOptions(eval_yield, opts);
  eval_yield->add_option("--kb", kb_path, "KB file (.tsv or .jsonl)")->required();
  eval_yield->add_option("--cutoffs", cutoffs, "ascending cutoff grid for the yield table");

  auto* eval_salience = app.add_subcommand("eval-salience", "co-mention salience against the corpus index");
  AddCommonOptions(eval_salience, opts);
  eval_salience->add_option("--kb", kb_path)->required();
  eval_salience->add_option("--sample", sample_n, "sample size (default 1000)");
  eval_salience->add_option("--seed", salience_seed);

  auto* sample_cmd = app.add_subcommand("sample-precision", "sample tuples for human judgment");
  AddCommonOptions(sample_cmd, opts);
  sample_cmd->add_option("--kb", kb_path)->required();
  sample_cmd->add_option("-n", precision_n, "sample size (default 200)");
  sample_cmd->add_option("-o,--output", out_path);

  auto* query = app.add_subcommand("query", "query the KB");
  query->add_option("--kb", kb_path)->required();
  query->add_option("direction", direction, "parts-of | wholes-of")
      ->required()
      ->check(CLI::IsMember({"parts-of", "wholes-of"}));
  query->add_option("entity", entity)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (query->parsed()) return RunQuery(kb_path, direction, entity);
    PipelineConfig config = BuildConfig(opts);
    if (eval_yield->parsed()) {
      if (int rc = ValidateEvalOrFail(config, false); rc != kExitOk) return rc;
      return RunEvalYield(config, kb_path, cutoffs);
    }
    if (eval_salience->parsed()) {
      if (int rc = ValidateEvalOrFail(config, true); rc != kExitOk) return rc;
      return RunEvalSalience(config, kb_path, sample_n, salience_seed);
    }
    if (sample_cmd->parsed()) {
      if (int rc = ValidateEvalOrFail(config, true); rc != kExitOk) return rc;
      return RunSamplePrecision(config, kb_path, precision_n, out_path);
    }
    if (int rc = ValidateOrFail(config); rc != kExitOk) return rc;
    if (ingest->parsed()) return RunIngest(config);
    if (train->parsed()) return RunTrainDistant(config);
    if (extract->parsed()) return RunExtract(config);
    if (aggregate->parsed()) return RunAggregate(config);
    if (link->parsed()) return RunLink(config);
    if (run->parsed()) return RunFull(config, resume);
  } catch (const StageFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitStageFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStageFailure;
  }
  return kExitOk;
}
