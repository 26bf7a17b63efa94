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

// Release acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "haspart/aggregate.hpp"
#include "haspart/classify.hpp"
#include "haspart/evalkit.hpp"
#include "haspart/kb.hpp"
#include "haspart/link.hpp"
#include "haspart/normalize.hpp"
#include "haspart/pipeline.hpp"
#include "haspart/text.hpp"

using namespace haspart;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void Report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

std::string DataFile(const std::string& name) {
  return std::string(HASPART_DATA_DIR) + "/" + name;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ScratchDir {
  fs::path path;
  ScratchDir() {
    std::random_device rd;
    path = fs::temp_directory_path() /
           ("haspart_accept_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string File(const std::string& name) const {
    return (path / name).string();
  }
};

// ---- criterion 1: golden normalization -------------------------------------

void Criterion1() {
  QuantifierLexicon quants = QuantifierLexicon::Default();
  TitleLexicon titles = TitleLexicon::FromFile(DataFile("titles.txt"));

  NormalizedEntity a = NormalizeEntity("large elephant", quants, titles);
  bool ok = a.name == "elephant" &&
            a.modifiers == std::vector<std::string>{"large"};

  NormalizedEntity b = NormalizeEntity("large intestine", quants, titles);
  ok = ok && b.name == "large intestine" && b.modifiers.empty() &&
       b.title_hit.has_value();

  NormalizedEntity c = NormalizeEntity("shiny carapace", quants, titles);
  ok = ok && c.name == "shiny carapace" && c.modifiers.empty() &&
       !c.title_hit.has_value();

  Report(1, "golden normalization (peel vs full-name vs miss)", ok);
}

// ---- criterion 2: marked-sentence byte exactness ---------------------------

void Criterion2() {
  GenericSentence s{"s1", "Some pond snails have gills to breathe in water.",
                    0.95, {}, {}};
  PosTagger tagger;
  std::vector<NounChunk> chunks = ExtractChunks(s, tagger);
  bool ok = chunks.size() == 3;
  if (ok) {
    MarkedSentence m = MarkArguments(s, {s.id, chunks[0], chunks[1]});
    ok = m.text ==
         "[CLS] [ARG1-B]Some pond snails[ARG1-E] have [ARG2-B]gills[ARG2-E] "
         "to breathe in water.";
  }
  Report(2, "marked sentence renders byte-exact", ok);
}

// ---- criterion 3: strict threshold semantics -------------------------------

void Criterion3() {
  std::vector<GenericSentence> corpus = {{"a", "x", 0.50, {}, {}},
                                         {"b", "x", 0.51, {}, {}}};
  std::vector<GenericSentence> kept = FilterGenerics(corpus, 0.5);
  bool ok = kept.size() == 1 && kept[0].id == "b";

  HasPartTuple at_cutoff;
  at_cutoff.score = 0.9985;
  HasPartTuple above;
  above.score = std::nextafter(0.9985, 1.0);
  std::vector<HasPartTuple> thresholded = ApplyThreshold({at_cutoff, above});
  ok = ok && thresholded.size() == 1 && thresholded[0].score > 0.9985;

  // Yield is monotone non-increasing over any ascending cutoff grid.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<HasPartTuple> tuples(300);
  for (auto& t : tuples) t.score = unit(rng);
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  std::vector<YieldRow> rows = YieldReport(tuples, grid);
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].yield > rows[i - 1].yield) ok = false;
  }
  Report(3, "strict thresholds and monotone yield grid", ok);
}

// ---- criterion 4: pooling arithmetic ---------------------------------------

void Criterion4() {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 9);

  std::vector<RawTuple> raw;
  for (int i = 0; i < 400; ++i) {
    int w = pick(rng), p = pick(rng);
    raw.push_back({"whole" + std::to_string(w), "part" + std::to_string(p),
                   "s" + std::to_string(i), unit(rng)});
  }
  QuantifierLexicon quants = QuantifierLexicon::Default();
  TitleLexicon titles;
  std::vector<HasPartTuple> base = AggregateTuples(raw, quants, titles);

  bool ok = true;
  // Mean pooling agrees with an independent sum/count to 1e-12.
  for (const auto& t : base) {
    double sum = 0.0;
    int count = 0;
    for (const auto& r : raw) {
      if (text::MatchKey(r.whole_text) == t.whole.name &&
          text::MatchKey(r.part_text) == t.part.name) {
        sum += r.score;
        ++count;
      }
    }
    if (count != t.count) ok = false;
    if (std::abs(t.score - sum / count) > 1e-12) ok = false;
    if (t.support.size() > static_cast<size_t>(t.count)) ok = false;
  }
  // Permutation invariance, scores exact to 1e-12 (here: exactly equal,
  // since aggregation sums in sorted key order).
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(raw.begin(), raw.end(), rng);
    std::vector<HasPartTuple> again = AggregateTuples(raw, quants, titles);
    if (again.size() != base.size()) {
      ok = false;
      break;
    }
    for (size_t i = 0; i < base.size(); ++i) {
      if (std::abs(again[i].score - base[i].score) > 1e-12) ok = false;
      if (again[i].count != base[i].count) ok = false;
      if (again[i].support != base[i].support) ok = false;
    }
  }
  Report(4, "mean pooling exact and permutation-invariant", ok);
}

// ---- criterion 5: distant supervision balance ------------------------------

void Criterion5() {
  PosTagger tagger;
  LoadResult loaded = LoadSentences(DataFile("mini_corpus.jsonl"));
  std::vector<NamePair> seeds = ReadNamePairs(DataFile("seeds_haspart.tsv"));
  std::vector<NamePair> other = ReadNamePairs(DataFile("seeds_other.tsv"));

  std::vector<LabeledExample> data =
      BuildDistantDataset(loaded.sentences, seeds, other, tagger);
  int pos = 0, rev = 0;
  for (const auto& e : data) {
    if (e.provenance == Provenance::kSeedMatch) ++pos;
    if (e.provenance == Provenance::kReversal) ++rev;
  }
  bool ok = pos > 0 && pos == rev;

  // Seeds that match nothing yield an empty dataset.
  std::vector<LabeledExample> none = BuildDistantDataset(
      loaded.sentences, {{"unicorn", "horn of plenty"}}, {}, tagger);
  ok = ok && none.empty();
  Report(5, "reversal negatives balance seed positives", ok,
         std::to_string(pos) + " positives");
}

// ---- criterion 6: classifier on a separable 500-pair corpus ----------------

void Criterion6() {
  // 500 synthetic relation pairs; each contributes a positive in pattern
  // order and its reversal. 400 pairs train, 100 held out.
  std::vector<GenericSentence> corpus;
  std::vector<LabeledExample> train, held;
  PosTagger tagger;
  for (int i = 0; i < 500; ++i) {
    std::string w = "thing" + std::to_string(i);
    std::string p = "piece" + std::to_string(i);
    GenericSentence s{"g" + std::to_string(i), w + " have " + p + " .",
                      0.9, {}, {}};
    corpus.push_back(s);
    std::vector<NounChunk> chunks = ExtractChunks(s, tagger);
    if (chunks.size() != 2) {
      Report(6, "separable classifier corpus", false, "chunking failed");
      return;
    }
    LabeledExample pos{{s.id, chunks[0], chunks[1]},
                       Label::kHasPart,
                       Provenance::kSeedMatch};
    LabeledExample neg{{s.id, chunks[1], chunks[0]},
                       Label::kNotHasPart,
                       Provenance::kReversal};
    if (i < 400) {
      train.push_back(pos);
      train.push_back(neg);
    } else {
      held.push_back(pos);
      held.push_back(neg);
    }
  }
  ScorerModel model = ScorerModel::Train(corpus, train, {0.2, 30, 13});
  int correct = 0;
  for (const auto& e : held) {
    const GenericSentence& s = corpus[std::stoi(e.pair.sentence_id.substr(1))];
    double score = model.Score(s, e.pair);
    if ((score > 0.5) == (e.label == Label::kHasPart)) ++correct;
  }
  double accuracy = double(correct) / held.size();
  bool ok = accuracy >= 0.95;

  // Zero-weight model scores exactly one half.
  ScorerModel zero = TrainOnFeatures({{0}, {}}, {1, 0}, {{"f", 0}}, {0.0, 0, 1});
  ok = ok && zero.ScoreFeatures({0}) == 0.5 && zero.ScoreFeatures({}) == 0.5;

  // Cross-entropy gradient vs central finite differences, 1e-4 relative.
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> wdist(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::map<std::string, int> vocab;
  for (int f = 0; f < 9; ++f) vocab["f" + std::to_string(f)] = f;
  std::vector<FeatureVec> xs;
  std::vector<int> ys;
  for (int i = 0; i < 60; ++i) {
    FeatureVec x;
    for (int f = 0; f < 9; ++f)
      if (coin(rng)) x.push_back(f);
    xs.push_back(x);
    ys.push_back(coin(rng) ? 1 : 0);
  }
  ScorerModel probe = TrainOnFeatures(xs, ys, vocab, {0.0, 0, 1});
  for (double& w : probe.weights()) w = wdist(rng);
  std::vector<double> grad = probe.LossGradient(xs, ys);
  const double h = 1e-6;
  for (size_t i = 0; i < grad.size(); ++i) {
    double saved = probe.weights()[i];
    probe.weights()[i] = saved + h;
    double up = probe.Loss(xs, ys);
    probe.weights()[i] = saved - h;
    double down = probe.Loss(xs, ys);
    probe.weights()[i] = saved;
    double fd = (up - down) / (2 * h);
    double denom = std::max({std::abs(fd), std::abs(grad[i]), 1e-8});
    if (std::abs(fd - grad[i]) / denom > 1e-4) ok = false;
  }
  char detail[64];
  std::snprintf(detail, sizeof(detail), "held-out accuracy %.3f", accuracy);
  Report(6, "classifier separability and gradient check", ok, detail);
}

// ---- criterion 7: word sense disambiguation --------------------------------

std::vector<WsdExample> LoadWsdCases(const std::string& path) {
  std::ifstream in(path);
  std::vector<WsdExample> out;
  std::string line;
  while (std::getline(in, line)) {
    // Minimal JSONL pull: fields are flat and the glosses hold no escapes.
    auto field = [&](const std::string& key) {
      size_t k = line.find("\"" + key + "\"");
      size_t colon = line.find(':', k);
      size_t q1 = line.find('"', colon + 1);
      size_t q2 = line.find('"', q1 + 1);
      return line.substr(q1 + 1, q2 - q1 - 1);
    };
    WsdExample ex;
    ex.sentence = field("sentence");
    ex.word = field("word");
    size_t glosses = line.find("\"glosses\"");
    size_t open = line.find('[', glosses);
    size_t close = line.find(']', open);
    std::string list = line.substr(open + 1, close - open - 1);
    size_t pos = 0;
    while ((pos = list.find('"', pos)) != std::string::npos) {
      size_t end = list.find('"', pos + 1);
      ex.glosses.push_back(list.substr(pos + 1, end - pos - 1));
      pos = end + 1;
    }
    size_t correct = line.find("\"correct\"");
    ex.correct = std::atoi(line.c_str() + line.find(':', correct) + 1);
    out.push_back(std::move(ex));
  }
  return out;
}

void Criterion7() {
  bool ok = true;

  // Distributions sum to 1 within 1e-9.
  SenseInventory inv = SenseInventory::FromFile(DataFile("senses.tsv"));
  OverlapScorer scorer;
  for (const char* lemma : {"bark", "trunk", "scale", "mane"}) {
    SenseAssignment a =
        RankSenses("The tree stood in the yard.", lemma, inv, scorer);
    double total = 0.0;
    for (double p : a.distribution) total += p;
    if (std::abs(total - 1.0) > 1e-9) ok = false;
  }

  // Uniform 4-gloss ranking loss is exactly ln 4 (1e-12).
  if (std::abs(RankingLoss({0, 0, 0, 0}, 1) - std::log(4.0)) > 1e-12) ok = false;

  // Ranking-loss gradient vs finite differences, 1e-5 relative.
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> scores(4);
    for (double& s : scores) s = dist(rng);
    int correct = trial % 4;
    std::vector<double> grad = RankingLossGradient(scores, correct);
    const double h = 1e-7;
    for (size_t i = 0; i < scores.size(); ++i) {
      std::vector<double> up = scores, down = scores;
      up[i] += h;
      down[i] -= h;
      double fd =
          (RankingLoss(up, correct) - RankingLoss(down, correct)) / (2 * h);
      double denom = std::max({std::abs(fd), std::abs(grad[i]), 1e-8});
      if (std::abs(fd - grad[i]) / denom > 1e-5) ok = false;
    }
  }

  // Overlap baseline: 10/10 on the hand-built suite, >= 80% on the
  // 41-case labeled sample (the bar is below the paper-scale model's
  // 38/41 on purpose: a token-overlap baseline gets no partial credit on
  // contexts with zero lexical overlap).
  auto run_suite = [&](const std::string& file, size_t expect_n) {
    std::vector<WsdExample> cases = LoadWsdCases(DataFile(file));
    if (cases.size() != expect_n) return -1;
    int right = 0;
    for (const auto& ex : cases) {
      int best = 0;
      double best_score = scorer.Score(ex.sentence, ex.word, ex.glosses[0]);
      for (size_t g = 1; g < ex.glosses.size(); ++g) {
        double s = scorer.Score(ex.sentence, ex.word, ex.glosses[g]);
        if (s > best_score) {
          best_score = s;
          best = static_cast<int>(g);
        }
      }
      if (best == ex.correct) ++right;
    }
    return right;
  };
  int ten = run_suite("wsd_cases_10.jsonl", 10);
  int big = run_suite("wsd_cases_41.jsonl", 41);
  if (ten != 10) ok = false;
  if (big < 0 || big < 33) ok = false;  // ceil(0.8 * 41)
  Report(7, "WSD distributions, losses, and baseline bars", ok,
         "baseline " + std::to_string(big) + "/41");
}

// ---- criterion 8: link-rate identity ---------------------------------------

void Criterion8() {
  TitleLexicon titles;
  titles.Add("Good");
  titles.Add("Bad", /*disambiguation=*/true);

  // 5000 tuples = 10000 entities; 8700 titled, 6612 of them unambiguous.
  // That reproduces the published rates: 0.87 * 0.76 = 0.6612 ~ 66%.
  std::vector<HasPartTuple> tuples(5000);
  int entity_index = 0;
  for (auto& t : tuples) {
    for (NormalizedEntity* e : {&t.whole, &t.part}) {
      e->name = "x";
      if (entity_index < 6612) e->title_hit = "Good";
      else if (entity_index < 8700) e->title_hit = "Bad";
      ++entity_index;
    }
  }
  LinkRateReport rep = ComputeLinkRates(tuples, titles);
  bool ok = rep.entities == 10000 && rep.titled == 8700 &&
            rep.unambiguous == 6612 && rep.linked == 6612;
  ok = ok && std::abs(rep.titled_rate() - 0.87) < 1e-12;
  ok = ok && std::abs(rep.unambiguous_rate() - 0.76) < 1e-12;
  ok = ok && std::abs(rep.linked_rate() - 0.87 * 0.76) < 1e-12;
  ok = ok && std::abs(rep.linked_rate() - 0.661) < 5e-4;

  // The identity holds on arbitrary random KBs, not just this one.
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<HasPartTuple> random_tuples(40);
    for (auto& t : random_tuples) {
      for (NormalizedEntity* e : {&t.whole, &t.part}) {
        int k = kind(rng);
        e->name = "x";
        if (k == 1) e->title_hit = "Good";
        if (k == 2) e->title_hit = "Bad";
      }
    }
    LinkRateReport r = ComputeLinkRates(random_tuples, titles);
    double lhs = r.linked_rate();
    double rhs = r.titled_rate() * r.unambiguous_rate();
    if (std::abs(lhs - rhs) > 1e-12) ok = false;
  }
  Report(8, "link rate factors as titled x unambiguous (0.87*0.76)", ok);
}

// ---- criterion 9: salience oracle ------------------------------------------

bool BruteForceCoMention(const std::vector<GenericSentence>& corpus,
                         const std::string& a, const std::string& b) {
  auto keys = [](const std::string& s) {
    std::vector<std::string> out;
    for (const auto& t : text::Tokenize(text::Lower(s))) {
      if (text::IsPunct(t)) continue;
      out.push_back(text::Singularize(t));
    }
    return out;
  };
  auto contains = [](const std::vector<std::string>& hay,
                     const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
      bool hit = true;
      for (size_t j = 0; j < needle.size(); ++j) {
        if (hay[i + j] != needle[j]) {
          hit = false;
          break;
        }
      }
      if (hit) return true;
    }
    return false;
  };
  std::vector<std::string> an = keys(a), bn = keys(b);
  for (const auto& s : corpus) {
    std::vector<std::string> sk = keys(s.text);
    if (contains(sk, an) && contains(sk, bn)) return true;
  }
  return false;
}

void Criterion9() {
  auto start = std::chrono::steady_clock::now();

  // 1,000 generated sentences; entity i co-occurs only with widget i, and
  // the figure sentence is planted at a fixed position.
  std::vector<GenericSentence> corpus;
  for (int i = 0; i < 999; ++i) {
    std::string id = "c" + std::to_string(i);
    std::string text = "Most gadget" + std::to_string(i) + " units have a widget" +
                       std::to_string(i) + " inside.";
    corpus.push_back({id, text, 0.9, {}, {}});
  }
  corpus.push_back({"fig1", "Tree bark from the Kapok tree.", 0.8, {}, {}});

  KnowledgeBase kb;
  auto tuple = [](const std::string& w, const std::string& p) {
    HasPartTuple t;
    t.whole.name = w;
    t.part.name = p;
    t.score = 0.999;
    t.count = 1;
    return t;
  };
  for (int i = 0; i < 40; ++i) {
    std::string n = std::to_string(i);
    kb.tuples.push_back(tuple("gadget" + n, "widget" + n));  // salient
    kb.tuples.push_back(
        tuple("gadget" + n, "widget" + std::to_string(i + 500)));  // not
  }
  kb.tuples.push_back(tuple("kapok tree", "bark"));

  CorpusIndex index = CorpusIndex::Build(corpus);
  bool ok = index.sentence_count() == 1000;

  // Index answers equal a brute-force linear scan, tuple by tuple.
  int oracle_salient = 0;
  for (const auto& t : kb.tuples) {
    bool brute = BruteForceCoMention(corpus, t.whole.name, t.part.name);
    bool indexed = index.CoMentioned(t.whole.name, t.part.name);
    if (brute != indexed) ok = false;
    if (brute) ++oracle_salient;
  }
  // Sampling the full KB must reproduce the oracle count exactly.
  SalienceResult full = SalienceRate(kb, index, kb.tuples.size(), 1);
  ok = ok && full.sampled == static_cast<int>(kb.tuples.size()) &&
       full.salient == oracle_salient && oracle_salient == 41;

  // The planted figure sentence makes (kapok tree, bark) salient.
  ok = ok && index.CoMentioned("kapok tree", "bark");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok = ok && secs < 5.0;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "%d/81 salient, %.2fs", oracle_salient,
                secs);
  Report(9, "salience index equals brute-force oracle", ok, detail);
}

// ---- criterion 10: end-to-end determinism ----------------------------------

void Criterion10() {
  auto start = std::chrono::steady_clock::now();
  ScratchDir dir;
  PipelineConfig config;
  config.corpus = DataFile("mini_corpus.jsonl");
  config.seeds_haspart = DataFile("seeds_haspart.tsv");
  config.seeds_other = DataFile("seeds_other.tsv");
  config.titles = DataFile("titles.txt");
  config.senses = DataFile("senses.tsv");
  config.cutoff = 0.9;

  config.out_dir = dir.File("run1");
  PipelineResult r1 = RunPipeline(config);
  config.out_dir = dir.File("run2");
  PipelineResult r2 = RunPipeline(config);

  bool ok = !r1.kb.tuples.empty();
  ok = ok && Slurp(r1.kb_tsv_path) == Slurp(r2.kb_tsv_path);
  ok = ok && Slurp(r1.kb_jsonl_path) == Slurp(r2.kb_jsonl_path);

  // Checkpoint-resume: drop the tail of run2 and resume; same bytes again.
  fs::remove(dir.File("run2") + "/03_raw.tsv");
  fs::remove(dir.File("run2") + "/04_aggregated.jsonl");
  fs::remove(dir.File("run2") + "/kb.tsv");
  fs::remove(dir.File("run2") + "/kb.jsonl");
  PipelineResult r3 = RunPipeline(config, /*resume=*/true);
  ok = ok && Slurp(r1.kb_tsv_path) == Slurp(r3.kb_tsv_path);
  ok = ok && Slurp(r1.kb_jsonl_path) == Slurp(r3.kb_jsonl_path);

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok = ok && secs < 30.0;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "%zu tuples, %.2fs",
                r1.kb.tuples.size(), secs);
  Report(10, "byte-identical KB across runs and resume", ok, detail);
}

// ---- criterion 11: KB round trip and query inverse -------------------------

void Criterion11() {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> name(0, 11);
  std::uniform_int_distribution<int> size(0, 14);
  const char* names[] = {"ant",  "bee",   "cat",  "dog",  "eel",  "fox",
                         "gnu",  "hen",   "ibis", "jay",  "kite", "lark"};

  ScratchDir dir;
  bool ok = true;
  int inverse_cases = 0;
  for (int trial = 0; trial < 250; ++trial) {
    KnowledgeBase kb;
    kb.header.corpus_id = "toy" + std::to_string(trial);
    kb.header.thresholds["cutoff"] = text::FormatDouble(unit(rng));
    int n = size(rng);
    for (int i = 0; i < n; ++i) {
      HasPartTuple t;
      t.whole.name = names[name(rng)];
      t.part.name = names[name(rng)];
      t.score = unit(rng);
      t.count = 1 + i % 3;
      t.support = {"s" + std::to_string(i)};
      t.best_support = "s" + std::to_string(i);
      if (i % 2) t.quantifiers = {{"some", 1}};
      if (i % 3 == 0) t.whole_sense = "w%1";
      if (i % 5 == 0) t.part_link = "Part";
      kb.tuples.push_back(std::move(t));
    }

    // Field-for-field round trip through both formats.
    WriteKbTsv(kb, dir.File("kb.tsv"));
    if (!(ReadKbTsv(dir.File("kb.tsv")) == kb)) ok = false;
    WriteKbJsonl(kb, dir.File("kb.jsonl"));
    if (!(ReadKbJsonl(dir.File("kb.jsonl")) == kb)) ok = false;

    // parts_of / wholes_of inverse property for every entity mentioned.
    for (const char* e : names) {
      for (const auto& t : PartsOf(kb, e)) {
        ++inverse_cases;
        bool found = false;
        for (const auto& w : WholesOf(kb, t.part.name)) {
          if (w == t) found = true;
        }
        if (!found) ok = false;
      }
      for (const auto& t : WholesOf(kb, e)) {
        ++inverse_cases;
        bool found = false;
        for (const auto& p : PartsOf(kb, t.whole.name)) {
          if (p == t) found = true;
        }
        if (!found) ok = false;
      }
    }
  }
  ok = ok && inverse_cases >= 1000;
  Report(11, "KB round trip and query inverse property", ok,
         std::to_string(inverse_cases) + " inverse cases");
}

}  // namespace

int main() {
  Criterion1();
  Criterion2();
  Criterion3();
  Criterion4();
  Criterion5();
  Criterion6();
  Criterion7();
  Criterion8();
  Criterion9();
  Criterion10();
  Criterion11();
  if (g_failures > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 11 criteria passed\n");
  return 0;
}
