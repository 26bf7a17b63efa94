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

#include "haspart/link.hpp"

#include <cmath>
#include <fstream>

#include "doctest.h"
#include "haspart/corpus.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace haspart;

namespace {

std::vector<WsdExample> LoadCases(const std::string& name) {
  std::ifstream in(testutil::DataFile(name));
  REQUIRE(in.good());
  std::vector<WsdExample> out;
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    WsdExample ex;
    ex.sentence = j.at("sentence").get<std::string>();
    ex.word = j.at("word").get<std::string>();
    for (const auto& g : j.at("glosses")) ex.glosses.push_back(g.get<std::string>());
    ex.correct = j.at("correct").get<int>();
    out.push_back(std::move(ex));
  }
  return out;
}

int BaselineCorrect(const std::vector<WsdExample>& cases) {
  OverlapScorer scorer;
  int right = 0;
  for (const auto& ex : cases) {
    double best = scorer.Score(ex.sentence, ex.word, ex.glosses[0]);
    int arg = 0;
    for (size_t i = 1; i < ex.glosses.size(); ++i) {
      double s = scorer.Score(ex.sentence, ex.word, ex.glosses[i]);
      if (s > best) {
        best = s;
        arg = static_cast<int>(i);
      }
    }
    if (arg == ex.correct) ++right;
  }
  return right;
}

}  // namespace

TEST_CASE("sense inventory loads in file order") {
  SenseInventory inv = SenseInventory::FromFile(testutil::DataFile("senses.tsv"));
  const std::vector<Sense>* bark = inv.Find("bark");
  REQUIRE(bark != nullptr);
  REQUIRE(bark->size() == 2);
  CHECK((*bark)[0].id == "bark%tree");
  CHECK((*bark)[1].id == "bark%dog");
  CHECK((*bark)[0].gloss.find("covering") != std::string::npos);
  CHECK(inv.Find("BARK") == bark);  // lemma lookup is case-insensitive
  CHECK(inv.Find("zorgon") == nullptr);

  testutil::TempDir dir;
  CHECK_THROWS_AS(SenseInventory::FromFile(dir.File("absent")), MissingFileError);
  std::string bad = dir.Write("bad.tsv", "bark\tonly-two-columns\n");
  CHECK_THROWS_AS(SenseInventory::FromFile(bad), MalformedRecordError);
}

TEST_CASE("overlap scorer counts shared content tokens") {
  OverlapScorer scorer;
  // Shared: "trunk", "tree" (singularized, stopwords dropped).
  CHECK(scorer.Score("Thick bark protects the trunk of the tree.", "bark",
                     "the tough outer covering of the trunk of a tree") ==
        doctest::Approx(2.0));
  // The target word itself never counts.
  CHECK(scorer.Score("The bark was loud.", "bark",
                     "a bark is the loud cry of a dog") ==
        doctest::Approx(1.0));  // only "loud"
  // No overlap.
  CHECK(scorer.Score("It was nice.", "bark",
                     "the tough outer covering of the trunk of a tree") ==
        doctest::Approx(0.0));
}

TEST_CASE("softmax and ranking loss") {
  std::vector<double> u = Softmax({1.0, 1.0, 1.0, 1.0});
  for (double p : u) CHECK(p == doctest::Approx(0.25));
  double total = 0.0;
  for (double p : Softmax({0.2, -3.0, 5.0})) total += p;
  CHECK(total == doctest::Approx(1.0));
  // Shift invariance.
  CHECK(Softmax({100.0, 101.0})[1] == doctest::Approx(Softmax({0.0, 1.0})[1]));

  // Uniform scores over four candidates cost exactly ln 4.
  CHECK(RankingLoss({0.0, 0.0, 0.0, 0.0}, 2) == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(RankingLoss({0.0, 0.0}, 2), IndexOutOfRangeError);
  CHECK_THROWS_AS(RankingLoss({0.0, 0.0}, -1), IndexOutOfRangeError);
  CHECK_THROWS_AS(RankingLossGradient({0.0}, 1), IndexOutOfRangeError);
}

TEST_CASE("ranking loss gradient matches finite differences") {
  std::mt19937 rng(88);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> scores(5);
    for (double& s : scores) s = dist(rng);
    int correct = trial % 5;
    std::vector<double> grad = RankingLossGradient(scores, correct);
    const double h = 1e-7;
    for (size_t i = 0; i < scores.size(); ++i) {
      std::vector<double> up = scores, down = scores;
      up[i] += h;
      down[i] -= h;
      double fd = (RankingLoss(up, correct) - RankingLoss(down, correct)) / (2 * h);
      double denom = std::max({std::abs(fd), std::abs(grad[i]), 1e-8});
      CHECK(std::abs(fd - grad[i]) / denom < 1e-5);
    }
    // The gradient of a softmax loss sums to zero.
    double sum = 0.0;
    for (double g : grad) sum += g;
    CHECK(sum == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("sense ranking returns a distribution and honors ties") {
  SenseInventory inv = SenseInventory::FromFile(testutil::DataFile("senses.tsv"));
  OverlapScorer scorer;
  SenseAssignment a = RankSenses("Thick bark protects the trunk of the tree.",
                                 "bark", inv, scorer);
  CHECK(a.lemma == "bark");
  CHECK(a.chosen == "bark%tree");
  REQUIRE(a.distribution.size() == 2);
  CHECK(a.distribution[0] + a.distribution[1] == doctest::Approx(1.0));
  CHECK(a.distribution[0] > a.distribution[1]);

  // No evidence either way: the tie goes to the first inventory sense.
  SenseAssignment tie = RankSenses("It was nice.", "bark", inv, scorer);
  CHECK(tie.chosen == "bark%tree");
  CHECK(tie.distribution[0] == doctest::Approx(0.5));

  CHECK_THROWS_AS(RankSenses("x", "zorgon", inv, scorer), UnknownLemmaError);
}

TEST_CASE("overlap baseline solves the ten-case suite exactly") {
  std::vector<WsdExample> cases = LoadCases("wsd_cases_10.jsonl");
  REQUIRE(cases.size() == 10);
  CHECK(BaselineCorrect(cases) == 10);
}

TEST_CASE("overlap baseline clears 80 percent on the labeled sample") {
  std::vector<WsdExample> cases = LoadCases("wsd_cases_41.jsonl");
  REQUIRE(cases.size() == 41);
  int right = BaselineCorrect(cases);
  CHECK(right == 37);  // frozen; four contexts carry no lexical signal
  CHECK(static_cast<double>(right) / cases.size() >= 0.80);
}

TEST_CASE("toy encoder training reduces the ranking loss") {
  std::vector<WsdExample> cases = LoadCases("wsd_cases_10.jsonl");
  WsdTrainConfig config;
  config.learning_rate = 0.5;
  config.epochs = 200;
  ToyEncoderScorer untrained(config);
  // With no embeddings every gloss scores 0, so the loss is the mean of
  // ln(candidate count) over the cases.
  double before = untrained.DatasetLoss(cases);
  double expected = 0.0;
  for (const auto& ex : cases) expected += std::log(double(ex.glosses.size()));
  CHECK(before == doctest::Approx(expected / cases.size()));

  ToyEncoderScorer trained = ToyEncoderScorer::Train(cases, config);
  double after = trained.DatasetLoss(cases);
  CHECK(after < before * 0.5);

  // Deterministic for a fixed seed.
  ToyEncoderScorer again = ToyEncoderScorer::Train(cases, config);
  CHECK(again.DatasetLoss(cases) == after);

  // Degenerate inputs are rejected.
  WsdExample one_gloss{"x", "bark", {"a gloss"}, 0};
  CHECK_THROWS_AS(ToyEncoderScorer::Train({one_gloss}, config),
                  DegenerateExampleError);
  WsdExample bad_index{"x", "bark", {"g1", "g2"}, 5};
  CHECK_THROWS_AS(ToyEncoderScorer::Train({bad_index}, config),
                  IndexOutOfRangeError);
}

TEST_CASE("tuple disambiguation") {
  SenseInventory inv;
  inv.Add("gill", "gill%1", "organ for breathing under water");
  inv.Add("bark", "bark%tree", "the tough outer covering of the trunk of a tree");
  inv.Add("bark", "bark%dog", "the sharp loud cry of a dog");
  OverlapScorer scorer;

  HasPartTuple t;
  t.whole.name = "kapok tree";  // not in the inventory
  t.part.name = "bark";
  DisambiguationReport rep;
  DisambiguateTuple(t, "Kapok trees have thick bark covering the trunk.", inv,
                    scorer, &rep);
  CHECK_FALSE(t.whole_sense.has_value());
  CHECK(t.part_sense == "bark%tree");
  CHECK(rep.assigned == 1);
  CHECK(rep.monosemous == 0);
  CHECK(rep.omitted == std::vector<std::string>{"kapok tree"});

  HasPartTuple m;
  m.whole.name = "bark";
  m.part.name = "gill";  // monosemous: assigned without scoring
  DisambiguationReport rep2;
  DisambiguateTuple(m, "The dog gave a loud cry, a bark.", inv, scorer, &rep2);
  CHECK(m.whole_sense == "bark%dog");
  CHECK(m.part_sense == "gill%1");
  CHECK(rep2.monosemous == 1);
  CHECK(rep2.assigned == 2);
}

TEST_CASE("wikipedia linking skips disambiguation pages") {
  TitleLexicon titles;
  titles.Add("Gill");
  titles.Add("Mercury", /*disambiguation=*/true);

  NormalizedEntity gill{"gill", std::nullopt, {}, "Gill"};
  CHECK(LinkWikipedia(gill, titles) == "Gill");

  NormalizedEntity mercury{"mercury", std::nullopt, {}, "Mercury"};
  CHECK_FALSE(LinkWikipedia(mercury, titles).has_value());

  NormalizedEntity miss{"carapace", std::nullopt, {}, std::nullopt};
  CHECK_FALSE(LinkWikipedia(miss, titles).has_value());
}

TEST_CASE("link rates factor exactly") {
  TitleLexicon titles;
  titles.Add("Gill");
  titles.Add("Mercury", /*disambiguation=*/true);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<HasPartTuple> tuples(50);
  auto entity = [&](int k) {
    NormalizedEntity e;
    e.name = "x";
    if (k == 1) e.title_hit = "Gill";
    if (k == 2) e.title_hit = "Mercury";
    return e;
  };
  for (auto& t : tuples) {
    t.whole = entity(kind(rng));
    t.part = entity(kind(rng));
  }
  LinkRateReport rep = ComputeLinkRates(tuples, titles);
  CHECK(rep.entities == 100);
  CHECK(rep.linked == rep.unambiguous);
  CHECK(rep.linked_rate() ==
        doctest::Approx(rep.titled_rate() * rep.unambiguous_rate()).epsilon(1e-12));
}
