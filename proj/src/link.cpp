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

#include <algorithm>
#include <cmath>
#include <fstream>

#include "haspart/corpus.hpp"
#include "haspart/text.hpp"

namespace haspart {

namespace {

std::vector<std::string> ContentTokens(const std::string& s,
                                       const std::set<std::string>& stopwords) {
  std::vector<std::string> out;
  for (const auto& t : text::Tokenize(text::Lower(s))) {
    if (text::IsPunct(t)) continue;
    std::string w = text::Singularize(t);
    if (stopwords.count(w)) continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

SenseInventory SenseInventory::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  SenseInventory inv;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    size_t t1 = line.find('\t');
    size_t t2 = (t1 == std::string::npos) ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw MalformedRecordError(line_number, "expected lemma<TAB>sense<TAB>gloss");
    std::string gloss = line.substr(t2 + 1);
    if (gloss.empty()) throw MalformedRecordError(line_number, "empty gloss");
    inv.Add(line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), gloss);
  }
  return inv;
}

void SenseInventory::Add(const std::string& lemma, const std::string& sense_id,
                         const std::string& gloss) {
  senses_[text::Lower(lemma)].push_back({sense_id, gloss});
}

const std::vector<Sense>* SenseInventory::Find(const std::string& lemma) const {
  auto it = senses_.find(text::Lower(lemma));
  if (it == senses_.end()) return nullptr;
  return &it->second;
}

std::set<std::string> OverlapScorer::DefaultStopwords() {
  return {"a",  "an", "the", "of", "to", "in", "on",  "at",  "and", "or",
          "is", "are", "be",  "it", "that", "this", "with", "for", "by", "a"};
}

double OverlapScorer::Score(const std::string& context, const std::string& word,
                            const std::string& gloss) const {
  std::set<std::string> context_tokens;
  std::string target = text::Singularize(text::Lower(word));
  for (auto& t : ContentTokens(context, stopwords_)) {
    if (t == target) continue;  // the target itself carries no signal
    context_tokens.insert(std::move(t));
  }
  std::set<std::string> gloss_tokens;
  for (auto& t : ContentTokens(gloss, stopwords_)) gloss_tokens.insert(std::move(t));
  double overlap = 0.0;
  for (const auto& t : gloss_tokens) {
    if (context_tokens.count(t)) overlap += 1.0;
  }
  return overlap;
}

std::vector<double> Softmax(const std::vector<double>& scores) {
  double max_score = *std::max_element(scores.begin(), scores.end());
  std::vector<double> out(scores.size());
  double total = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    out[i] = std::exp(scores[i] - max_score);
    total += out[i];
  }
  for (double& p : out) p /= total;
  return out;
}

double RankingLoss(const std::vector<double>& scores, int correct) {
  if (correct < 0 || correct >= static_cast<int>(scores.size()))
    throw IndexOutOfRangeError();
  return -std::log(Softmax(scores)[correct]);
}

std::vector<double> RankingLossGradient(const std::vector<double>& scores,
                                        int correct) {
  if (correct < 0 || correct >= static_cast<int>(scores.size()))
    throw IndexOutOfRangeError();
  std::vector<double> grad = Softmax(scores);
  grad[correct] -= 1.0;
  return grad;
}

SenseAssignment RankSenses(const std::string& sentence, const std::string& lemma,
                           const SenseInventory& inventory,
                           const GlossScorer& scorer) {
  const std::vector<Sense>* senses = inventory.Find(lemma);
  if (!senses || senses->empty()) throw UnknownLemmaError(lemma);
  std::vector<double> scores;
  scores.reserve(senses->size());
  for (const auto& sense : *senses)
    scores.push_back(scorer.Score(sentence, lemma, sense.gloss));
  std::vector<double> dist = Softmax(scores);
  size_t best = 0;
  for (size_t i = 1; i < dist.size(); ++i) {
    if (dist[i] > dist[best]) best = i;  // strict: ties keep inventory order
  }
  return {text::Lower(lemma), (*senses)[best].id, std::move(dist)};
}

// ---- Toy trainable encoder ----

std::vector<double>* ToyEncoderScorer::Embedding(const std::string& token) {
  auto it = embeddings_.find(token);
  return it == embeddings_.end() ? nullptr : &it->second;
}

const std::vector<double>* ToyEncoderScorer::Embedding(
    const std::string& token) const {
  auto it = embeddings_.find(token);
  return it == embeddings_.end() ? nullptr : &it->second;
}

std::vector<double> ToyEncoderScorer::Encode(
    const std::vector<std::string>& tokens) const {
  std::vector<double> v(config_.embedding_dim, 0.0);
  int n = 0;
  for (const auto& t : tokens) {
    const std::vector<double>* e = Embedding(t);
    if (!e) continue;
    for (int d = 0; d < config_.embedding_dim; ++d) v[d] += (*e)[d];
    ++n;
  }
  if (n > 0) {
    for (double& x : v) x /= n;
  }
  return v;
}

double ToyEncoderScorer::Score(const std::string& context,
                               const std::string& word,
                               const std::string& gloss) const {
  static const std::set<std::string> kNoStopwords;
  std::vector<std::string> ctx = ContentTokens(context + " " + word, kNoStopwords);
  std::vector<std::string> gls = ContentTokens(gloss, kNoStopwords);
  std::vector<double> c = Encode(ctx);
  std::vector<double> g = Encode(gls);
  double dot = 0.0;
  for (int d = 0; d < config_.embedding_dim; ++d) dot += c[d] * g[d];
  return dot;
}

double ToyEncoderScorer::DatasetLoss(const std::vector<WsdExample>& examples) const {
  double total = 0.0;
  for (const auto& ex : examples) {
    std::vector<double> scores;
    for (const auto& gloss : ex.glosses)
      scores.push_back(Score(ex.sentence, ex.word, gloss));
    total += RankingLoss(scores, ex.correct);
  }
  return total / static_cast<double>(examples.size());
}

ToyEncoderScorer ToyEncoderScorer::Train(const std::vector<WsdExample>& examples,
                                         const WsdTrainConfig& config) {
  for (const auto& ex : examples) {
    if (ex.glosses.size() < 2) throw DegenerateExampleError();
    if (ex.correct < 0 || ex.correct >= static_cast<int>(ex.glosses.size()))
      throw IndexOutOfRangeError();
  }
  ToyEncoderScorer scorer(config);
  static const std::set<std::string> kNoStopwords;

  // Pre-tokenize and initialize embeddings in a deterministic order.
  struct Prepared {
    std::vector<std::string> context;
    std::vector<std::vector<std::string>> glosses;
    int correct;
  };
  std::vector<Prepared> data;
  std::mt19937 rng(config.seed);
  std::normal_distribution<double> init(0.0, 0.1);
  auto intern = [&](const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) {
      auto [it, inserted] = scorer.embeddings_.try_emplace(t);
      if (inserted) {
        it->second.resize(config.embedding_dim);
        for (double& x : it->second) x = init(rng);
      }
    }
  };
  for (const auto& ex : examples) {
    Prepared p;
    p.context = ContentTokens(ex.sentence + " " + ex.word, kNoStopwords);
    for (const auto& g : ex.glosses) p.glosses.push_back(ContentTokens(g, kNoStopwords));
    p.correct = ex.correct;
    intern(p.context);
    for (const auto& g : p.glosses) intern(g);
    data.push_back(std::move(p));
  }

  const int dim = config.embedding_dim;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (const auto& ex : data) {
      std::vector<double> c = scorer.Encode(ex.context);
      std::vector<std::vector<double>> g;
      std::vector<double> scores;
      for (const auto& gloss : ex.glosses) {
        g.push_back(scorer.Encode(gloss));
        double dot = 0.0;
        for (int d = 0; d < dim; ++d) dot += c[d] * g.back()[d];
        scores.push_back(dot);
      }
      std::vector<double> dscore = RankingLossGradient(scores, ex.correct);

      // d loss / d c = sum_o dscore[o] * g_o ; d loss / d g_o = dscore[o] * c
      std::vector<double> dc(dim, 0.0);
      for (size_t o = 0; o < g.size(); ++o) {
        for (int d = 0; d < dim; ++d) dc[d] += dscore[o] * g[o][d];
      }
      if (!ex.context.empty()) {
        double scale = config.learning_rate / ex.context.size();
        for (const auto& t : ex.context) {
          std::vector<double>& e = *scorer.Embedding(t);
          for (int d = 0; d < dim; ++d) e[d] -= scale * dc[d];
        }
      }
      for (size_t o = 0; o < ex.glosses.size(); ++o) {
        if (ex.glosses[o].empty()) continue;
        double scale = config.learning_rate * dscore[o] / ex.glosses[o].size();
        for (const auto& t : ex.glosses[o]) {
          std::vector<double>& e = *scorer.Embedding(t);
          for (int d = 0; d < dim; ++d) e[d] -= scale * c[d];
        }
      }
    }
  }
  return scorer;
}

void DisambiguateTuple(HasPartTuple& tuple, const std::string& context_sentence,
                       const SenseInventory& inventory, const GlossScorer& scorer,
                       DisambiguationReport* report) {
  DisambiguationReport local;
  DisambiguationReport& rep = report ? *report : local;
  auto assign = [&](const std::string& lemma) -> std::optional<std::string> {
    const std::vector<Sense>* senses = inventory.Find(lemma);
    if (!senses || senses->empty()) {
      rep.omitted.push_back(lemma);
      return std::nullopt;
    }
    if (senses->size() == 1) {
      ++rep.monosemous;
      ++rep.assigned;
      return (*senses)[0].id;
    }
    SenseAssignment a = RankSenses(context_sentence, lemma, inventory, scorer);
    ++rep.assigned;
    return a.chosen;
  };
  tuple.whole_sense = assign(tuple.whole.name);
  tuple.part_sense = assign(tuple.part.name);
}

std::optional<std::string> LinkWikipedia(const NormalizedEntity& entity,
                                         const TitleLexicon& titles) {
  if (!entity.title_hit) return std::nullopt;
  if (titles.IsDisambiguation(*entity.title_hit)) return std::nullopt;
  return entity.title_hit;
}

LinkRateReport ComputeLinkRates(const std::vector<HasPartTuple>& tuples,
                                const TitleLexicon& titles) {
  LinkRateReport rep;
  auto visit = [&](const NormalizedEntity& e) {
    ++rep.entities;
    if (!e.title_hit) return;
    ++rep.titled;
    if (!titles.IsDisambiguation(*e.title_hit)) {
      ++rep.unambiguous;
      ++rep.linked;
    }
  };
  for (const auto& t : tuples) {
    visit(t.whole);
    visit(t.part);
  }
  return rep;
}

}  // namespace haspart
