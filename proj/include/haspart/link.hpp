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

#ifndef HASPART_LINK_HPP_
#define HASPART_LINK_HPP_

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "haspart/aggregate.hpp"

namespace haspart {

struct Sense {
  std::string id;
  std::string gloss;
};

// lemma -> ordered candidate senses with glosses.
class SenseInventory {
 public:
  SenseInventory() = default;
  // TSV: lemma <TAB> sense_id <TAB> gloss, one sense per line; inventory
  // order is file order.
  static SenseInventory FromFile(const std::string& path);

  void Add(const std::string& lemma, const std::string& sense_id,
           const std::string& gloss);
  const std::vector<Sense>* Find(const std::string& lemma) const;
  size_t size() const { return senses_.size(); }

 private:
  std::unordered_map<std::string, std::vector<Sense>> senses_;
};

struct UnknownLemmaError : std::runtime_error {
  explicit UnknownLemmaError(const std::string& lemma)
      : std::runtime_error("lemma not in sense inventory: " + lemma) {}
};
struct IndexOutOfRangeError : std::runtime_error {
  IndexOutOfRangeError() : std::runtime_error("correct-gloss index out of range") {}
};
struct DegenerateExampleError : std::runtime_error {
  DegenerateExampleError()
      : std::runtime_error("training example has fewer than 2 candidate glosses") {}
};

// Scores one candidate gloss of a target word against a context sentence.
class GlossScorer {
 public:
  virtual ~GlossScorer() = default;
  virtual double Score(const std::string& context, const std::string& word,
                       const std::string& gloss) const = 0;
};

// Lesk-style baseline: count of content tokens shared between the context
// sentence and the gloss (lowercased, singularized, stopwords removed).
class OverlapScorer : public GlossScorer {
 public:
  OverlapScorer() = default;
  explicit OverlapScorer(std::set<std::string> stopwords)
      : stopwords_(std::move(stopwords)) {}
  static std::set<std::string> DefaultStopwords();

  double Score(const std::string& context, const std::string& word,
               const std::string& gloss) const override;

 private:
  std::set<std::string> stopwords_ = DefaultStopwords();
};

struct WsdExample {
  std::string sentence;
  std::string word;
  std::vector<std::string> glosses;
  int correct = 0;
};

struct WsdTrainConfig {
  int embedding_dim = 16;
  double learning_rate = 0.1;
  int epochs = 40;
  unsigned seed = 7;
};

// Trainable toy scorer: bag-of-words embeddings for context and gloss,
// scored by their dot product. Trained with the gloss-ranking loss.
class ToyEncoderScorer : public GlossScorer {
 public:
  explicit ToyEncoderScorer(WsdTrainConfig config) : config_(config) {}

  double Score(const std::string& context, const std::string& word,
               const std::string& gloss) const override;

  static ToyEncoderScorer Train(const std::vector<WsdExample>& examples,
                                const WsdTrainConfig& config);

  // Mean ranking loss over a dataset (used to assert descent).
  double DatasetLoss(const std::vector<WsdExample>& examples) const;

 private:
  std::vector<double> Encode(const std::vector<std::string>& tokens) const;
  std::vector<double>* Embedding(const std::string& token);
  const std::vector<double>* Embedding(const std::string& token) const;

  WsdTrainConfig config_;
  std::unordered_map<std::string, std::vector<double>> embeddings_;
};

struct SenseAssignment {
  std::string lemma;
  std::string chosen;                 // sense id, argmax of the distribution
  std::vector<double> distribution;   // inventory order, sums to 1
};

// Softmax over per-gloss scores; ties broken by inventory order.
SenseAssignment RankSenses(const std::string& sentence, const std::string& lemma,
                           const SenseInventory& inventory,
                           const GlossScorer& scorer);

std::vector<double> Softmax(const std::vector<double>& scores);

// -log softmax(scores)[correct].
double RankingLoss(const std::vector<double>& scores, int correct);
// Gradient of RankingLoss w.r.t. the scores: softmax(scores) - onehot.
std::vector<double> RankingLossGradient(const std::vector<double>& scores,
                                        int correct);

struct DisambiguationReport {
  int assigned = 0;
  int monosemous = 0;
  std::vector<std::string> omitted;  // lemmas missing from the inventory
};

// Assigns senses to both tuple arguments, using the tuple's best support
// sentence as context. Monosemous lemmas are assigned directly; lemmas
// missing from the inventory leave the tuple unchanged.
void DisambiguateTuple(HasPartTuple& tuple, const std::string& context_sentence,
                       const SenseInventory& inventory, const GlossScorer& scorer,
                       DisambiguationReport* report = nullptr);

// Links an entity to its title hit unless the title is flagged as a
// disambiguation page.
std::optional<std::string> LinkWikipedia(const NormalizedEntity& entity,
                                         const TitleLexicon& titles);

struct LinkRateReport {
  int entities = 0;
  int titled = 0;       // entities with a title hit, disambiguation included
  int unambiguous = 0;  // titled entities whose title is not a disambiguation
  int linked = 0;

  double titled_rate() const { return entities ? double(titled) / entities : 0.0; }
  double unambiguous_rate() const {
    return titled ? double(unambiguous) / titled : 0.0;
  }
  double linked_rate() const { return entities ? double(linked) / entities : 0.0; }
};

// Over the entity multiset of a KB (two entities per tuple). By
// construction linked = unambiguous, so linked_rate factors exactly into
// titled_rate * unambiguous_rate.
LinkRateReport ComputeLinkRates(const std::vector<HasPartTuple>& tuples,
                                const TitleLexicon& titles);

}  // namespace haspart

#endif  // HASPART_LINK_HPP_
