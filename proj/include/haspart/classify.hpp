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

#ifndef HASPART_CLASSIFY_HPP_
#define HASPART_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "haspart/chunk.hpp"
#include "haspart/corpus.hpp"

namespace haspart {

struct CandidatePair {
  std::string sentence_id;
  NounChunk arg1;  // candidate whole
  NounChunk arg2;  // candidate part
};

struct MarkedSentence {
  std::string text;
};

enum class Label { kHasPart, kNotHasPart };
enum class Provenance { kSeedMatch, kReversal, kOtherRelation, kManual };

struct LabeledExample {
  CandidatePair pair;
  Label label = Label::kNotHasPart;
  Provenance provenance = Provenance::kManual;
};

struct RawTuple {
  std::string whole_text;
  std::string part_text;
  std::string sentence_id;
  double score = 0.0;
};

struct SpanOutOfRangeError : std::runtime_error {
  SpanOutOfRangeError() : std::runtime_error("argument span outside sentence") {}
};
struct EmptySeedsError : std::runtime_error {
  EmptySeedsError() : std::runtime_error("empty seed pair list") {}
};
struct DegenerateDatasetError : std::runtime_error {
  DegenerateDatasetError()
      : std::runtime_error("training set contains a single label") {}
};

// All ordered pairs of distinct chunks; the classifier decides direction.
std::vector<CandidatePair> EnumeratePairs(const std::vector<NounChunk>& chunks);

// Classifier input rendering: leading [CLS] marker, then the sentence text
// with [ARG1-B]/[ARG1-E] and [ARG2-B]/[ARG2-E] around the argument spans.
MarkedSentence MarkArguments(const GenericSentence& sentence,
                             const CandidatePair& pair);

// Removes the five markers; inverse of MarkArguments on the text.
std::string StripMarkers(const std::string& marked);

// Character offsets of each token within text, in order. Throws if a token
// cannot be located.
std::vector<std::pair<size_t, size_t>> TokenCharSpans(
    const std::string& text, const std::vector<std::string>& tokens);

// Case-insensitive token-boundary match of name against the chunk text,
// with plural normalization on the chunk head token.
bool ChunkMatchesName(const NounChunk& chunk, const std::string& name);

struct NamePair {
  std::string first;
  std::string second;
};

// Distant-supervision dataset: positives from sentences whose chunks match
// a seed (whole, part) pair; one reversal negative per positive; extra
// negatives from sentences co-mentioning other-relation pairs.
std::vector<LabeledExample> BuildDistantDataset(
    const std::vector<GenericSentence>& corpus,
    const std::vector<NamePair>& seed_haspart,
    const std::vector<NamePair>& other_relation_pairs,
    const PosTagger& tagger);

// ---- Featurized logistic scorer ----

struct TrainConfig {
  double learning_rate = 0.2;
  int epochs = 30;
  unsigned seed = 13;
};

// Sparse binary feature vector: sorted unique feature indices.
using FeatureVec = std::vector<int>;

class ScorerModel {
 public:
  ScorerModel() = default;

  // Feature strings for a marked argument pair: argument head words,
  // token n-grams (n<=2) between the spans and in a 2-token window outside
  // each span, and an argument order flag.
  static std::vector<std::string> FeatureStrings(
      const std::vector<std::string>& tokens, const CandidatePair& pair);

  // Looks up known features; unknown features are dropped (vocabulary is
  // frozen after training).
  FeatureVec Featurize(const std::vector<std::string>& tokens,
                       const CandidatePair& pair) const;

  double ScoreFeatures(const FeatureVec& features) const;
  double Score(const GenericSentence& sentence, const CandidatePair& pair) const;

  // Mean binary cross-entropy and its gradient over a featurized dataset.
  // Exposed so the gradient can be checked against finite differences.
  double Loss(const std::vector<FeatureVec>& xs,
              const std::vector<int>& ys) const;
  std::vector<double> LossGradient(const std::vector<FeatureVec>& xs,
                                   const std::vector<int>& ys) const;

  const std::map<std::string, int>& vocabulary() const { return vocab_; }
  std::vector<double>& weights() { return weights_; }
  const std::vector<double>& weights() const { return weights_; }
  const TrainConfig& config() const { return config_; }

  void Save(const std::string& path) const;
  static ScorerModel Load(const std::string& path);

  static ScorerModel Train(const std::vector<GenericSentence>& corpus,
                           const std::vector<LabeledExample>& examples,
                           const TrainConfig& config);

 private:
  friend ScorerModel TrainOnFeatures(std::vector<FeatureVec> xs,
                                     std::vector<int> ys,
                                     std::map<std::string, int> vocab,
                                     const TrainConfig& config);
  std::map<std::string, int> vocab_;
  std::vector<double> weights_;  // |vocab_| + 1, bias last
  TrainConfig config_;
};

// Training entry usable with pre-featurized data (tests use this for the
// finite-difference and separability checks).
ScorerModel TrainOnFeatures(std::vector<FeatureVec> xs, std::vector<int> ys,
                            std::map<std::string, int> vocab,
                            const TrainConfig& config);

// Scoring contract shared by the built-in model and the external scorer.
class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual double ScorePair(const GenericSentence& sentence,
                           const CandidatePair& pair) = 0;
};

class BuiltinScorer : public Scorer {
 public:
  explicit BuiltinScorer(ScorerModel model) : model_(std::move(model)) {}
  double ScorePair(const GenericSentence& sentence,
                   const CandidatePair& pair) override {
    return model_.Score(sentence, pair);
  }
  const ScorerModel& model() const { return model_; }

 private:
  ScorerModel model_;
};

struct ExtractionReport {
  int sentences = 0;
  int pairs_scored = 0;
  std::vector<std::string> skipped;  // sentence id + reason
};

// Scores every ordered chunk pair of every sentence; keeps scores strictly
// greater than keep_threshold. Per-sentence failures are reported and
// extraction continues.
std::vector<RawTuple> ExtractCorpus(Scorer& scorer,
                                    const std::vector<GenericSentence>& corpus,
                                    const PosTagger& tagger,
                                    double keep_threshold = 0.5,
                                    ExtractionReport* report = nullptr);

// Labeled-example file round trip (line-delimited records).
void WriteLabeledExamples(const std::vector<LabeledExample>& examples,
                          const std::string& path);
std::vector<LabeledExample> ReadLabeledExamples(const std::string& path);

std::string LabelName(Label label);
std::string ProvenanceName(Provenance p);

}  // namespace haspart

#endif  // HASPART_CLASSIFY_HPP_
