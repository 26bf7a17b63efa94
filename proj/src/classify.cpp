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

#include "haspart/classify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "haspart/text.hpp"
#include "json.hpp"

namespace haspart {

using nlohmann::json;

namespace {

constexpr const char* kClsMarker = "[CLS] ";
constexpr const char* kArg1Begin = "[ARG1-B]";
constexpr const char* kArg1End = "[ARG1-E]";
constexpr const char* kArg2Begin = "[ARG2-B]";
constexpr const char* kArg2End = "[ARG2-E]";

double Sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Lowercased, head-singularized token sequence of a name.
std::vector<std::string> NameKeyTokens(const std::string& name) {
  std::vector<std::string> tokens = text::Tokenize(text::Lower(name));
  std::vector<std::string> out;
  for (auto& t : tokens) {
    if (text::IsPunct(t)) continue;
    out.push_back(std::move(t));
  }
  if (!out.empty()) out.back() = text::Singularize(out.back());
  return out;
}

// Token positions where the (multiword) name matches on token boundaries,
// comparing lowercased tokens with singularized final name token.
std::vector<int> FindNameSpans(const std::vector<std::string>& tokens,
                               const std::vector<std::string>& name_tokens) {
  std::vector<int> starts;
  if (name_tokens.empty()) return starts;
  const int n = static_cast<int>(tokens.size());
  const int m = static_cast<int>(name_tokens.size());
  for (int i = 0; i + m <= n; ++i) {
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      std::string tok = text::Lower(tokens[i + j]);
      if (j == m - 1) tok = text::Singularize(tok);
      if (tok != name_tokens[j]) {
        ok = false;
        break;
      }
    }
    if (ok) starts.push_back(i);
  }
  return starts;
}

}  // namespace

std::vector<CandidatePair> EnumeratePairs(const std::vector<NounChunk>& chunks) {
  std::vector<CandidatePair> pairs;
  for (size_t i = 0; i < chunks.size(); ++i) {
    for (size_t j = 0; j < chunks.size(); ++j) {
      if (i == j) continue;
      pairs.push_back({chunks[i].sentence_id, chunks[i], chunks[j]});
    }
  }
  return pairs;
}

std::vector<std::pair<size_t, size_t>> TokenCharSpans(
    const std::string& text, const std::vector<std::string>& tokens) {
  std::vector<std::pair<size_t, size_t>> spans;
  size_t pos = 0;
  for (const auto& tok : tokens) {
    size_t found = text.find(tok, pos);
    if (found == std::string::npos)
      throw std::runtime_error("token '" + tok + "' not found in sentence text");
    spans.emplace_back(found, found + tok.size());
    pos = found + tok.size();
  }
  return spans;
}

MarkedSentence MarkArguments(const GenericSentence& sentence,
                             const CandidatePair& pair) {
  std::vector<std::string> tokens = SentenceTokens(sentence);
  const int n = static_cast<int>(tokens.size());
  auto valid = [n](const NounChunk& c) {
    return c.start >= 0 && c.start < c.end && c.end <= n;
  };
  if (!valid(pair.arg1) || !valid(pair.arg2)) throw SpanOutOfRangeError();

  auto spans = TokenCharSpans(sentence.text, tokens);
  struct Insertion {
    size_t pos;
    const char* marker;
    int order;  // begin markers before end markers at equal positions
  };
  std::vector<Insertion> ins = {
      {spans[pair.arg1.start].first, kArg1Begin, 0},
      {spans[pair.arg1.end - 1].second, kArg1End, 1},
      {spans[pair.arg2.start].first, kArg2Begin, 0},
      {spans[pair.arg2.end - 1].second, kArg2End, 1},
  };
  // Insert right to left so earlier offsets stay valid.
  std::sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) {
    if (a.pos != b.pos) return a.pos > b.pos;
    return a.order > b.order;
  });
  std::string out = sentence.text;
  for (const auto& m : ins) out.insert(m.pos, m.marker);
  return MarkedSentence{std::string(kClsMarker) + out};
}

std::string StripMarkers(const std::string& marked) {
  std::string out = marked;
  if (out.rfind(kClsMarker, 0) == 0) out.erase(0, std::string(kClsMarker).size());
  for (const char* m : {kArg1Begin, kArg1End, kArg2Begin, kArg2End}) {
    size_t pos = out.find(m);
    if (pos != std::string::npos) out.erase(pos, std::string(m).size());
  }
  return out;
}

bool ChunkMatchesName(const NounChunk& chunk, const std::string& name) {
  std::vector<std::string> chunk_tokens = text::Tokenize(chunk.text);
  return !FindNameSpans(chunk_tokens, NameKeyTokens(name)).empty();
}

std::vector<LabeledExample> BuildDistantDataset(
    const std::vector<GenericSentence>& corpus,
    const std::vector<NamePair>& seed_haspart,
    const std::vector<NamePair>& other_relation_pairs,
    const PosTagger& tagger) {
  if (seed_haspart.empty()) throw EmptySeedsError();
  std::vector<LabeledExample> out;

  for (const auto& sentence : corpus) {
    std::vector<NounChunk> chunks;
    try {
      chunks = ExtractChunks(sentence, tagger);
    } catch (const UntaggableSentenceError&) {
      continue;
    }
    // Positives: chunk pairs matching a seed (whole, part), plus one
    // reversal negative each.
    for (const auto& seed : seed_haspart) {
      for (const auto& whole_chunk : chunks) {
        if (!ChunkMatchesName(whole_chunk, seed.first)) continue;
        for (const auto& part_chunk : chunks) {
          if (&part_chunk == &whole_chunk) continue;
          if (!ChunkMatchesName(part_chunk, seed.second)) continue;
          out.push_back({{sentence.id, whole_chunk, part_chunk},
                         Label::kHasPart,
                         Provenance::kSeedMatch});
          out.push_back({{sentence.id, part_chunk, whole_chunk},
                         Label::kNotHasPart,
                         Provenance::kReversal});
        }
      }
    }
    // Extra negatives: sentences co-mentioning an other-relation pair.
    // These terms need not be noun chunks, so spans are matched directly
    // against the sentence tokens.
    std::vector<std::string> tokens = SentenceTokens(sentence);
    for (const auto& other : other_relation_pairs) {
      auto a_tokens = NameKeyTokens(other.first);
      auto b_tokens = NameKeyTokens(other.second);
      auto a_starts = FindNameSpans(tokens, a_tokens);
      auto b_starts = FindNameSpans(tokens, b_tokens);
      if (a_starts.empty() || b_starts.empty()) continue;
      NounChunk a{sentence.id, a_starts[0],
                  a_starts[0] + static_cast<int>(a_tokens.size()), ""};
      NounChunk b{sentence.id, b_starts[0],
                  b_starts[0] + static_cast<int>(b_tokens.size()), ""};
      if (a.start == b.start) continue;
      std::vector<std::string> a_span(tokens.begin() + a.start, tokens.begin() + a.end);
      std::vector<std::string> b_span(tokens.begin() + b.start, tokens.begin() + b.end);
      a.text = text::Join(a_span);
      b.text = text::Join(b_span);
      out.push_back({{sentence.id, a, b}, Label::kNotHasPart,
                     Provenance::kOtherRelation});
    }
  }
  return out;
}

std::vector<std::string> ScorerModel::FeatureStrings(
    const std::vector<std::string>& tokens, const CandidatePair& pair) {
  std::vector<std::string> feats;
  const int n = static_cast<int>(tokens.size());
  auto lower = [&tokens](int i) { return text::Lower(tokens[i]); };

  feats.push_back("h1=" + text::Lower(tokens[pair.arg1.end - 1]));
  feats.push_back("h2=" + text::Lower(tokens[pair.arg2.end - 1]));

  const bool arg1_first = pair.arg1.start < pair.arg2.start;
  feats.push_back(arg1_first ? "order=12" : "order=21");

  // Tokens strictly between the two spans.
  int mid_lo = arg1_first ? pair.arg1.end : pair.arg2.end;
  int mid_hi = arg1_first ? pair.arg2.start : pair.arg1.start;
  for (int i = mid_lo; i < mid_hi; ++i) {
    feats.push_back("mid=" + lower(i));
    if (i + 1 < mid_hi) feats.push_back("mid=" + lower(i) + "_" + lower(i + 1));
  }
  // Two-token windows outside each span.
  auto window = [&](const char* prefix, int lo, int hi) {
    for (int i = std::max(0, lo); i < std::min(n, hi); ++i)
      feats.push_back(std::string(prefix) + "=" + lower(i));
    if (lo >= 0 && lo + 1 < hi && lo + 1 < n)
      feats.push_back(std::string(prefix) + "=" + lower(std::max(0, lo)) + "_" +
                      lower(std::max(0, lo) + 1));
  };
  window("w1b", pair.arg1.start - 2, pair.arg1.start);
  window("w1a", pair.arg1.end, pair.arg1.end + 2);
  window("w2b", pair.arg2.start - 2, pair.arg2.start);
  window("w2a", pair.arg2.end, pair.arg2.end + 2);

  std::sort(feats.begin(), feats.end());
  feats.erase(std::unique(feats.begin(), feats.end()), feats.end());
  return feats;
}

FeatureVec ScorerModel::Featurize(const std::vector<std::string>& tokens,
                                  const CandidatePair& pair) const {
  FeatureVec x;
  for (const auto& f : FeatureStrings(tokens, pair)) {
    auto it = vocab_.find(f);
    if (it != vocab_.end()) x.push_back(it->second);
  }
  std::sort(x.begin(), x.end());
  return x;
}

double ScorerModel::ScoreFeatures(const FeatureVec& features) const {
  double z = weights_.empty() ? 0.0 : weights_.back();  // bias
  for (int idx : features) z += weights_[idx];
  return Sigmoid(z);
}

double ScorerModel::Score(const GenericSentence& sentence,
                          const CandidatePair& pair) const {
  // Validates spans the same way as MarkArguments.
  std::vector<std::string> tokens = SentenceTokens(sentence);
  const int n = static_cast<int>(tokens.size());
  auto valid = [n](const NounChunk& c) {
    return c.start >= 0 && c.start < c.end && c.end <= n;
  };
  if (!valid(pair.arg1) || !valid(pair.arg2)) throw SpanOutOfRangeError();
  return ScoreFeatures(Featurize(tokens, pair));
}

double ScorerModel::Loss(const std::vector<FeatureVec>& xs,
                         const std::vector<int>& ys) const {
  double total = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double p = ScoreFeatures(xs[i]);
    total += ys[i] ? -std::log(p) : -std::log(1.0 - p);
  }
  return total / static_cast<double>(xs.size());
}

std::vector<double> ScorerModel::LossGradient(
    const std::vector<FeatureVec>& xs, const std::vector<int>& ys) const {
  std::vector<double> grad(weights_.size(), 0.0);
  const double inv_n = 1.0 / static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    double err = (ScoreFeatures(xs[i]) - static_cast<double>(ys[i])) * inv_n;
    for (int idx : xs[i]) grad[idx] += err;
    grad.back() += err;
  }
  return grad;
}

ScorerModel TrainOnFeatures(std::vector<FeatureVec> xs, std::vector<int> ys,
                            std::map<std::string, int> vocab,
                            const TrainConfig& config) {
  bool has_pos = false, has_neg = false;
  for (int y : ys) (y ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) throw DegenerateDatasetError();

  ScorerModel model;
  model.vocab_ = std::move(vocab);
  model.weights_.assign(model.vocab_.size() + 1, 0.0);
  model.config_ = config;

  std::vector<size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 rng(config.seed);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (size_t i : order) {
      double err = model.ScoreFeatures(xs[i]) - static_cast<double>(ys[i]);
      double step = config.learning_rate * err;
      for (int idx : xs[i]) model.weights_[idx] -= step;
      model.weights_.back() -= step;
    }
  }
  return model;
}

ScorerModel ScorerModel::Train(const std::vector<GenericSentence>& corpus,
                               const std::vector<LabeledExample>& examples,
                               const TrainConfig& config) {
  std::unordered_map<std::string, const GenericSentence*> by_id;
  for (const auto& s : corpus) by_id[s.id] = &s;

  std::map<std::string, int> vocab;
  std::vector<FeatureVec> xs;
  std::vector<int> ys;
  for (const auto& ex : examples) {
    auto it = by_id.find(ex.pair.sentence_id);
    if (it == by_id.end())
      throw std::runtime_error("example references unknown sentence " +
                               ex.pair.sentence_id);
    std::vector<std::string> tokens = SentenceTokens(*it->second);
    FeatureVec x;
    for (const auto& f : FeatureStrings(tokens, ex.pair)) {
      auto [vit, inserted] = vocab.emplace(f, static_cast<int>(vocab.size()));
      x.push_back(vit->second);
    }
    std::sort(x.begin(), x.end());
    xs.push_back(std::move(x));
    ys.push_back(ex.label == Label::kHasPart ? 1 : 0);
  }
  return TrainOnFeatures(std::move(xs), std::move(ys), std::move(vocab), config);
}

void ScorerModel::Save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "haspart-scorer v1\n";
  out << "lr " << text::FormatDouble(config_.learning_rate) << "\n";
  out << "epochs " << config_.epochs << "\n";
  out << "seed " << config_.seed << "\n";
  out << "features " << vocab_.size() << "\n";
  for (const auto& [f, idx] : vocab_) out << f << "\t" << idx << "\n";
  out << "weights " << weights_.size() << "\n";
  for (double w : weights_) out << text::FormatDouble(w) << "\n";
}

ScorerModel ScorerModel::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "haspart-scorer v1")
    throw std::runtime_error("unsupported model file version: " + magic);
  ScorerModel model;
  std::string key;
  size_t n = 0;
  in >> key >> model.config_.learning_rate;
  in >> key >> model.config_.epochs;
  in >> key >> model.config_.seed;
  in >> key >> n;
  in.ignore();
  for (size_t i = 0; i < n; ++i) {
    std::string line;
    std::getline(in, line);
    size_t tab = line.rfind('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("malformed model vocabulary line");
    model.vocab_[line.substr(0, tab)] = std::stoi(line.substr(tab + 1));
  }
  in >> key >> n;
  model.weights_.resize(n);
  for (size_t i = 0; i < n; ++i) in >> model.weights_[i];
  if (!in) throw std::runtime_error("truncated model file: " + path);
  if (model.weights_.size() != model.vocab_.size() + 1)
    throw std::runtime_error("model weight vector length mismatch");
  return model;
}

std::vector<RawTuple> ExtractCorpus(Scorer& scorer,
                                    const std::vector<GenericSentence>& corpus,
                                    const PosTagger& tagger,
                                    double keep_threshold,
                                    ExtractionReport* report) {
  std::vector<RawTuple> out;
  ExtractionReport local;
  ExtractionReport& rep = report ? *report : local;
  for (const auto& sentence : corpus) {
    ++rep.sentences;
    try {
      std::vector<NounChunk> chunks = ExtractChunks(sentence, tagger);
      for (const auto& pair : EnumeratePairs(chunks)) {
        double score = scorer.ScorePair(sentence, pair);
        ++rep.pairs_scored;
        if (score > keep_threshold) {
          out.push_back({pair.arg1.text, pair.arg2.text, sentence.id, score});
        }
      }
    } catch (const std::exception& e) {
      rep.skipped.push_back(sentence.id + ": " + e.what());
    }
  }
  return out;
}

std::string LabelName(Label label) {
  return label == Label::kHasPart ? "hasPart" : "notHasPart";
}

std::string ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kSeedMatch: return "seed-match";
    case Provenance::kReversal: return "reversal";
    case Provenance::kOtherRelation: return "other-relation";
    case Provenance::kManual: return "manual";
  }
  return "manual";
}

namespace {

Label LabelFromName(const std::string& s) {
  if (s == "hasPart") return Label::kHasPart;
  if (s == "notHasPart") return Label::kNotHasPart;
  throw std::runtime_error("unknown label: " + s);
}

Provenance ProvenanceFromName(const std::string& s) {
  if (s == "seed-match") return Provenance::kSeedMatch;
  if (s == "reversal") return Provenance::kReversal;
  if (s == "other-relation") return Provenance::kOtherRelation;
  if (s == "manual") return Provenance::kManual;
  throw std::runtime_error("unknown provenance: " + s);
}

}  // namespace

void WriteLabeledExamples(const std::vector<LabeledExample>& examples,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& ex : examples) {
    json j;
    j["sentence_id"] = ex.pair.sentence_id;
    j["arg1"] = {{"start", ex.pair.arg1.start},
                 {"end", ex.pair.arg1.end},
                 {"text", ex.pair.arg1.text}};
    j["arg2"] = {{"start", ex.pair.arg2.start},
                 {"end", ex.pair.arg2.end},
                 {"text", ex.pair.arg2.text}};
    j["label"] = LabelName(ex.label);
    j["provenance"] = ProvenanceName(ex.provenance);
    out << j.dump() << "\n";
  }
}

std::vector<LabeledExample> ReadLabeledExamples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError(path);
  std::vector<LabeledExample> out;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw MalformedRecordError(line_number, e.what());
    }
    LabeledExample ex;
    ex.pair.sentence_id = j.at("sentence_id").get<std::string>();
    auto span = [&](const char* key, NounChunk& c) {
      c.sentence_id = ex.pair.sentence_id;
      c.start = j.at(key).at("start").get<int>();
      c.end = j.at(key).at("end").get<int>();
      c.text = j.at(key).at("text").get<std::string>();
    };
    span("arg1", ex.pair.arg1);
    span("arg2", ex.pair.arg2);
    ex.label = LabelFromName(j.at("label").get<std::string>());
    ex.provenance = ProvenanceFromName(j.at("provenance").get<std::string>());
    if (ex.provenance == Provenance::kReversal && ex.label != Label::kNotHasPart)
      throw MalformedRecordError(line_number, "reversal example labeled hasPart");
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace haspart
