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

#include "haspart/kb.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "haspart/corpus.hpp"
#include "haspart/text.hpp"
#include "json.hpp"

namespace haspart {

using nlohmann::json;

namespace {

constexpr const char* kEmpty = "-";

std::string OrDash(const std::optional<std::string>& v) {
  return v ? *v : std::string(kEmpty);
}

std::optional<std::string> FromDash(const std::string& v) {
  if (v == kEmpty) return std::nullopt;
  return v;
}

std::string MultisetToField(const std::map<std::string, int>& m) {
  if (m.empty()) return kEmpty;
  std::string out;
  for (const auto& [word, n] : m) {
    if (!out.empty()) out += ",";
    out += word + ":" + std::to_string(n);
  }
  return out;
}

std::map<std::string, int> MultisetFromField(const std::string& field) {
  std::map<std::string, int> m;
  if (field == kEmpty) return m;
  std::istringstream ss(field);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t colon = item.rfind(':');
    if (colon == std::string::npos) throw std::runtime_error("bad multiset field");
    m[item.substr(0, colon)] = std::stoi(item.substr(colon + 1));
  }
  return m;
}

std::string SetToField(const std::set<std::string>& s) {
  if (s.empty()) return kEmpty;
  std::string out;
  for (const auto& id : s) {
    if (!out.empty()) out += ",";
    out += id;
  }
  return out;
}

std::set<std::string> SetFromField(const std::string& field) {
  std::set<std::string> s;
  if (field == kEmpty) return s;
  std::istringstream ss(field);
  std::string item;
  while (std::getline(ss, item, ',')) s.insert(item);
  return s;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

json EntityToJson(const NormalizedEntity& e) {
  json j;
  j["name"] = e.name;
  if (e.quantifier) j["quantifier"] = *e.quantifier;
  if (!e.modifiers.empty()) j["modifiers"] = e.modifiers;
  if (e.title_hit) j["title_hit"] = *e.title_hit;
  return j;
}

NormalizedEntity EntityFromJson(const json& j) {
  NormalizedEntity e;
  e.name = j.at("name").get<std::string>();
  if (j.contains("quantifier")) e.quantifier = j["quantifier"].get<std::string>();
  if (j.contains("modifiers"))
    e.modifiers = j["modifiers"].get<std::vector<std::string>>();
  if (j.contains("title_hit")) e.title_hit = j["title_hit"].get<std::string>();
  return e;
}

void SortByScoreDescNameAsc(std::vector<HasPartTuple>& tuples, bool by_part) {
  std::stable_sort(tuples.begin(), tuples.end(),
                   [by_part](const HasPartTuple& a, const HasPartTuple& b) {
                     if (a.score != b.score) return a.score > b.score;
                     const std::string& an = by_part ? a.part.name : a.whole.name;
                     const std::string& bn = by_part ? b.part.name : b.whole.name;
                     return an < bn;
                   });
}

}  // namespace

void WriteKbTsv(const KnowledgeBase& kb, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailureError(path);
  out << "# " << kb.header.version << "\n";
  out << "# corpus_id " << kb.header.corpus_id << "\n";
  for (const auto& [key, value] : kb.header.thresholds)
    out << "# threshold " << key << " " << value << "\n";
  out << "# columns whole part score count quantifiers modifiers support "
         "best_support whole_sense part_sense whole_title part_title "
         "whole_link part_link\n";
  for (const auto& t : kb.tuples) {
    out << t.whole.name << "\t" << t.part.name << "\t"
        << text::FormatDouble(t.score) << "\t" << t.count << "\t"
        << MultisetToField(t.quantifiers) << "\t" << MultisetToField(t.modifiers)
        << "\t" << SetToField(t.support) << "\t"
        << (t.best_support.empty() ? kEmpty : t.best_support) << "\t"
        << OrDash(t.whole_sense) << "\t" << OrDash(t.part_sense) << "\t"
        << OrDash(t.whole.title_hit) << "\t" << OrDash(t.part.title_hit) << "\t"
        << OrDash(t.whole_link) << "\t" << OrDash(t.part_link) << "\n";
  }
}

KnowledgeBase ReadKbTsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailureError(path);
  KnowledgeBase kb;
  std::string line;
  if (!std::getline(in, line)) throw SchemaVersionMismatchError("(empty file)");
  if (line.rfind("# ", 0) != 0 || line.substr(2) != kb.header.version)
    throw SchemaVersionMismatchError(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string key;
      ss >> key;
      if (key == "corpus_id") {
        std::string rest;
        std::getline(ss, rest);
        if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
        kb.header.corpus_id = rest;
      } else if (key == "threshold") {
        std::string name, value;
        ss >> name >> value;
        kb.header.thresholds[name] = value;
      }
      continue;
    }
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 14) throw std::runtime_error("bad KB row: " + line);
    HasPartTuple t;
    t.whole.name = f[0];
    t.part.name = f[1];
    t.score = std::stod(f[2]);
    t.count = std::stoi(f[3]);
    t.quantifiers = MultisetFromField(f[4]);
    t.modifiers = MultisetFromField(f[5]);
    t.support = SetFromField(f[6]);
    t.best_support = (f[7] == kEmpty) ? "" : f[7];
    t.whole_sense = FromDash(f[8]);
    t.part_sense = FromDash(f[9]);
    t.whole.title_hit = FromDash(f[10]);
    t.part.title_hit = FromDash(f[11]);
    t.whole_link = FromDash(f[12]);
    t.part_link = FromDash(f[13]);
    kb.tuples.push_back(std::move(t));
  }
  return kb;
}

void WriteKbJsonl(const KnowledgeBase& kb, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoFailureError(path);
  json header;
  header["version"] = kb.header.version;
  header["corpus_id"] = kb.header.corpus_id;
  header["thresholds"] = kb.header.thresholds;
  out << header.dump() << "\n";
  for (const auto& t : kb.tuples) {
    json j;
    j["whole"] = EntityToJson(t.whole);
    j["part"] = EntityToJson(t.part);
    j["score"] = t.score;
    j["count"] = t.count;
    j["support"] = t.support;
    if (!t.best_support.empty()) j["best_support"] = t.best_support;
    if (!t.quantifiers.empty()) j["quantifiers"] = t.quantifiers;
    if (!t.modifiers.empty()) j["modifiers"] = t.modifiers;
    if (t.whole_sense) j["whole_sense"] = *t.whole_sense;
    if (t.part_sense) j["part_sense"] = *t.part_sense;
    if (t.whole_link) j["whole_link"] = *t.whole_link;
    if (t.part_link) j["part_link"] = *t.part_link;
    out << j.dump() << "\n";
  }
}

KnowledgeBase ReadKbJsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailureError(path);
  KnowledgeBase kb;
  std::string line;
  if (!std::getline(in, line)) throw SchemaVersionMismatchError("(empty file)");
  json header = json::parse(line);
  if (!header.contains("version") ||
      header["version"].get<std::string>() != kb.header.version)
    throw SchemaVersionMismatchError(header.value("version", "(missing)"));
  kb.header.corpus_id = header.value("corpus_id", "");
  if (header.contains("thresholds"))
    kb.header.thresholds =
        header["thresholds"].get<std::map<std::string, std::string>>();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    HasPartTuple t;
    t.whole = EntityFromJson(j.at("whole"));
    t.part = EntityFromJson(j.at("part"));
    t.score = j.at("score").get<double>();
    t.count = j.at("count").get<int>();
    t.support = j.at("support").get<std::set<std::string>>();
    t.best_support = j.value("best_support", "");
    if (j.contains("quantifiers"))
      t.quantifiers = j["quantifiers"].get<std::map<std::string, int>>();
    if (j.contains("modifiers"))
      t.modifiers = j["modifiers"].get<std::map<std::string, int>>();
    if (j.contains("whole_sense")) t.whole_sense = j["whole_sense"].get<std::string>();
    if (j.contains("part_sense")) t.part_sense = j["part_sense"].get<std::string>();
    if (j.contains("whole_link")) t.whole_link = j["whole_link"].get<std::string>();
    if (j.contains("part_link")) t.part_link = j["part_link"].get<std::string>();
    kb.tuples.push_back(std::move(t));
  }
  return kb;
}

std::vector<HasPartTuple> PartsOf(const KnowledgeBase& kb,
                                  const std::string& entity) {
  std::string key = text::Lower(entity);
  std::vector<HasPartTuple> out;
  for (const auto& t : kb.tuples) {
    if (text::Lower(t.whole.name) == key) out.push_back(t);
  }
  SortByScoreDescNameAsc(out, /*by_part=*/true);
  return out;
}

std::vector<HasPartTuple> WholesOf(const KnowledgeBase& kb,
                                   const std::string& entity) {
  std::string key = text::Lower(entity);
  std::vector<HasPartTuple> out;
  for (const auto& t : kb.tuples) {
    if (text::Lower(t.part.name) == key) out.push_back(t);
  }
  SortByScoreDescNameAsc(out, /*by_part=*/false);
  return out;
}

}  // namespace haspart
