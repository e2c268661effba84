// Copyright 2026 The pseudoref Authors.
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

#include "pseudoref/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "pseudoref/error.hpp"

namespace pseudoref {

double normalized_cosine(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) {
    throw ValidationError("vector dimension mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  if (a.empty()) throw ValidationError("vectors must have dimension >= 1");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double x = a[k], y = b[k];
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) throw ValidationError("cosine of an all-zero vector");
  const double cosine = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
  return std::clamp((cosine + 1.0) / 2.0, 0.0, 1.0);
}

double HardProvider::score(const Sentence& a, std::size_t u, const Sentence& b,
                           std::size_t v) const {
  return a[u] == b[v] ? 1.0 : 0.0;
}

// --- synonym table ---------------------------------------------------------

SynonymTableProvider::SynonymTableProvider(
    const std::vector<std::vector<std::string>>& groups) {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& token : groups[g]) {
      auto& ids = membership_[token];
      if (ids.empty() || ids.back() != g) ids.push_back(g);
    }
  }
}

SynonymTableProvider SynonymTableProvider::load(std::istream& in) {
  std::vector<std::vector<std::string>> groups;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> group;
    for (const auto& t : tokenize(line)) group.push_back(t.text());
    groups.push_back(std::move(group));
  }
  return SynonymTableProvider(groups);
}

SynonymTableProvider SynonymTableProvider::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open synonym file " + path.string());
  return load(in);
}

bool SynonymTableProvider::related(const std::string& x, const std::string& y) const {
  if (x == y) return true;
  auto ix = membership_.find(x);
  auto iy = membership_.find(y);
  if (ix == membership_.end() || iy == membership_.end()) return false;
  const auto& gx = ix->second;
  const auto& gy = iy->second;
  std::size_t i = 0, j = 0;
  while (i < gx.size() && j < gy.size()) {
    if (gx[i] == gy[j]) return true;
    gx[i] < gy[j] ? ++i : ++j;
  }
  return false;
}

double SynonymTableProvider::score(const Sentence& a, std::size_t u, const Sentence& b,
                                   std::size_t v) const {
  return related(a[u].text(), b[v].text()) ? 1.0 : 0.0;
}

// --- static vectors --------------------------------------------------------

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_float(std::string_view s, float& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool is_unsigned_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool all_zero(const std::vector<float>& v) {
  return std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f; });
}

}  // namespace

StaticVectorProvider::StaticVectorProvider(
    std::unordered_map<std::string, std::vector<float>> table)
    : table_(std::move(table)) {
  for (const auto& [token, vec] : table_) {
    if (vec.empty()) throw ValidationError("empty vector for token \"" + token + "\"");
    if (dim_ == 0) dim_ = vec.size();
    if (vec.size() != dim_) {
      throw ValidationError("vector for token \"" + token + "\" has dimension " +
                            std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
    }
  }
}

StaticVectorProvider StaticVectorProvider::load(std::istream& in) {
  std::unordered_map<std::string, std::vector<float>> table;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (line_no == 1 && fields.size() == 2 && is_unsigned_integer(fields[0]) &&
        is_unsigned_integer(fields[1])) {
      continue;  // word2vec-style "<count> <dim>" header
    }
    if (fields.size() < 2) throw DataError("expected a token followed by floats", line_no);
    std::vector<float> vec(fields.size() - 1);
    for (std::size_t k = 1; k < fields.size(); ++k) {
      if (!parse_float(fields[k], vec[k - 1])) {
        throw DataError("invalid float \"" + std::string(fields[k]) + "\"", line_no);
      }
    }
    if (dim == 0) dim = vec.size();
    if (vec.size() != dim) {
      throw DataError("vector has dimension " + std::to_string(vec.size()) + ", expected " +
                          std::to_string(dim),
                      line_no);
    }
    if (all_zero(vec)) {
      throw DataError("all-zero vector for token \"" + std::string(fields[0]) + "\"", line_no);
    }
    std::string token(fields[0]);
    if (!table.emplace(token, std::move(vec)).second) {
      throw DataError("duplicate token \"" + token + "\"", line_no);
    }
  }
  return StaticVectorProvider(std::move(table));
}

StaticVectorProvider StaticVectorProvider::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vector file " + path.string());
  return load(in);
}

const std::vector<float>& StaticVectorProvider::lookup(const Sentence& s,
                                                       std::size_t pos) const {
  auto it = table_.find(s[pos].text());
  if (it == table_.end()) {
    throw ProviderError("no vector for token \"" + s[pos].text() + "\" in sentence \"" +
                        s.id() + "\"");
  }
  return it->second;
}

void StaticVectorProvider::check_covers(const Sentence& s) const {
  for (std::size_t k = 0; k < s.size(); ++k) lookup(s, k);
}

double StaticVectorProvider::score(const Sentence& a, std::size_t u, const Sentence& b,
                                   std::size_t v) const {
  return normalized_cosine(lookup(a, u), lookup(b, v));
}

// --- contextual vectors ----------------------------------------------------

ContextualVectorProvider::ContextualVectorProvider(
    std::unordered_map<std::string, Record> records)
    : records_(std::move(records)) {
  for (const auto& [id, rec] : records_) {
    if (rec.tokens.size() != rec.vectors.size()) {
      throw ValidationError("sentence \"" + id + "\" has " + std::to_string(rec.tokens.size()) +
                            " tokens but " + std::to_string(rec.vectors.size()) + " vectors");
    }
    for (const auto& vec : rec.vectors) {
      if (vec.empty()) throw ValidationError("empty vector in sentence \"" + id + "\"");
      if (dim_ == 0) dim_ = vec.size();
      if (vec.size() != dim_) {
        throw ValidationError("sentence \"" + id + "\" has a vector of dimension " +
                              std::to_string(vec.size()) + ", expected " + std::to_string(dim_));
      }
    }
  }
}

ContextualVectorProvider ContextualVectorProvider::load(std::istream& in) {
  using nlohmann::json;
  std::unordered_map<std::string, Record> records;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw DataError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("sentence_id") || !j["sentence_id"].is_string() ||
        !j.contains("tokens") || !j["tokens"].is_array() || !j.contains("vectors") ||
        !j["vectors"].is_array()) {
      throw DataError("expected fields sentence_id (string), tokens (array), vectors (array)",
                      line_no);
    }
    Record rec;
    for (const auto& t : j["tokens"]) {
      if (!t.is_string()) throw DataError("tokens must be strings", line_no);
      rec.tokens.push_back(t.get<std::string>());
    }
    for (const auto& v : j["vectors"]) {
      if (!v.is_array()) throw DataError("each vector must be an array of numbers", line_no);
      std::vector<float> vec;
      vec.reserve(v.size());
      for (const auto& x : v) {
        if (!x.is_number()) throw DataError("each vector must be an array of numbers", line_no);
        vec.push_back(x.get<float>());
      }
      if (vec.empty()) throw DataError("empty vector", line_no);
      if (dim == 0) dim = vec.size();
      if (vec.size() != dim) {
        throw DataError("vector has dimension " + std::to_string(vec.size()) + ", expected " +
                            std::to_string(dim),
                        line_no);
      }
      if (all_zero(vec)) throw DataError("all-zero vector", line_no);
      rec.vectors.push_back(std::move(vec));
    }
    if (rec.tokens.size() != rec.vectors.size()) {
      throw DataError("token count and vector count differ", line_no);
    }
    auto id = j["sentence_id"].get<std::string>();
    if (!records.emplace(id, std::move(rec)).second) {
      throw DataError("duplicate sentence_id \"" + id + "\"", line_no);
    }
  }
  return ContextualVectorProvider(std::move(records));
}

ContextualVectorProvider ContextualVectorProvider::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open contextual vector file " + path.string());
  return load(in);
}

const ContextualVectorProvider::Record& ContextualVectorProvider::record_for(
    const Sentence& s) const {
  auto it = records_.find(s.id());
  if (it == records_.end()) {
    throw ProviderError("no contextual vectors for sentence \"" + s.id() + "\"");
  }
  return it->second;
}

void ContextualVectorProvider::check_covers(const Sentence& s) const {
  const auto& rec = record_for(s);
  if (rec.tokens.size() != s.size()) {
    throw ProviderError("sentence \"" + s.id() + "\" has " + std::to_string(s.size()) +
                        " tokens but the vector file lists " + std::to_string(rec.tokens.size()));
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (rec.tokens[k] != s[k].text()) {
      throw ProviderError("token mismatch in sentence \"" + s.id() + "\" at position " +
                          std::to_string(k) + ": corpus has \"" + s[k].text() +
                          "\", vector file has \"" + rec.tokens[k] + "\"");
    }
  }
}

double ContextualVectorProvider::score(const Sentence& a, std::size_t u, const Sentence& b,
                                       std::size_t v) const {
  const auto& ra = record_for(a);
  const auto& rb = record_for(b);
  if (u >= ra.vectors.size() || v >= rb.vectors.size()) {
    throw ProviderError("token position out of range for the contextual vector file");
  }
  return normalized_cosine(ra.vectors[u], rb.vectors[v]);
}

// ---------------------------------------------------------------------------

SubstitutionMatrix build_matrix(const Sentence& a, const Sentence& b,
                                const SimilarityProvider& provider, double penalty) {
  if (!(penalty >= 0.0 && penalty <= 1.0)) {
    throw ValidationError("penalty must lie in [0, 1], got " + std::to_string(penalty));
  }
  provider.check_covers(a);
  provider.check_covers(b);
  std::vector<double> raw(a.size() * b.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < b.size(); ++v) {
      const double s = provider.score(a, u, b, v);
      if (!(s >= 0.0 && s <= 1.0)) {
        throw ProviderError(std::string(provider.kind()) + " provider returned " +
                            std::to_string(s) + " for (\"" + a[u].text() + "\", \"" +
                            b[v].text() + "\")");
      }
      raw[u * b.size() + v] = s;
    }
  }
  return SubstitutionMatrix(a.size(), b.size(), std::move(raw), penalty);
}

}  // namespace pseudoref
