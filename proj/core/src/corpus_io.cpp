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

#include "pseudoref/corpus_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <json.hpp>

#include "pseudoref/error.hpp"

namespace pseudoref {

using ordered_json = nlohmann::ordered_json;

ReferenceSet parse_corpus_record(std::string_view line, std::size_t line_no) {
  ordered_json record;
  try {
    record = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what(), line_no);
  }
  if (!record.is_object()) throw DataError("record is not a JSON object", line_no);

  auto example_id = record.find("example_id");
  if (example_id == record.end() || !example_id->is_string()) {
    throw DataError("missing string field \"example_id\"", line_no);
  }
  std::optional<std::string> source;
  if (auto it = record.find("source"); it != record.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError("field \"source\" must be a string", line_no);
    source = it->get<std::string>();
  }
  auto refs = record.find("refs");
  if (refs == record.end() || !refs->is_array()) {
    throw DataError("missing array field \"refs\"", line_no);
  }
  std::vector<std::string> texts;
  for (const auto& r : *refs) {
    if (!r.is_string()) throw DataError("every entry of \"refs\" must be a string", line_no);
    texts.push_back(r.get<std::string>());
  }
  try {
    return ReferenceSet::from_strings(example_id->get<std::string>(), std::move(source), texts);
  } catch (const ValidationError& e) {
    throw DataError(e.what(), line_no);
  }
}

std::string serialize_corpus_record(const ReferenceSet& example) {
  ordered_json record;
  record["example_id"] = example.example_id();
  if (example.source()) record["source"] = *example.source();
  auto refs = ordered_json::array();
  for (const auto& s : example.refs()) refs.push_back(s.text());
  record["refs"] = std::move(refs);
  return record.dump();
}

Corpus read_corpus(std::istream& in) {
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto example = parse_corpus_record(line, line_no);
    auto [it, inserted] = first_seen.emplace(example.example_id(), line_no);
    if (!inserted) {
      throw DataError("duplicate example_id \"" + example.example_id() +
                          "\" (first seen on line " + std::to_string(it->second) + ")",
                      line_no);
    }
    corpus.push_back(std::move(example));
  }
  return corpus;
}

Corpus read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return read_corpus(in);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& example : corpus) out << serialize_corpus_record(example) << '\n';
}

std::string serialize_dataset_entry(const ExpandedDataset::Entry& entry) {
  ordered_json record;
  record["example_id"] = entry.example_id;
  record["ref"] = entry.ref.text();
  return record.dump();
}

void write_dataset(std::ostream& out, const ExpandedDataset& dataset) {
  for (const auto& entry : dataset.entries) out << serialize_dataset_entry(entry) << '\n';
}

}  // namespace pseudoref
