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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pseudoref/types.hpp"

namespace pseudoref {

// Corpus files hold one JSON object per line:
//   {"example_id":"e1","source":"...","refs":["tok tok","tok tok tok"]}
// "source" is optional. Blank lines are skipped but still counted for error
// reporting. Serialization writes keys in the order example_id, source, refs
// with no insignificant whitespace.

ReferenceSet parse_corpus_record(std::string_view line, std::size_t line_no = 0);
std::string serialize_corpus_record(const ReferenceSet& example);

// Throws DataError naming the offending line for malformed records or
// duplicate example ids.
Corpus read_corpus(std::istream& in);
Corpus read_corpus_file(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const Corpus& corpus);

// One {"example_id": ..., "ref": ...} object per line.
std::string serialize_dataset_entry(const ExpandedDataset::Entry& entry);
void write_dataset(std::ostream& out, const ExpandedDataset& dataset);

}  // namespace pseudoref
