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

#include <filesystem>
#include <string>

#include "pseudoref/corpus_io.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PSEUDOREF_TEST_DATA_DIR) / name;
}

inline ReferenceSet load_example(const std::string& file) {
  return read_corpus_file(data_path(file)).at(0);
}

inline ReferenceSet indonesia() { return load_example("indonesia.jsonl"); }
inline ReferenceSet elephant() { return load_example("elephant.jsonl"); }

}  // namespace pseudoref::testing
