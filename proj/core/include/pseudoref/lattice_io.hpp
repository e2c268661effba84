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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pseudoref/lattice.hpp"

namespace pseudoref {

// Line-delimited JSON. Each lattice is a header record followed by its node,
// edge and origin records:
//   {"type":"header","example_id":"e1","start":0,"end":1}
//   {"type":"node","id":2,"variants":["a","b"]}
//   {"type":"edge","from":0,"to":2}
//   {"type":"origin","sentence":0,"nodes":[2,3],"words":["a","c"]}
// "example_id" is omitted when empty. Several lattices may share one stream.
struct NamedLattice {
  std::string example_id;
  Lattice lattice;
};

void write_lattice(std::ostream& out, const Lattice& lattice, const std::string& example_id = {});

// Throws DataError naming the offending line.
std::vector<NamedLattice> read_lattices(std::istream& in);

}  // namespace pseudoref
