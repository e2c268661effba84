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

// Brute-force reference implementations used only by tests. They share no
// code path with the library routines they check.

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pseudoref/lattice.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref::testing {

struct BruteAlignment {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t argmax_count = 0;  // how many alignments attain `best`
  std::vector<AlignedPair> argmax;
};

// Every strictly monotone subset of cells, scored as the sum of penalized
// cells in row order.
inline BruteAlignment brute_force_alignment(const SubstitutionMatrix& m) {
  BruteAlignment out;
  std::vector<AlignedPair> chosen;
  std::function<void(std::size_t, std::size_t, double)> rec = [&](std::size_t u0,
                                                                    std::size_t v0, double sum) {
    if (sum > out.best) {
      out.best = sum;
      out.argmax_count = 1;
      out.argmax = chosen;
    } else if (sum == out.best) {
      ++out.argmax_count;
    }
    for (std::size_t u = u0; u < m.rows(); ++u) {
      for (std::size_t v = v0; v < m.cols(); ++v) {
        chosen.push_back({u, v});
        rec(u + 1, v + 1, sum + m.score(u, v));
        chosen.pop_back();
      }
    }
  };
  rec(0, 0, 0.0);
  return out;
}

// All strings spelled by start -> end paths, expanding every variant, without
// any de-duplication shortcut (duplicates collapse in the set).
inline std::multiset<std::string> brute_force_strings_multi(const Lattice& lat) {
  std::multiset<std::string> out;
  std::vector<std::string> words;
  std::function<void(NodeId)> rec = [&](NodeId n) {
    if (n == lat.end()) {
      std::string s;
      for (std::size_t k = 0; k < words.size(); ++k) s += (k ? " " : "") + words[k];
      out.insert(s);
      return;
    }
    for (const auto& [from, to] : lat.edges()) {
      if (from != n) continue;
      const auto& vars = lat.node(to).variants;
      if (vars.empty()) {
        rec(to);
        continue;
      }
      for (const auto& t : vars) {
        words.push_back(t.text());
        rec(to);
        words.pop_back();
      }
    }
  };
  rec(lat.start());
  return out;
}

inline std::set<std::string> brute_force_strings(const Lattice& lat) {
  auto multi = brute_force_strings_multi(lat);
  return {multi.begin(), multi.end()};
}

// Depth-first cycle detection by colouring, independent of Kahn's algorithm.
inline bool has_cycle(const Lattice& lat) {
  std::map<NodeId, int> colour;  // 0 white, 1 grey, 2 black
  std::function<bool(NodeId)> visit = [&](NodeId n) {
    colour[n] = 1;
    for (NodeId s : lat.node(n).out) {
      if (colour[s] == 1) return true;
      if (colour[s] == 0 && visit(s)) return true;
    }
    colour[n] = 2;
    return false;
  };
  for (const auto& [id, node] : lat.nodes()) {
    if (colour[id] == 0 && visit(id)) return true;
  }
  return false;
}

}  // namespace pseudoref::testing
