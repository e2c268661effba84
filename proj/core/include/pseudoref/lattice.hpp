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
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pseudoref/align.hpp"
#include "pseudoref/parallel.hpp"
#include "pseudoref/similarity.hpp"
#include "pseudoref/types.hpp"

namespace pseudoref {

using NodeId = std::uint32_t;

// Node-labeled DAG compressing a set of sentences. Every node other than the
// start/end sentinels carries a non-empty set of surface variants; a path
// emits one variant per visited node. origin(k) maps positions of merged
// sentence k to the nodes that spell it.
//
// Invariants (checked by check_invariants()): acyclic; start has no
// predecessors and end no successors; each origin map spells its sentence
// along a start -> end path; every node is on some start -> end path.
//
// Single writer: mutation through merge() only. Copies are independent.
class Lattice {
 public:
  struct Node {
    std::set<Token> variants;
    std::set<NodeId> out;
    std::set<NodeId> in;
  };

  // One linear chain per reference between the sentinels. Sentinels get ids
  // 0 (start) and 1 (end); reference tokens are numbered from 2 in order.
  static Lattice from_references(const ReferenceSet& refs);

  // Positions of one merged sentence and the words it spells.
  struct Origin {
    std::vector<NodeId> nodes;
    std::vector<Token> words;
  };

  // Rebuilds a lattice from serialized parts and validates every invariant.
  // `origins` may be empty when the source did not carry them.
  static Lattice from_parts(NodeId start, NodeId end,
                            std::map<NodeId, std::set<Token>> variants,
                            const std::vector<std::pair<NodeId, NodeId>>& edges,
                            std::vector<Origin> origins);

  NodeId start() const noexcept { return start_; }
  NodeId end() const noexcept { return end_; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept;
  bool contains(NodeId id) const { return nodes_.count(id) != 0; }
  const Node& node(NodeId id) const;
  const std::map<NodeId, Node>& nodes() const noexcept { return nodes_; }
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  std::size_t sentence_count() const noexcept { return origins_.size(); }
  const std::vector<NodeId>& origin(std::size_t k) const { return origins_.at(k).nodes; }
  const std::vector<Token>& origin_words(std::size_t k) const { return origins_.at(k).words; }

  // Unifies origin(i)[p.row] with origin(j)[p.col] for every aligned pair:
  // variant sets are joined, edges re-targeted and deduplicated, and the lower
  // id survives. Pairs whose nodes are already unified are no-ops. Throws
  // CycleError (leaving *this unchanged) if a union would create a cycle.
  void merge(std::size_t i, std::size_t j, const Alignment& alignment);

  // Kahn's algorithm; ties resolved by ascending id. Throws CycleError.
  std::vector<NodeId> topological_order() const;

  // True if a non-empty directed path leads from `from` to `to`.
  bool reaches(NodeId from, NodeId to) const;

  // Throws ValidationError describing the first violated invariant.
  void check_invariants() const;

 private:
  Lattice() = default;

  void unify(NodeId a, NodeId b);

  NodeId start_ = 0;
  NodeId end_ = 1;
  std::map<NodeId, Node> nodes_;
  std::vector<Origin> origins_;
};

inline Lattice initial_lattice(const ReferenceSet& refs) { return Lattice::from_references(refs); }

// One entry per candidate pair in merge order. Pairs whose sentences were
// both already merged are kept with executed == false.
struct MergeStep {
  std::size_t i;
  std::size_t j;
  Alignment alignment;
  bool executed;
};

struct Compression {
  Lattice lattice;
  std::vector<MergeStep> plan;
};

// Aligns every reference pair, then merges pairs in descending score order,
// skipping a pair once both of its sentences have been merged.
Compression compress(const ReferenceSet& refs, const SimilarityProvider& provider,
                     double penalty, const ExecutionOptions& opts = {});

// Path counts at or below this are verified by enumeration.
inline constexpr std::uint64_t kExactCountLimit = 100000;

struct PathCount {
  // Distinct strings when exact, otherwise equal to `paths`.
  std::uint64_t value = 0;
  // (path, variant choice) combinations, by DP over topological order. Can
  // exceed the distinct-string count when two paths spell the same words.
  std::uint64_t paths = 0;
  bool saturated = false;  // paths exceeds 2^63 - 1; value and paths are clamped
  bool exact = false;      // value was checked against deduplicated enumeration
};

// A node with V variants multiplies the paths through it by V. When the
// product is at most kExactCountLimit, value is the exact number of distinct
// strings; above it value is the path count, an upper bound.
PathCount count_paths(const Lattice& lattice);

struct PathEnumeration {
  std::vector<Sentence> sentences;  // distinct, ids "path:<n>"
  bool truncated = false;           // more distinct strings exist beyond cap
};

// Depth-first over successors in ascending id order, variants in sorted
// order. Duplicate strings are dropped; enumeration stops after `cap`
// distinct strings.
PathEnumeration enumerate_paths(const Lattice& lattice, std::size_t cap);

// Graphviz digraph. Node labels are the sorted variants joined by "/";
// sentinels are labelled <s> and </s>.
std::string to_dot(const Lattice& lattice, const std::string& graph_name = "lattice");

}  // namespace pseudoref
