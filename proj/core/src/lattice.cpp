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

#include "pseudoref/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "pseudoref/error.hpp"

namespace pseudoref {

Lattice Lattice::from_references(const ReferenceSet& refs) {
  Lattice lat;
  lat.start_ = 0;
  lat.end_ = 1;
  lat.nodes_[lat.start_];
  lat.nodes_[lat.end_];
  NodeId next = 2;
  for (const auto& sentence : refs.refs()) {
    Origin origin;
    NodeId prev = lat.start_;
    for (const auto& token : sentence.tokens()) {
      const NodeId id = next++;
      auto& node = lat.nodes_[id];
      node.variants.insert(token);
      node.in.insert(prev);
      lat.nodes_[prev].out.insert(id);
      origin.nodes.push_back(id);
      origin.words.push_back(token);
      prev = id;
    }
    lat.nodes_[prev].out.insert(lat.end_);
    lat.nodes_[lat.end_].in.insert(prev);
    lat.origins_.push_back(std::move(origin));
  }
  return lat;
}

Lattice Lattice::from_parts(NodeId start, NodeId end, std::map<NodeId, std::set<Token>> variants,
                            const std::vector<std::pair<NodeId, NodeId>>& edges,
                            std::vector<Origin> origins) {
  if (start == end) throw ValidationError("start and end sentinels share an id");
  Lattice lat;
  lat.start_ = start;
  lat.end_ = end;
  lat.nodes_[start];
  lat.nodes_[end];
  for (auto& [id, vars] : variants) {
    auto& node = lat.nodes_[id];
    node.variants = std::move(vars);
  }
  for (const auto& [from, to] : edges) {
    auto src = lat.nodes_.find(from);
    auto dst = lat.nodes_.find(to);
    if (src == lat.nodes_.end() || dst == lat.nodes_.end()) {
      throw ValidationError("edge " + std::to_string(from) + " -> " + std::to_string(to) +
                            " references an unknown node");
    }
    src->second.out.insert(to);
    dst->second.in.insert(from);
  }
  lat.origins_ = std::move(origins);
  lat.check_invariants();
  return lat;
}

std::size_t Lattice::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [id, node] : nodes_) n += node.out.size();
  return n;
}

const Lattice::Node& Lattice::node(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw ValidationError("unknown node id " + std::to_string(id));
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> Lattice::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& [id, node] : nodes_) {
    for (NodeId to : node.out) out.emplace_back(id, to);
  }
  return out;
}

bool Lattice::reaches(NodeId from, NodeId to) const {
  std::unordered_set<NodeId> seen;
  std::vector<NodeId> stack(node(from).out.begin(), node(from).out.end());
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    if (n == to) return true;
    if (!seen.insert(n).second) continue;
    for (NodeId s : node(n).out) stack.push_back(s);
  }
  return false;
}

void Lattice::unify(NodeId a, NodeId b) {
  if (a == b) return;
  if (a == start_ || a == end_ || b == start_ || b == end_) {
    throw ValidationError("sentinel nodes cannot be merged");
  }
  if (reaches(a, b) || reaches(b, a)) {
    throw CycleError("merging nodes " + std::to_string(a) + " and " + std::to_string(b) +
                     " would create a cycle");
  }
  const NodeId keep = std::min(a, b);
  const NodeId drop = std::max(a, b);
  Node dropped = std::move(nodes_.at(drop));
  nodes_.erase(drop);
  Node& kept = nodes_.at(keep);
  for (NodeId p : dropped.in) {
    auto& pred = nodes_.at(p).out;
    pred.erase(drop);
    pred.insert(keep);
    kept.in.insert(p);
  }
  for (NodeId s : dropped.out) {
    auto& succ = nodes_.at(s).in;
    succ.erase(drop);
    succ.insert(keep);
    kept.out.insert(s);
  }
  kept.variants.merge(dropped.variants);
  for (auto& origin : origins_) {
    std::replace(origin.nodes.begin(), origin.nodes.end(), drop, keep);
  }
}

void Lattice::merge(std::size_t i, std::size_t j, const Alignment& alignment) {
  if (i >= origins_.size() || j >= origins_.size()) {
    throw ValidationError("merge references an unknown sentence");
  }
  if (i == j) throw ValidationError("cannot merge a sentence with itself");
  Lattice next = *this;
  for (const auto& p : alignment.pairs()) {
    if (p.row >= next.origins_[i].nodes.size() || p.col >= next.origins_[j].nodes.size()) {
      throw ValidationError("alignment pair out of range for the merged sentences");
    }
    next.unify(next.origins_[i].nodes[p.row], next.origins_[j].nodes[p.col]);
  }
#ifndef NDEBUG
  next.topological_order();
#endif
  *this = std::move(next);
}

std::vector<NodeId> Lattice::topological_order() const {
  std::map<NodeId, std::size_t> indegree;
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (const auto& [id, node] : nodes_) {
    indegree[id] = node.in.size();
    if (node.in.empty()) ready.push(id);
  }
  std::vector<NodeId> order;
  order.reserve(nodes_.size());
  while (!ready.empty()) {
    NodeId n = ready.top();
    ready.pop();
    order.push_back(n);
    for (NodeId s : nodes_.at(n).out) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != nodes_.size()) throw CycleError("lattice contains a directed cycle");
  return order;
}

void Lattice::check_invariants() const {
  if (!contains(start_) || !contains(end_)) throw ValidationError("missing sentinel node");
  try {
    topological_order();
  } catch (const CycleError& e) {
    throw ValidationError(e.what());
  }
  if (!node(start_).in.empty()) throw ValidationError("start node has predecessors");
  if (!node(end_).out.empty()) throw ValidationError("end node has successors");
  if (!node(start_).variants.empty() || !node(end_).variants.empty()) {
    throw ValidationError("sentinel nodes must not carry variants");
  }
  for (const auto& [id, n] : nodes_) {
    if (id == start_ || id == end_) continue;
    if (n.variants.empty()) {
      throw ValidationError("node " + std::to_string(id) + " has no variants");
    }
  }

  auto sweep = [this](NodeId from, bool forward) {
    std::unordered_set<NodeId> seen{from};
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
      NodeId n = stack.back();
      stack.pop_back();
      for (NodeId m : forward ? node(n).out : node(n).in) {
        if (seen.insert(m).second) stack.push_back(m);
      }
    }
    return seen;
  };
  const auto from_start = sweep(start_, true);
  const auto to_end = sweep(end_, false);
  for (const auto& [id, n] : nodes_) {
    if (!from_start.count(id) || !to_end.count(id)) {
      throw ValidationError("node " + std::to_string(id) + " is not on a start-to-end path");
    }
  }

  for (std::size_t k = 0; k < origins_.size(); ++k) {
    const auto& o = origins_[k];
    if (o.nodes.empty() || o.nodes.size() != o.words.size()) {
      throw ValidationError("origin map " + std::to_string(k) + " is malformed");
    }
    NodeId prev = start_;
    for (std::size_t p = 0; p < o.nodes.size(); ++p) {
      if (!contains(o.nodes[p]) || !node(prev).out.count(o.nodes[p])) {
        throw ValidationError("origin map " + std::to_string(k) + " breaks at position " +
                              std::to_string(p));
      }
      if (!node(o.nodes[p]).variants.count(o.words[p])) {
        throw ValidationError("origin map " + std::to_string(k) + " position " +
                              std::to_string(p) + " does not carry \"" + o.words[p].text() +
                              "\"");
      }
      prev = o.nodes[p];
    }
    if (!node(prev).out.count(end_)) {
      throw ValidationError("origin map " + std::to_string(k) + " does not reach the end node");
    }
  }
}

Compression compress(const ReferenceSet& refs, const SimilarityProvider& provider,
                     double penalty, const ExecutionOptions& opts) {
  Compression result{Lattice::from_references(refs), {}};
  if (refs.size() < 2) return result;
  std::vector<bool> merged(refs.size(), false);
  for (auto& ps : pair_scores(refs, provider, penalty, opts)) {
    const bool execute = !(merged[ps.i] && merged[ps.j]);
    if (execute) {
      result.lattice.merge(ps.i, ps.j, ps.alignment);
      merged[ps.i] = merged[ps.j] = true;
    }
    result.plan.push_back({ps.i, ps.j, std::move(ps.alignment), execute});
  }
  return result;
}

PathCount count_paths(const Lattice& lattice) {
  constexpr std::uint64_t kLimit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  auto add = [](std::uint64_t a, std::uint64_t b, bool& sat) {
    std::uint64_t r = a + b;
    if (r > kLimit || r < a) {
      sat = true;
      return kLimit;
    }
    return r;
  };
  auto mul = [](std::uint64_t a, std::uint64_t b, bool& sat) {
    if (a != 0 && b > kLimit / a) {
      sat = true;
      return kLimit;
    }
    return a * b;
  };

  PathCount result;
  std::map<NodeId, std::uint64_t> ways;
  ways[lattice.start()] = 1;
  for (NodeId id : lattice.topological_order()) {
    const auto& node = lattice.node(id);
    std::uint64_t w = ways[id];
    if (!node.variants.empty()) w = mul(w, node.variants.size(), result.saturated);
    if (id == lattice.end()) {
      result.paths = w;
      break;
    }
    for (NodeId s : node.out) ways[s] = add(ways[s], w, result.saturated);
  }
  result.value = result.paths;
  if (!result.saturated && result.paths <= kExactCountLimit) {
    result.value = enumerate_paths(lattice, static_cast<std::size_t>(result.paths)).sentences.size();
    result.exact = true;
  }
  return result;
}

PathEnumeration enumerate_paths(const Lattice& lattice, std::size_t cap) {
  if (cap == 0) throw ValidationError("enumeration cap must be at least 1");
  PathEnumeration result;
  std::unordered_set<std::string> seen;
  std::vector<const Token*> words;
  bool stop = false;

  std::function<void(NodeId)> visit = [&](NodeId id) {
    if (stop) return;
    if (id == lattice.end()) {
      std::string text;
      for (const Token* t : words) {
        if (!text.empty()) text += ' ';
        text += t->text();
      }
      if (seen.count(text)) return;
      if (result.sentences.size() == cap) {
        result.truncated = true;
        stop = true;
        return;
      }
      seen.insert(text);
      std::vector<Token> tokens;
      tokens.reserve(words.size());
      for (const Token* t : words) tokens.push_back(*t);
      result.sentences.emplace_back("path:" + std::to_string(result.sentences.size()),
                                    std::move(tokens));
      return;
    }
    for (NodeId next : lattice.node(id).out) {
      const auto& variants = lattice.node(next).variants;
      if (variants.empty()) {
        visit(next);
      } else {
        for (const Token& t : variants) {
          words.push_back(&t);
          visit(next);
          words.pop_back();
          if (stop) return;
        }
      }
      if (stop) return;
    }
  };
  visit(lattice.start());
  return result;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Lattice& lattice, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(graph_name) << "\" {\n";
  os << "  rankdir=LR;\n";
  for (const auto& [id, node] : lattice.nodes()) {
    std::string label;
    if (id == lattice.start()) {
      label = "<s>";
    } else if (id == lattice.end()) {
      label = "</s>";
    } else {
      for (const auto& t : node.variants) {
        if (!label.empty()) label += '/';
        label += t.text();
      }
    }
    os << "  n" << id << " [label=\"" << dot_escape(label) << "\"";
    if (id == lattice.start() || id == lattice.end()) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& [from, to] : lattice.edges()) {
    os << "  n" << from << " -> n" << to << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pseudoref
