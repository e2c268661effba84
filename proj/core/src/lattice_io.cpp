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

#include "pseudoref/lattice_io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

#include "pseudoref/error.hpp"

namespace pseudoref {

using ordered_json = nlohmann::ordered_json;

void write_lattice(std::ostream& out, const Lattice& lattice, const std::string& example_id) {
  ordered_json header;
  header["type"] = "header";
  if (!example_id.empty()) header["example_id"] = example_id;
  header["start"] = lattice.start();
  header["end"] = lattice.end();
  out << header.dump() << '\n';

  for (const auto& [id, node] : lattice.nodes()) {
    if (id == lattice.start() || id == lattice.end()) continue;
    ordered_json rec;
    rec["type"] = "node";
    rec["id"] = id;
    auto vars = ordered_json::array();
    for (const auto& t : node.variants) vars.push_back(t.text());
    rec["variants"] = std::move(vars);
    out << rec.dump() << '\n';
  }
  for (const auto& [from, to] : lattice.edges()) {
    ordered_json rec;
    rec["type"] = "edge";
    rec["from"] = from;
    rec["to"] = to;
    out << rec.dump() << '\n';
  }
  for (std::size_t k = 0; k < lattice.sentence_count(); ++k) {
    ordered_json rec;
    rec["type"] = "origin";
    rec["sentence"] = k;
    rec["nodes"] = lattice.origin(k);
    auto words = ordered_json::array();
    for (const auto& t : lattice.origin_words(k)) words.push_back(t.text());
    rec["words"] = std::move(words);
    out << rec.dump() << '\n';
  }
}

namespace {

struct Pending {
  std::size_t header_line = 0;
  std::string example_id;
  NodeId start = 0;
  NodeId end = 1;
  std::map<NodeId, std::set<Token>> variants;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::map<std::size_t, Lattice::Origin> origins;
  std::vector<std::size_t> edge_lines;
};

NodeId node_id(const ordered_json& j, const char* key, std::size_t line_no) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw DataError(std::string("field \"") + key + "\" must be a non-negative integer", line_no);
  }
  return j[key].get<NodeId>();
}

NamedLattice finish(Pending& p) {
  std::vector<Lattice::Origin> origins;
  for (auto& [k, o] : p.origins) {
    if (k != origins.size()) {
      throw DataError("origin records must be numbered 0, 1, ... without gaps", p.header_line);
    }
    origins.push_back(std::move(o));
  }
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    for (NodeId n : {p.edges[k].first, p.edges[k].second}) {
      if (n != p.start && n != p.end && p.variants.count(n) == 0) {
        throw DataError("edge refers to unknown node " + std::to_string(n), p.edge_lines[k]);
      }
    }
  }
  try {
    return {p.example_id, Lattice::from_parts(p.start, p.end, std::move(p.variants), p.edges,
                                              std::move(origins))};
  } catch (const Error& e) {
    throw DataError(std::string("invalid lattice: ") + e.what(), p.header_line);
  }
}

}  // namespace

std::vector<NamedLattice> read_lattices(std::istream& in) {
  std::vector<NamedLattice> out;
  std::optional<Pending> current;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      throw DataError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
      throw DataError("record has no \"type\" field", line_no);
    }
    const auto type = j["type"].get<std::string>();
    if (type == "header") {
      if (current) out.push_back(finish(*current));
      current.emplace();
      current->header_line = line_no;
      current->start = node_id(j, "start", line_no);
      current->end = node_id(j, "end", line_no);
      if (j.contains("example_id")) {
        if (!j["example_id"].is_string()) throw DataError("example_id must be a string", line_no);
        current->example_id = j["example_id"].get<std::string>();
      }
      continue;
    }
    if (!current) throw DataError("record before the first header", line_no);
    try {
      if (type == "node") {
        const NodeId id = node_id(j, "id", line_no);
        if (!j.contains("variants") || !j["variants"].is_array()) {
          throw DataError("node record needs a \"variants\" array", line_no);
        }
        std::set<Token> vars;
        for (const auto& v : j["variants"]) {
          if (!v.is_string()) throw DataError("variants must be strings", line_no);
          vars.emplace(v.get<std::string>());
        }
        if (!current->variants.emplace(id, std::move(vars)).second) {
          throw DataError("duplicate node id " + std::to_string(id), line_no);
        }
      } else if (type == "edge") {
        current->edges.emplace_back(node_id(j, "from", line_no), node_id(j, "to", line_no));
        current->edge_lines.push_back(line_no);
      } else if (type == "origin") {
        if (!j.contains("sentence") || !j["sentence"].is_number_unsigned() ||
            !j.contains("nodes") || !j["nodes"].is_array() || !j.contains("words") ||
            !j["words"].is_array()) {
          throw DataError("origin record needs sentence, nodes and words", line_no);
        }
        Lattice::Origin o;
        for (const auto& n : j["nodes"]) {
          if (!n.is_number_unsigned()) throw DataError("origin nodes must be ids", line_no);
          o.nodes.push_back(n.get<NodeId>());
        }
        for (const auto& w : j["words"]) {
          if (!w.is_string()) throw DataError("origin words must be strings", line_no);
          o.words.emplace_back(w.get<std::string>());
        }
        current->origins[j["sentence"].get<std::size_t>()] = std::move(o);
      } else {
        throw DataError("unknown record type \"" + type + "\"", line_no);
      }
    } catch (const ValidationError& e) {
      throw DataError(e.what(), line_no);
    }
  }
  if (current) out.push_back(finish(*current));
  return out;
}

}  // namespace pseudoref
