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

#include "pseudoref/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "pseudoref/error.hpp"
#include "pseudoref/lattice.hpp"

namespace pseudoref {

std::vector<StatsRow> corpus_stats(const Corpus& corpus, const SimilarityProvider& provider,
                                   const SelectionConfig& cfg, const ExecutionOptions& opts) {
  cfg.validate();
  std::vector<StatsRow> rows(corpus.size());
  parallel_for(corpus.size(), opts, [&](std::size_t n) {
    const auto& example = corpus[n];
    auto& row = rows[n];
    row.example_id = example.example_id();
    try {
      std::size_t words = 0;
      for (const auto& r : example.refs()) words += r.size();
      row.mean_ref_length = static_cast<double>(words) / static_cast<double>(example.size());

      auto gen = generate_with_schedule(example, provider, cfg);
      const auto count = count_paths(gen.lattice);
      row.path_count_total = count.value;
      row.path_count_saturated = count.saturated;
      row.pseudo_count = gen.pseudo.size();
      row.final_penalty = gen.final_penalty;
      row.truncated = gen.truncated;

      if (!gen.truncated && !count.saturated) {
        // Golds are always traversal strings.
        std::unordered_set<std::string> golds;
        for (const auto& r : example.refs()) golds.insert(r.text());
        const auto distinct = static_cast<std::int64_t>(gen.pseudo.size() + golds.size());
        row.string_collision_delta = static_cast<std::int64_t>(count.paths) - distinct;
      }
      if (!gen.pseudo.empty()) {
        auto ranked = rank_by_bleu(gen.pseudo, example.refs());
        const std::size_t top = std::min(kStatsTopN, ranked.size());
        double sum = 0.0;
        for (std::size_t k = 0; k < top; ++k) sum += ranked[k].bleu;
        row.mean_bleu_top50 = sum / static_cast<double>(top);
      }
    } catch (const Error& e) {
      row = StatsRow{};
      row.example_id = example.example_id();
      row.error = e.what();
    }
  });
  return rows;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "example_id,mean_ref_length,path_count_total,pseudo_count,mean_bleu_top50,"
         "final_penalty,string_collision_delta,truncated,error\n";
  for (const auto& r : rows) {
    out << csv_field(r.example_id) << ',';
    if (!r.error.empty()) {
      out << ",,,,,,," << csv_field(r.error) << '\n';
      continue;
    }
    out << fixed(r.mean_ref_length, 2) << ',' << r.path_count_total
        << (r.path_count_saturated ? "+" : "") << ',' << r.pseudo_count << ',';
    if (r.mean_bleu_top50) out << fixed(*r.mean_bleu_top50, 4);
    out << ',' << fixed(r.final_penalty, 4) << ',';
    if (r.string_collision_delta) out << *r.string_collision_delta;
    out << ',' << (r.truncated ? 1 : 0) << ",\n";
  }
}

}  // namespace pseudoref
