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

#include "pseudoref/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "pseudoref/error.hpp"

namespace pseudoref {
namespace {

using NgramCounts = std::map<std::vector<std::string>, int>;

NgramCounts count_ngrams(std::span<const Token> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string> gram;
    gram.reserve(n);
    for (std::size_t k = i; k < i + n; ++k) gram.push_back(tokens[k].text());
    ++counts[std::move(gram)];
  }
  return counts;
}

}  // namespace

BleuScore sentence_bleu(std::span<const Token> candidate, std::span<const Sentence> refs) {
  if (refs.empty()) throw ValidationError("sentence_bleu needs at least one reference");
  BleuScore result;
  const std::size_t c = candidate.size();
  if (c == 0) return result;

  result.effective_order = static_cast<int>(std::min<std::size_t>(kBleuMaxOrder, c));

  double log_sum = 0.0;
  bool zero = false;
  for (int n = 1; n <= result.effective_order; ++n) {
    const auto cand = count_ngrams(candidate, n);
    NgramCounts max_ref;
    for (const auto& ref : refs) {
      for (const auto& [gram, count] : count_ngrams(ref.tokens(), n)) {
        auto& m = max_ref[gram];
        m = std::max(m, count);
      }
    }
    long matched = 0;
    for (const auto& [gram, count] : cand) {
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) matched += std::min(count, it->second);
    }
    const double total = static_cast<double>(c - n + 1);
    double p = static_cast<double>(matched) / total;
    if (matched == 0) {
      if (n == 1) {
        zero = true;
      } else {
        p = 1.0 / (2.0 * total);
      }
    }
    result.precisions[n - 1] = p;
    if (!zero) log_sum += std::log(p);
  }

  std::size_t closest = refs[0].size();
  bool some_ref_not_longer = false;
  for (const auto& ref : refs) {
    const std::size_t r = ref.size();
    if (r <= c) some_ref_not_longer = true;
    const auto dr = r > c ? r - c : c - r;
    const auto dbest = closest > c ? closest - c : c - closest;
    if (dr < dbest || (dr == dbest && r < closest)) closest = r;
  }
  result.brevity_penalty =
      some_ref_not_longer ? 1.0
                          : std::exp(1.0 - static_cast<double>(closest) / static_cast<double>(c));

  if (zero) {
    result.value = 0.0;
    return result;
  }
  const bool exact = std::all_of(result.precisions.begin(),
                                 result.precisions.begin() + result.effective_order,
                                 [](double p) { return p == 1.0; });
  const double geo = exact ? 1.0 : std::exp(log_sum / result.effective_order);
  result.value = std::clamp(100.0 * result.brevity_penalty * geo, 0.0, 100.0);
  return result;
}

}  // namespace pseudoref
