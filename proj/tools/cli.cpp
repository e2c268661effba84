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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pseudoref/align.hpp"
#include "pseudoref/corpus_io.hpp"
#include "pseudoref/error.hpp"
#include "pseudoref/expand.hpp"
#include "pseudoref/lattice.hpp"
#include "pseudoref/lattice_io.hpp"
#include "pseudoref/similarity.hpp"
#include "pseudoref/stats.hpp"

namespace pseudoref::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProviderOptions {
  std::string kind = "hard";
  std::string vectors;
  std::string synonyms;
};

struct IoOptions {
  std::string input = "-";
  std::string output;
};

struct Options {
  IoOptions io;
  ProviderOptions provider;
  double penalty = 0.9;
  double penalty_step = 0.05;
  std::size_t min_refs = 100;
  std::size_t k_prime = 100;
  std::size_t cap = 100000;
  bool fixed_penalty = false;
  unsigned threads = 1;
  std::string example;
  std::vector<std::size_t> pair{0, 1};
  std::string dot_path;
  std::string method = "uniform";
  std::uint64_t seed = 0;
  std::uint64_t epoch = 0;
};

void add_io(CLI::App* cmd, Options& o, const std::string& in_help) {
  cmd->add_option("--in", o.io.input, in_help + " (\"-\" for stdin)")->capture_default_str();
  cmd->add_option("--out", o.io.output, "Output file (default stdout)");
}

void add_provider(CLI::App* cmd, Options& o) {
  cmd->add_option("--provider", o.provider.kind, "Word similarity: hard|static|synonyms|contextual")
      ->check(CLI::IsMember({"hard", "static", "synonyms", "contextual"}))
      ->capture_default_str();
  cmd->add_option("--vectors", o.provider.vectors,
                  "Vector file (static: text embeddings, contextual: JSON lines)");
  cmd->add_option("--syn", o.provider.synonyms, "Synonym groups, one group per line");
}

void add_threads(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

void add_schedule(CLI::App* cmd, Options& o) {
  cmd->add_option("--penalty", o.penalty, "Initial global penalty")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--penalty-step", o.penalty_step, "Penalty decrement per run")
      ->capture_default_str();
  cmd->add_option("--min-refs", o.min_refs, "Stop once this many pseudo-references exist")
      ->capture_default_str();
  cmd->add_flag("--fixed-penalty", o.fixed_penalty, "Single run at --penalty, no schedule");
  cmd->add_option("--cap", o.cap, "Enumeration cap per lattice")->capture_default_str();
}

std::unique_ptr<SimilarityProvider> make_provider(const ProviderOptions& p) {
  if (p.kind == "hard") return std::make_unique<HardProvider>();
  if (p.kind == "synonyms") {
    if (p.synonyms.empty()) throw UsageError("--provider synonyms requires --syn FILE");
    return std::make_unique<SynonymTableProvider>(SynonymTableProvider::load_file(p.synonyms));
  }
  if (p.vectors.empty()) throw UsageError("--provider " + p.kind + " requires --vectors FILE");
  if (p.kind == "static") {
    return std::make_unique<StaticVectorProvider>(StaticVectorProvider::load_file(p.vectors));
  }
  return std::make_unique<ContextualVectorProvider>(
      ContextualVectorProvider::load_file(p.vectors));
}

Corpus load_corpus(const std::string& path, std::istream& in) {
  if (path == "-") return read_corpus(in);
  return read_corpus_file(path);
}

// Writes to --out when given, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SelectionConfig selection(const Options& o) {
  SelectionConfig cfg;
  cfg.k_prime = o.k_prime;
  cfg.penalty_initial = o.penalty;
  cfg.penalty_step = o.penalty_step;
  cfg.min_generated = o.min_refs;
  cfg.cap = o.cap;
  cfg.use_schedule = !o.fixed_penalty;
  try {
    cfg.validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

const ReferenceSet& pick_example(const Corpus& corpus, const std::string& id) {
  if (corpus.empty()) throw DataError("corpus is empty");
  if (id.empty()) return corpus.front();
  for (const auto& e : corpus) {
    if (e.example_id() == id) return e;
  }
  throw DataError("no example with id \"" + id + "\"");
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%7.3f", v);
  return buf;
}

char move_glyph(Move m) {
  switch (m) {
    case Move::kDiag: return '\\';
    case Move::kUp: return '|';
    case Move::kLeft: return '-';
    case Move::kNone: break;
  }
  return ' ';
}

int cmd_align(const Options& o, std::istream& in, std::ostream& out) {
  const auto corpus = load_corpus(o.io.input, in);
  const auto& example = pick_example(corpus, o.example);
  if (o.pair.size() != 2) throw UsageError("--pair takes two reference indices");
  const std::size_t i = o.pair[0], j = o.pair[1];
  if (i >= example.size() || j >= example.size() || i == j) {
    throw UsageError("--pair must name two distinct references of example \"" +
                     example.example_id() + "\" (it has " + std::to_string(example.size()) +
                     ")");
  }
  const auto provider = make_provider(o.provider);
  const auto& a = example[i];
  const auto& b = example[j];
  const auto m = build_matrix(a, b, *provider, o.penalty);
  const DpTable table(m);
  const auto alignment = table.traceback();

  Sink sink(o.io.output, out);
  auto& os = sink.get();
  os << "example " << example.example_id() << "  pair (" << i << ", " << j << ")  penalty "
     << o.penalty << "\n";
  os << "rows: " << a.text() << "\ncols: " << b.text() << "\n\nsimilarity (raw):\n";
  for (std::size_t u = 0; u < m.rows(); ++u) {
    for (std::size_t v = 0; v < m.cols(); ++v) os << num(m.raw(u, v));
    os << "  " << a[u].text() << "\n";
  }
  os << "\nopt table with back-pointers (\\ diag, | up, - left):\n";
  for (std::size_t u = 0; u <= table.rows(); ++u) {
    for (std::size_t v = 0; v <= table.cols(); ++v) {
      os << num(table.opt(u, v)) << move_glyph(table.move(u, v));
    }
    os << "\n";
  }
  os << "\nalignment:\n";
  for (const auto& p : alignment.pairs()) {
    os << "  (" << p.row << ", " << p.col << ")  " << a[p.row].text() << " ~ " << b[p.col].text()
       << "  " << num(m.score(p.row, p.col)) << "\n";
  }
  os << "score: " << alignment.score() << "\n";
  return kExitOk;
}

int cmd_compress(const Options& o, std::istream& in, std::ostream& out) {
  const auto corpus = load_corpus(o.io.input, in);
  const auto provider = make_provider(o.provider);
  ExecutionOptions exec{o.threads};
  if (!(o.penalty >= 0.0 && o.penalty <= 1.0)) throw UsageError("--penalty must lie in [0, 1]");

  std::vector<const ReferenceSet*> selected;
  if (o.example.empty()) {
    for (const auto& e : corpus) selected.push_back(&e);
  } else {
    selected.push_back(&pick_example(corpus, o.example));
  }

  Sink sink(o.io.output, out);
  std::optional<std::ofstream> dot;
  if (!o.dot_path.empty()) {
    dot.emplace(o.dot_path, std::ios::binary);
    if (!*dot) throw DataError("cannot open DOT output " + o.dot_path);
  }
  for (const auto* example : selected) {
    const auto result = compress(*example, *provider, o.penalty, exec);
    write_lattice(sink.get(), result.lattice, example->example_id());
    if (dot) *dot << to_dot(result.lattice, example->example_id());
  }
  return kExitOk;
}

int cmd_generate(const Options& o, std::istream& in, std::ostream& out) {
  const auto cfg = selection(o);
  const auto corpus = load_corpus(o.io.input, in);
  const auto provider = make_provider(o.provider);
  const auto augmented = augment_corpus(corpus, *provider, cfg, ExecutionOptions{o.threads});
  Sink sink(o.io.output, out);
  write_corpus(sink.get(), augmented);
  return kExitOk;
}

int cmd_expand(const Options& o, std::istream& in, std::ostream& out) {
  const auto corpus = load_corpus(o.io.input, in);
  const EpochSeed seed{o.seed, o.epoch};
  ExpandedDataset dataset;
  if (o.method == "sample-one") {
    dataset = convert_sample_one(corpus, seed);
  } else if (o.method == "uniform") {
    dataset = convert_uniform(corpus);
  } else {
    dataset = convert_shuffle(corpus, seed);
  }
  Sink sink(o.io.output, out);
  write_dataset(sink.get(), dataset);
  return kExitOk;
}

int cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
  const auto cfg = selection(o);
  const auto corpus = load_corpus(o.io.input, in);
  const auto provider = make_provider(o.provider);
  const auto rows = corpus_stats(corpus, *provider, cfg, ExecutionOptions{o.threads});
  Sink sink(o.io.output, out);
  write_stats_csv(sink.get(), rows);
  return kExitOk;
}

int cmd_dot(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<NamedLattice> lattices;
  if (o.io.input == "-") {
    lattices = read_lattices(in);
  } else {
    std::ifstream file(o.io.input);
    if (!file) throw DataError("cannot open lattice file " + o.io.input);
    lattices = read_lattices(file);
  }
  Sink sink(o.io.output, out);
  bool found = false;
  for (const auto& [id, lattice] : lattices) {
    if (!o.example.empty() && id != o.example) continue;
    found = true;
    sink.get() << to_dot(lattice, id.empty() ? "lattice" : id);
  }
  if (!o.example.empty() && !found) throw DataError("no lattice for example \"" + o.example + "\"");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compress alternative references into word lattices and generate "
               "pseudo-references"};
  app.name(args.empty() ? "pseudoref" : args[0]);
  app.require_subcommand(1);
  Options o;

  auto* align = app.add_subcommand("align", "Print the DP table and traceback for one pair");
  add_io(align, o, "Corpus file");
  add_provider(align, o);
  align->add_option("--penalty", o.penalty, "Global penalty")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  align->add_option("--example", o.example, "Example id (default: first)");
  align->add_option("--pair", o.pair, "Two reference indices, e.g. --pair 0 1")
      ->expected(2)
      ->capture_default_str();

  auto* comp = app.add_subcommand("compress", "Build one lattice per example");
  add_io(comp, o, "Corpus file");
  add_provider(comp, o);
  add_threads(comp, o);
  comp->add_option("--penalty", o.penalty, "Global penalty")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  comp->add_option("--example", o.example, "Only this example");
  comp->add_option("--dot", o.dot_path, "Also write Graphviz DOT to this file");

  auto* gen = app.add_subcommand("generate", "Write the corpus augmented with pseudo-references");
  add_io(gen, o, "Corpus file");
  add_provider(gen, o);
  add_threads(gen, o);
  add_schedule(gen, o);
  gen->add_option("--k-prime", o.k_prime, "References per example after augmentation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* exp = app.add_subcommand("expand", "Convert a multi-reference corpus to single references");
  add_io(exp, o, "Corpus file");
  exp->add_option("--method", o.method, "sample-one|uniform|shuffle")
      ->check(CLI::IsMember({"sample-one", "uniform", "shuffle"}))
      ->capture_default_str();
  exp->add_option("--seed", o.seed, "Base seed")->capture_default_str();
  exp->add_option("--epoch", o.epoch, "Epoch number")->capture_default_str();

  auto* st = app.add_subcommand("stats", "Per-example path counts and top-50 BLEU as CSV");
  add_io(st, o, "Corpus file");
  add_provider(st, o);
  add_threads(st, o);
  add_schedule(st, o);

  auto* dot = app.add_subcommand("dot", "Convert a lattice file to Graphviz DOT");
  add_io(dot, o, "Lattice file");
  dot->add_option("--example", o.example, "Only the lattice of this example");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (align->parsed()) return cmd_align(o, in, out);
    if (comp->parsed()) return cmd_compress(o, in, out);
    if (gen->parsed()) return cmd_generate(o, in, out);
    if (exp->parsed()) return cmd_expand(o, in, out);
    if (st->parsed()) return cmd_stats(o, in, out);
    if (dot->parsed()) return cmd_dot(o, in, out);
  } catch (const UsageError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << app.get_name() << ": error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace pseudoref::cli
