#include "maw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "maw/determinize.hpp"
#include "maw/generators.hpp"
#include "maw/maw_rooted.hpp"
#include "maw/maw_unrooted.hpp"
#include "maw/oracle.hpp"
#include "maw/tree_io.hpp"

namespace maw::cli {

namespace {

struct MawArgs {
  std::string kind;
  std::string input;
  bool ascii = false;
  bool triples = false;
  bool count = false;
  bool sort = false;
  bool parallel = false;
  unsigned threads = 0;
  std::uint64_t max_merged = kDefaultMaxMergedNodes;
  std::size_t oracle_limit = 0;
};

struct GenArgs {
  Letter sigma = 2;
  std::size_t n = 0;
  unsigned s = 1;
  unsigned N = 1;
  std::uint64_t seed = 1;
  std::string output;
};

struct BenchArgs {
  std::string kind = "rooted";
  std::vector<std::size_t> sizes;
  Letter sigma = 4;
  std::uint64_t seed = 1;
  std::uint64_t max_merged = kDefaultMaxMergedNodes;
};

// Input of `maw` / `verify` reduced to a rooted tree, plus what is needed
// to print and check its MAWs.
struct Instance {
  RootedTree tree = RootedTree::single_node(1);
  std::unique_ptr<Alphabet> alphabet;
  std::variant<std::monostate, Word, UnrootedTree> original;
  Letter sigma = 1;
};

Instance load(const MawArgs& a) {
  Instance inst;
  if (a.kind == "word") {
    Word w;
    if (a.ascii) {
      inst.alphabet = std::make_unique<Alphabet>(Alphabet::from_symbols(a.input));
      w = inst.alphabet->encode(a.input);
      inst.sigma = inst.alphabet->size();
    } else {
      WordInput in = parse_word_file(a.input);
      w = std::move(in.word);
      inst.sigma = in.sigma;
    }
    inst.tree = word_to_rooted(w, inst.sigma);
    inst.original = std::move(w);
    return inst;
  }
  if (a.ascii) throw ValidationError("--ascii applies to words only");
  AnyTree any = parse_tree_file(a.input);
  if (a.kind == "rooted") {
    auto* t = std::get_if<RootedTree>(&any);
    if (t == nullptr) throw ValidationError(a.input + " holds an unrooted tree");
    inst.sigma = t->sigma();
    inst.tree = std::move(*t);
    return inst;
  }
  auto* t = std::get_if<UnrootedTree>(&any);
  if (t == nullptr) throw ValidationError(a.input + " holds a rooted tree");
  inst.sigma = t->sigma();
  inst.tree = merge_rootings(*t, a.max_merged);
  inst.original = std::move(*t);
  return inst;
}

void print_word(std::ostream& out, const Word& w, const Alphabet* alphabet) {
  if (alphabet != nullptr && alphabet->has_symbols()) {
    out << alphabet->decode(w) << '\n';
    return;
  }
  for (std::size_t i = 0; i < w.size(); ++i) out << (i == 0 ? "" : " ") << w[i];
  out << '\n';
}

int cmd_maw(const MawArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  const RootedMawIndex index(inst.tree);
  const MawOptions options{a.parallel, a.threads};

  if (a.count) {
    out << index.enumerate([](const MawTriple&) {}, options) << '\n';
    return kOk;
  }
  std::vector<MawTriple> triples;
  index.enumerate([&](const MawTriple& m) { triples.push_back(m); }, options);

  if (a.sort) {
    std::vector<std::pair<Word, MawTriple>> keyed;
    keyed.reserve(triples.size());
    for (const MawTriple& m : triples) keyed.emplace_back(index.expand(m), m);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < keyed.size(); ++i) triples[i] = keyed[i].second;
  }
  std::ostringstream buf;
  for (const MawTriple& m : triples) {
    if (a.triples)
      buf << '(' << m.first << ", " << m.node << ", " << m.last << ")\n";
    else
      print_word(buf, index.expand(m), inst.alphabet.get());
  }
  out << buf.str();
  return kOk;
}

int cmd_verify(const MawArgs& a, std::ostream& out) {
  const Instance inst = load(a);
  OracleLimits limits;
  if (a.oracle_limit != 0) {
    limits.max_word_length = a.oracle_limit;
    limits.max_rooted_nodes = a.oracle_limit;
    limits.max_unrooted_nodes = a.oracle_limit;
  }

  WordSet expected;
  if (const auto* w = std::get_if<Word>(&inst.original))
    expected = oracle_maw_word(*w, inst.sigma, limits);
  else if (const auto* u = std::get_if<UnrootedTree>(&inst.original))
    expected = oracle_maw_unrooted(*u, limits);
  else
    expected = oracle_maw_rooted(inst.tree, limits);

  const RootedMawIndex index(inst.tree);
  WordSet actual;
  std::size_t emitted = 0;
  index.enumerate([&](const MawTriple& m) {
    actual.insert(index.expand(m));
    ++emitted;
  });

  std::vector<Word> missing;
  std::vector<Word> extra;
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  if (missing.empty() && extra.empty() && emitted == actual.size()) {
    out << "ok " << actual.size() << " MAWs\n";
    return kOk;
  }
  out << "mismatch: oracle " << expected.size() << ", pipeline " << emitted << " (" << actual.size()
      << " distinct)\n";
  for (const Word& w : missing) {
    out << "missing: ";
    print_word(out, w, inst.alphabet.get());
  }
  for (const Word& w : extra) {
    out << "extra: ";
    print_word(out, w, inst.alphabet.get());
  }
  return kMismatch;
}

template <typename Writer>
int emit_generated(const GenArgs& g, std::ostream& out, Writer write) {
  if (g.output.empty()) {
    write(out);
    return kOk;
  }
  std::ofstream file(g.output);
  if (!file) throw ValidationError("cannot write " + g.output);
  write(file);
  return kOk;
}

int cmd_bench(const BenchArgs& b, std::ostream& out) {
  if (b.kind != "rooted" && b.kind != "unrooted") throw ValidationError("--kind must be rooted or unrooted");
  out << std::left << std::setw(10) << "n" << std::setw(12) << "input_nodes" << std::setw(12)
      << "det_nodes" << std::setw(12) << "st_nodes" << std::setw(12) << "maws"
      << "seconds\n";
  for (std::size_t n : b.sizes) {
    using clock = std::chrono::steady_clock;
    RootedTree tree = RootedTree::single_node(b.sigma);
    std::size_t input_nodes = n;
    const auto start = clock::now();
    if (b.kind == "rooted") {
      tree = gen_random_rooted(n, b.sigma, b.seed);
    } else {
      tree = merge_rootings(gen_random_unrooted(n, b.sigma, b.seed), b.max_merged);
      input_nodes = tree.size();
    }
    const RootedMawIndex index(tree);
    const std::size_t maws = index.enumerate([](const MawTriple&) {});
    const auto done = clock::now();
    const double seconds = std::chrono::duration<double>(done - start).count();
    out << std::left << std::setw(10) << n << std::setw(12) << input_nodes << std::setw(12)
        << index.tree().size() << std::setw(12) << index.suffix_tree().size() << std::setw(12)
        << maws << std::fixed << std::setprecision(3) << seconds << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal absent words of words, rooted trees and unrooted trees", "maw"};
  app.require_subcommand(1);

  MawArgs maw_args;
  auto add_input = [](CLI::App* cmd, MawArgs& a) {
    cmd->add_option("kind", a.kind, "rooted, unrooted or word")
        ->required()
        ->check(CLI::IsMember({"rooted", "unrooted", "word"}));
    cmd->add_option("input", a.input, "tree or word file; the word itself with --ascii")->required();
    cmd->add_flag("--ascii", a.ascii, "word given as text, one letter per character");
    cmd->add_option("--max-merged-nodes", a.max_merged, "cap on the merged tree for unrooted input");
  };

  auto* maw_cmd = app.add_subcommand("maw", "print all minimal absent words");
  add_input(maw_cmd, maw_args);
  maw_cmd->add_flag("--triples", maw_args.triples, "print (first, st_node, last) triples");
  maw_cmd->add_flag("--count", maw_args.count, "print only the number of MAWs");
  maw_cmd->add_flag("--sort", maw_args.sort, "sort output lexicographically");
  maw_cmd->add_flag("--parallel-letters", maw_args.parallel, "process letters on worker threads");
  maw_cmd->add_option("--threads", maw_args.threads, "worker threads for --parallel-letters");

  MawArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "compare the pipeline against the brute-force oracle");
  add_input(verify_cmd, verify_args);
  verify_cmd->add_option("--oracle-limit", verify_args.oracle_limit, "override the oracle size guard");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_fixed = gen_cmd->add_subcommand("fixed-length", "word with many MAWs of one length");
  gen_fixed->add_option("--sigma", gen_args.sigma)->required();
  gen_fixed->add_option("--n", gen_args.n)->required();
  auto* gen_extremal = gen_cmd->add_subcommand("extremal-unrooted", "unrooted tree with s^3 N^2 MAWs");
  gen_extremal->add_option("--s", gen_args.s)->required();
  gen_extremal->add_option("--N", gen_args.N)->required();
  auto* gen_rr = gen_cmd->add_subcommand("random-rooted", "uniform random rooted tree");
  auto* gen_ru = gen_cmd->add_subcommand("random-unrooted", "uniform random unrooted tree");
  for (auto* cmd : {gen_rr, gen_ru}) {
    cmd->add_option("--n", gen_args.n)->required();
    cmd->add_option("--sigma", gen_args.sigma)->required();
    cmd->add_option("--seed", gen_args.seed);
  }
  for (auto* cmd : {gen_fixed, gen_extremal, gen_rr, gen_ru})
    cmd->add_option("-o,--output", gen_args.output, "output file (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "time the pipeline on random trees");
  bench_cmd->add_option("--kind", bench_args.kind)->check(CLI::IsMember({"rooted", "unrooted"}));
  bench_cmd->add_option("--sizes", bench_args.sizes)->delimiter(',')->required();
  bench_cmd->add_option("--sigma", bench_args.sigma);
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--max-merged-nodes", bench_args.max_merged);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*maw_cmd) return cmd_maw(maw_args, out);
    if (*verify_cmd) return cmd_verify(verify_args, out);
    if (*gen_fixed) {
      const FixedLengthWord f = gen_fixed_length_word(gen_args.sigma, gen_args.n);
      return emit_generated(gen_args, out, [&](std::ostream& o) {
        write_word(o, f.word, f.alphabet_size());
      });
    }
    if (*gen_extremal) {
      const UnrootedTree t = gen_unrooted_extremal(gen_args.s, gen_args.N);
      return emit_generated(gen_args, out, [&](std::ostream& o) { write_tree(o, t); });
    }
    if (*gen_rr) {
      const RootedTree t = gen_random_rooted(gen_args.n, gen_args.sigma, gen_args.seed);
      return emit_generated(gen_args, out, [&](std::ostream& o) { write_tree(o, t); });
    }
    if (*gen_ru) {
      const UnrootedTree t = gen_random_unrooted(gen_args.n, gen_args.sigma, gen_args.seed);
      return emit_generated(gen_args, out, [&](std::ostream& o) { write_tree(o, t); });
    }
    if (*bench_cmd) return cmd_bench(bench_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimitExceeded;
  } catch (const std::bad_alloc&) {
    err << "limit exceeded: out of memory\n";
    return kLimitExceeded;
  }
  return kParseError;
}

}  // namespace maw::cli
