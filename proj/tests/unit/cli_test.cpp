#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "maw/cli.hpp"
#include "maw/tree_io.hpp"
#include "support.hpp"

using namespace maw;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("maw_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("parse rooted trees") {
  std::istringstream single("rooted 1 2\n");
  const AnyTree t1 = parse_tree(single);
  REQUIRE(std::holds_alternative<RootedTree>(t1));
  CHECK(std::get<RootedTree>(t1).size() == 1);

  std::istringstream two("# comment\nrooted 3 2\n\n2 1 0\n3 1 1\n");
  const RootedTree t2 = std::get<RootedTree>(parse_tree(two));
  CHECK(t2.size() == 3);
  CHECK(t2.children(1).size() == 2);
  CHECK(t2.children(1)[0].label == 0);
  CHECK(t2.children(1)[1].label == 1);
}

TEST_CASE("parse unrooted trees") {
  std::istringstream in("unrooted 3 2\n1 2 0\n2 3 1\n");
  const UnrootedTree t = std::get<UnrootedTree>(parse_tree(in));
  CHECK(t.size() == 3);
  CHECK(oracle_maw_unrooted(t) == maw::test::words({"aa", "bb", "aba", "bab"}));
}

TEST_CASE("parse errors and validation errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("tree 3 2\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted x 2\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted 3 2\n2 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted 2 2\n2 1 0\n2 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted 2 2\n2 1 -1\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted 2 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("rooted 2 2\n2 1 2\n"), ValidationError);
  CHECK_THROWS_AS(parse("rooted 3 2\n2 3 0\n3 2 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("rooted 3 2\n2 1 0\n2 1 1\n"), ValidationError);
  CHECK_THROWS_AS(parse("rooted 2 2\n1 2 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("rooted 0 2\n"), ValidationError);
  CHECK_THROWS_AS(parse("unrooted 3 2\n1 2 0\n1 2 1\n"), ValidationError);
  CHECK_THROWS_AS(parse("unrooted 4 2\n1 2 0\n2 3 0\n3 1 0\n"), ValidationError);

  std::istringstream bad_word("word 3 2\n0 1\n");
  CHECK_THROWS_AS(parse_word(bad_word), ParseError);
  std::istringstream bad_letter("word 2 2\n0 2\n");
  CHECK_THROWS_AS(parse_word(bad_letter), ValidationError);
}

TEST_CASE("round trip through the text format") {
  const RootedTree t = maw::test::example_a();
  std::ostringstream out;
  write_tree(out, t);
  std::istringstream in(out.str());
  const RootedTree back = std::get<RootedTree>(parse_tree(in));
  REQUIRE(back.size() == t.size());
  for (NodeId v = 2; v <= t.size(); ++v) {
    CHECK(back.parent(v) == t.parent(v));
    CHECK(back.parent_label(v) == t.parent_label(v));
  }

  const UnrootedTree u = UnrootedTree::from_edges(4, 3, {{1, 2, 0}, {2, 3, 2}, {4, 2, 1}});
  std::ostringstream uout;
  write_tree(uout, u);
  std::istringstream uin(uout.str());
  const UnrootedTree uback = std::get<UnrootedTree>(parse_tree(uin));
  CHECK(uback.size() == 4);
  CHECK(unrooted_language(uback) == unrooted_language(u));

  std::ostringstream wout;
  write_word(wout, maw::test::w("abca"), 3);
  std::istringstream win(wout.str());
  const WordInput wback = parse_word(win);
  CHECK(wback.word == maw::test::w("abca"));
  CHECK(wback.sigma == 3);
}

TEST_CASE("maw word in ASCII mode") {
  const Result r = run({"maw", "word", "aab", "--ascii", "--sort"});
  CHECK(r.code == 0);
  CHECK(r.out == "aaa\nba\nbb\n");
  CHECK(run({"maw", "word", "aab", "--ascii", "--count"}).out == "3\n");
  CHECK(run({"maw", "word", "aab", "--ascii", "--triples"}).out == "(0, 1, 0)\n(1, 0, 0)\n(1, 0, 1)\n");
}

TEST_CASE("maw rooted from a file") {
  const std::string path = write_temp("example.txt", "rooted 4 2\n2 1 0\n3 1 1\n4 2 1\n");
  const Result r = run({"maw", "rooted", path, "--sort"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 0\n0 1\n1 1\n");
  CHECK(run({"maw", "rooted", path, "--count"}).out == "3\n");
  CHECK(run({"maw", "rooted", path, "--parallel-letters", "--threads", "2"}).out ==
        run({"maw", "rooted", path}).out);
}

TEST_CASE("count equals line count and output is deterministic") {
  const std::string path = write_temp("random.txt", "");
  REQUIRE(run({"gen", "random-rooted", "--n", "500", "--sigma", "3", "--seed", "4", "-o", path}).code == 0);
  const Result full = run({"maw", "rooted", path});
  const Result count = run({"maw", "rooted", path, "--count"});
  CHECK(std::to_string(lines(full.out)) + "\n" == count.out);
  CHECK(run({"maw", "rooted", path}).out == full.out);
  CHECK(run({"verify", "rooted", path}).code == 4);  // over the oracle size guard
}

TEST_CASE("verify subcommand") {
  const std::string rooted = write_temp("verify_rooted.txt", "");
  REQUIRE(run({"gen", "random-rooted", "--n", "12", "--sigma", "3", "--seed", "8", "-o", rooted}).code == 0);
  const Result r = run({"verify", "rooted", rooted});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("ok ", 0) == 0);
  CHECK(run({"verify", "word", "abba", "--ascii"}).code == 0);
  const std::string unrooted = write_temp("verify_unrooted.txt", "unrooted 3 2\n1 2 0\n2 3 1\n");
  CHECK(run({"verify", "unrooted", unrooted}).out == "ok 4 MAWs\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"maw", "rooted", "/nonexistent/file"}).code == 1);
  CHECK(run({"maw", "rooted", write_temp("bad_header.txt", "rooted three 2\n")}).code == 1);
  CHECK(run({"maw", "rooted", write_temp("bad_label.txt", "rooted 2 2\n2 1 5\n")}).code == 2);
  CHECK(run({"maw", "rooted", write_temp("is_unrooted.txt", "unrooted 2 2\n1 2 0\n")}).code == 2);
  const std::string path = write_temp("cap.txt", "unrooted 3 2\n1 2 0\n2 3 1\n");
  CHECK(run({"maw", "unrooted", path, "--max-merged-nodes", "6"}).code == 4);
  CHECK(run({"maw", "unrooted", path, "--max-merged-nodes", "7", "--count"}).out == "4\n");
  CHECK(run({"gen", "fixed-length", "--sigma", "2", "--n", "8"}).code == 2);
}

TEST_CASE("generators through the CLI") {
  const Result ext = run({"gen", "extremal-unrooted", "--s", "1", "--N", "1"});
  CHECK(ext.code == 0);
  CHECK(ext.out.rfind("unrooted 6 2\n", 0) == 0);
  const Result fixed = run({"gen", "fixed-length", "--sigma", "2", "--n", "32"});
  CHECK(fixed.code == 0);
  CHECK(fixed.out.rfind("word 25 3\n", 0) == 0);
  const Result bench = run({"bench", "--kind", "rooted", "--sizes", "100,200", "--sigma", "2"});
  CHECK(bench.code == 0);
  CHECK(lines(bench.out) == 3);
}
