#include <set>
#include <tuple>

#include "doctest.h"
#include "maw/determinize.hpp"
#include "maw/generators.hpp"
#include "maw/maw_rooted.hpp"
#include "maw/maw_unrooted.hpp"
#include "support.hpp"

using namespace maw;

namespace {

// Runs the rooted pipeline and checks the invariants that do not need the
// oracle. Returns the expanded words.
WordSet checked_run(const RootedTree& t) {
  const RootedMawIndex index(t);
  std::set<std::tuple<Letter, StNode, Letter>> seen;
  WordSet found;
  std::vector<LetterStats> stats;
  const std::size_t count = index.enumerate(
      [&](const MawTriple& m) {
        CHECK(seen.emplace(m.first, m.node, m.last).second);
        CHECK(m.first < index.suffix_tree().sentinel());
        CHECK(m.last < index.suffix_tree().sentinel());
        found.insert(index.expand(m));
      },
      {}, &stats);
  CHECK(count == found.size());
  CHECK(count <= static_cast<std::size_t>(t.sigma()) * index.suffix_tree().edge_count());
  for (const LetterStats& s : stats)
    CHECK(s.visited <= 2 * s.list_size + s.emitted + s.induced_edges);
  return found;
}

}  // namespace

TEST_CASE("random rooted trees agree with the oracle") {
  std::size_t nondeterministic = 0;
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const Letter sigma = 1 + static_cast<Letter>(seed % 4);
    const RootedTree t = gen_random_rooted(n, sigma, seed * 7919);
    nondeterministic += !t.deterministic();
    CAPTURE(seed);
    const WordSet found = checked_run(t);
    CHECK(found == oracle_maw_rooted(t));
    const WordSet closure = factor_closure(rooted_language(t));
    for (const Word& m : found) {
      CHECK(closure.count(m) == 0);
      CHECK(closure.count(Word(m.begin(), m.end() - 1)) == 1);
      CHECK(closure.count(Word(m.begin() + 1, m.end())) == 1);
    }
  }
  CHECK(nondeterministic > 50);
}

TEST_CASE("random words agree with the oracle") {
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const std::size_t len = seed % 21;
    const Letter sigma = 1 + static_cast<Letter>(seed % 4);
    const Word word = gen_random_word(len, sigma, seed);
    CAPTURE(seed);
    CHECK(checked_run(word_to_rooted(word, sigma)) == oracle_maw_word(word, sigma));
  }
}

TEST_CASE("random unrooted trees agree with the oracle") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const Letter sigma = 1 + static_cast<Letter>(seed % 3);
    const UnrootedTree t = gen_random_unrooted(n, sigma, seed);
    CAPTURE(seed);
    CHECK(checked_run(merge_rootings(t)) == oracle_maw_unrooted(t));
  }
}

TEST_CASE("determinizing first does not change the result") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const RootedTree t = gen_random_rooted(2 + seed % 40, 2, seed);
    CAPTURE(seed);
    CHECK(checked_run(t) == checked_run(determinize(t)));
  }
}

TEST_CASE("larger trees keep the structural invariants") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const RootedTree t = gen_random_rooted(2000, 1 + static_cast<Letter>(seed % 6), seed);
    CAPTURE(seed);
    checked_run(t);
  }
}
