#include "doctest.h"
#include "maw/core.hpp"
#include "support.hpp"

using namespace maw;
using maw::test::w;

TEST_CASE("alphabet from symbols is sorted and round-trips") {
  const Alphabet a = Alphabet::from_symbols("banana");
  CHECK(a.size() == 3);
  CHECK(a.has_symbols());
  CHECK(a.encode('a') == 0);
  CHECK(a.encode('b') == 1);
  CHECK(a.encode('n') == 2);
  CHECK(a.sentinel() == 3);
  CHECK(a.decode(a.encode("banana")) == "banana");
  CHECK_THROWS_AS(a.encode('z'), ValidationError);
  CHECK_THROWS_AS(a.decode(Letter{3}), ValidationError);
}

TEST_CASE("alphabet edge cases") {
  const Alphabet empty = Alphabet::from_symbols("");
  CHECK(empty.size() == 1);
  CHECK_FALSE(empty.has_symbols());
  CHECK_THROWS_AS(Alphabet(0), ValidationError);
}

TEST_CASE("rooted tree construction and children order") {
  // children of the root given out of label order
  const RootedTree t = RootedTree::from_parents(3, {kNoNode, kNoNode, 1, 1, 1, 2}, {0, 0, 2, 0, 1, 1});
  CHECK(t.size() == 5);
  CHECK(t.root() == 1);
  CHECK(t.deterministic());
  auto kids = t.children(1);
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].label == 0);
  CHECK(kids[0].node == 3);
  CHECK(kids[1].label == 1);
  CHECK(kids[1].node == 4);
  CHECK(kids[2].label == 2);
  CHECK(kids[2].node == 2);
  CHECK(t.parent(5) == 2);
  CHECK(t.parent_label(5) == 1);
}

TEST_CASE("nondeterministic tree is flagged") {
  const RootedTree t = RootedTree::from_parents(2, {kNoNode, kNoNode, 1, 1}, {0, 0, 0, 0});
  CHECK_FALSE(t.deterministic());
}

TEST_CASE("rooted tree validation") {
  CHECK_THROWS_AS(RootedTree::from_parents(0, {kNoNode, kNoNode}, {0, 0}), ValidationError);
  // root with a parent
  CHECK_THROWS_AS(RootedTree::from_parents(2, {kNoNode, 2, 1}, {0, 0, 0}), ValidationError);
  // label outside the alphabet
  CHECK_THROWS_AS(RootedTree::from_parents(2, {kNoNode, kNoNode, 1}, {0, 0, 2}), ValidationError);
  // cycle 2 -> 3 -> 2, unreachable from the root
  CHECK_THROWS_AS(RootedTree::from_parents(2, {kNoNode, kNoNode, 3, 2}, {0, 0, 0, 0}), ValidationError);
  // self parent
  CHECK_THROWS_AS(RootedTree::from_parents(2, {kNoNode, kNoNode, 2}, {0, 0, 0}), ValidationError);
  // parent out of range
  CHECK_THROWS_AS(RootedTree::from_parents(2, {kNoNode, kNoNode, 7}, {0, 0, 0}), ValidationError);
}

TEST_CASE("unrooted tree validation") {
  const UnrootedTree path = UnrootedTree::from_edges(3, 2, {{1, 2, 0}, {2, 3, 1}});
  CHECK(path.size() == 3);
  CHECK(path.neighbors(2).size() == 2);
  CHECK(UnrootedTree::from_edges(1, 1, {}).size() == 1);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, 2, {{1, 2, 0}}), ValidationError);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, 2, {{1, 1, 0}, {2, 3, 0}}), ValidationError);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, 2, {{1, 2, 0}, {2, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, 2, {{1, 2, 0}, {2, 4, 0}}), ValidationError);
  CHECK_THROWS_AS(UnrootedTree::from_edges(3, 2, {{1, 2, 0}, {2, 3, 2}}), ValidationError);
  // 4 nodes, 3 edges, but a cycle leaves node 4 disconnected
  CHECK_THROWS_AS(UnrootedTree::from_edges(4, 2, {{1, 2, 0}, {2, 3, 0}, {3, 1, 0}}), ValidationError);
}

TEST_CASE("word_to_rooted") {
  SUBCASE("empty word") {
    const RootedTree t = word_to_rooted(Word{}, 1);
    CHECK(t.size() == 1);
  }
  SUBCASE("single letter") {
    const RootedTree t = word_to_rooted(w("a"), 1);
    CHECK(t.size() == 2);
    CHECK(t.parent_label(2) == 0);
  }
  SUBCASE("aab") {
    const RootedTree t = word_to_rooted(w("aab"), 2);
    REQUIRE(t.size() == 4);
    // root-to-leaf labels b, a, a
    CHECK(t.parent_label(2) == 1);
    CHECK(t.parent_label(3) == 0);
    CHECK(t.parent_label(4) == 0);
    CHECK(spell_to_root(t, 4) == w("aab"));
    CHECK(maw::test::to_set(std::vector<Word>{spell_to_root(t, 1), spell_to_root(t, 2),
                                              spell_to_root(t, 3), spell_to_root(t, 4)}) ==
          maw::test::words({"", "b", "ab", "aab"}));
  }
  SUBCASE("letters are validated") { CHECK_THROWS_AS(word_to_rooted(w("ac"), 2), ValidationError); }
}

TEST_CASE("spell_to_root") {
  const RootedTree t = RootedTree::from_parents(2, {kNoNode, kNoNode, 1, 2}, {0, 0, 0, 1});
  CHECK(spell_to_root(t, 1).empty());
  CHECK(spell_to_root(t, 3) == w("ba"));
  CHECK_THROWS_AS(spell_to_root(t, 0), std::out_of_range);
  CHECK_THROWS_AS(spell_to_root(t, 4), std::out_of_range);
}

TEST_CASE("word suffix property") {
  const Word word = w("abaabbab");
  const RootedTree t = word_to_rooted(word, 2);
  for (NodeId v = 1; v <= t.size(); ++v) {
    const Word s = spell_to_root(t, v);
    CHECK(s == Word(word.end() - static_cast<std::ptrdiff_t>(s.size()), word.end()));
  }
}
