#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "maw/core.hpp"
#include "maw/oracle.hpp"
#include "maw/suffix_tree.hpp"

namespace maw::test {

// 'a' -> 0, 'b' -> 1, ...
inline Word w(std::string_view s) {
  Word out;
  for (char c : s) out.push_back(static_cast<Letter>(c - 'a'));
  return out;
}

inline WordSet words(std::initializer_list<std::string_view> list) {
  WordSet out;
  for (std::string_view s : list) out.insert(w(s));
  return out;
}

inline std::string str(const Word& word) {
  std::string out;
  for (Letter l : word) out.push_back(static_cast<char>('a' + l));
  return out;
}

template <typename Range>
WordSet to_set(const Range& range) {
  return WordSet(range.begin(), range.end());
}

// Root r; r -a-> x; r -b-> y; x -b-> z. Words {e, a, b, ba}.
inline RootedTree example_a() {
  return RootedTree::from_parents(2, {kNoNode, kNoNode, 1, 1, 2}, {0, 0, 0, 1, 1});
}

// Compacted trie built by inserting every str(v)$ letter by letter.
// Maps each explicit node word to the sorted words of its children.
using TrieShape = std::map<Word, std::vector<Word>>;

inline TrieShape naive_suffix_trie(const RootedTree& t) {
  const Letter sentinel = t.sigma();
  std::map<Word, std::set<Letter>> next;  // uncompacted trie: word -> child letters
  next[{}];
  for (NodeId v = 1; v <= t.size(); ++v) {
    Word s = spell_to_root(t, v);
    s.push_back(sentinel);
    Word prefix;
    for (Letter l : s) {
      next[prefix].insert(l);
      prefix.push_back(l);
      next[prefix];
    }
  }
  TrieShape shape;
  for (const auto& [word, letters] : next) {
    if (!word.empty() && letters.size() == 1) continue;
    auto& kids = shape[word];
    for (Letter l : letters) {
      Word down = word;
      down.push_back(l);
      while (next.at(down).size() == 1) down.push_back(*next.at(down).begin());
      kids.push_back(down);
    }
  }
  return shape;
}

inline TrieShape shape_of(const SuffixTree& st) {
  TrieShape shape;
  for (StNode u = 0; u < st.size(); ++u) {
    auto& kids = shape[st.spell(u)];
    for (StNode c : st.children(u)) kids.push_back(st.spell(c));
  }
  return shape;
}

}  // namespace maw::test
