#pragma once

#include <set>

#include "maw/core.hpp"

namespace maw {

// Brute-force reference implementations. Deliberately naive: closures are
// materialized as sorted sets of words.

using WordSet = std::set<Word>;

struct OracleLimits {
  std::size_t max_word_length = 64;
  std::size_t max_rooted_nodes = 16;
  std::size_t max_unrooted_nodes = 12;
};

/// All factors of all words, the empty word included.
WordSet factor_closure(const WordSet& words);

/// Words a·u·b (a, b < sigma) with a·u and u·b in `closure` but a·u·b not.
/// `closure` must be factor-closed.
WordSet oracle_maw(const WordSet& closure, Letter sigma);

/// {str(v)} for every node.
WordSet rooted_language(const RootedTree& t);
/// Labels of all ordered simple paths, found by DFS from every node.
WordSet unrooted_language(const UnrootedTree& t);

/// These throw LimitError when the instance exceeds the configured limit.
WordSet oracle_maw_word(const Word& w, Letter sigma, const OracleLimits& limits = {});
WordSet oracle_maw_rooted(const RootedTree& t, const OracleLimits& limits = {});
WordSet oracle_maw_unrooted(const UnrootedTree& t, const OracleLimits& limits = {});

}  // namespace maw
