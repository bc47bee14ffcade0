#include "maw/oracle.hpp"

#include <string>

namespace maw {

WordSet factor_closure(const WordSet& words) {
  WordSet closure{Word{}};
  for (const Word& w : words)
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j <= w.size(); ++j) closure.emplace(w.begin() + i, w.begin() + j);
  return closure;
}

WordSet oracle_maw(const WordSet& closure, Letter sigma) {
  WordSet result;
  for (const Word& u : closure) {
    for (Letter a = 0; a < sigma; ++a) {
      Word au{a};
      au.insert(au.end(), u.begin(), u.end());
      if (!closure.contains(au)) continue;
      for (Letter b = 0; b < sigma; ++b) {
        Word ub = u;
        ub.push_back(b);
        if (!closure.contains(ub)) continue;
        Word aub = au;
        aub.push_back(b);
        if (!closure.contains(aub)) result.insert(std::move(aub));
      }
    }
  }
  return result;
}

WordSet rooted_language(const RootedTree& t) {
  WordSet words;
  for (NodeId v = 1; v <= t.size(); ++v) words.insert(spell_to_root(t, v));
  return words;
}

WordSet unrooted_language(const UnrootedTree& t) {
  WordSet words{Word{}};
  const std::size_t n = t.size();
  struct Frame {
    NodeId node;
    NodeId from;
    std::size_t next;
  };
  for (NodeId start = 1; start <= n; ++start) {
    Word path;
    std::vector<Frame> stack{{start, kNoNode, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbs = t.neighbors(f.node);
      if (f.next == nbs.size()) {
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const Neighbor nb = nbs[f.next++];
      if (nb.node == f.from) continue;
      path.push_back(nb.label);
      words.insert(path);
      stack.push_back({nb.node, f.node, 0});
    }
  }
  return words;
}

WordSet oracle_maw_word(const Word& w, Letter sigma, const OracleLimits& limits) {
  if (w.size() > limits.max_word_length)
    throw LimitError("word of length " + std::to_string(w.size()) + " exceeds the oracle limit of " +
                     std::to_string(limits.max_word_length));
  validate_word(w, sigma);
  return oracle_maw(factor_closure({w}), sigma);
}

WordSet oracle_maw_rooted(const RootedTree& t, const OracleLimits& limits) {
  if (t.size() > limits.max_rooted_nodes)
    throw LimitError("rooted tree with " + std::to_string(t.size()) +
                     " nodes exceeds the oracle limit of " + std::to_string(limits.max_rooted_nodes));
  return oracle_maw(factor_closure(rooted_language(t)), t.sigma());
}

WordSet oracle_maw_unrooted(const UnrootedTree& t, const OracleLimits& limits) {
  if (t.size() > limits.max_unrooted_nodes)
    throw LimitError("unrooted tree with " + std::to_string(t.size()) +
                     " nodes exceeds the oracle limit of " +
                     std::to_string(limits.max_unrooted_nodes));
  return oracle_maw(unrooted_language(t), t.sigma());
}

}  // namespace maw
