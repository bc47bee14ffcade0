#include "maw/maw_rooted.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "maw/determinize.hpp"

namespace maw {

LetterLists build_letter_lists(const SuffixTree& st) {
  const RootedTree& t = st.text().tree();
  const Letter sigma = t.sigma();
  const std::size_t n = t.size();

  // Counting sort of (letter, leaf) pairs by leaf preorder, then a stable
  // bucket pass by letter.
  std::vector<std::uint32_t> count(st.size() + 1, 0);
  for (NodeId v = 2; v <= n; ++v) ++count[st.leaf_for(t.parent(v)) + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<NodeId> by_leaf(n > 0 ? n - 1 : 0);
  for (NodeId v = 2; v <= n; ++v) by_leaf[count[st.leaf_for(t.parent(v))]++] = v;

  LetterLists lists;
  lists.begin_.assign(static_cast<std::size_t>(sigma) + 1, 0);
  for (NodeId v : by_leaf) ++lists.begin_[t.parent_label(v) + 1];
  std::partial_sum(lists.begin_.begin(), lists.begin_.end(), lists.begin_.begin());
  lists.leaves_.resize(by_leaf.size());
  std::vector<std::uint32_t> fill(lists.begin_.begin(), lists.begin_.end() - 1);
  for (NodeId v : by_leaf) lists.leaves_[fill[t.parent_label(v)]++] = st.leaf_for(t.parent(v));
  return lists;
}

InducedSubtree build_induced(const SuffixTree& st, const LcaIndex& lca,
                             std::span<const StNode> leaves) {
  constexpr std::uint32_t kNone = InducedSubtree::kNone;
  std::vector<StNode> node_st{st.root()};
  std::vector<std::uint32_t> edge_parent;
  std::vector<std::uint32_t> edge_child;
  node_st.reserve(2 * leaves.size() + 1);
  edge_parent.reserve(2 * leaves.size());
  edge_child.reserve(2 * leaves.size());

  auto depth = [&](std::uint32_t i) { return st.string_depth(node_st[i]); };
  auto link = [&](std::uint32_t p, std::uint32_t c) {
    edge_parent.push_back(p);
    edge_child.push_back(c);
  };

  // The stack holds the rightmost path of the tree built so far.
  std::vector<std::uint32_t> stack{0};
  for (StNode x : leaves) {
    const StNode l = lca(node_st[stack.back()], x);
    const std::uint32_t l_depth = st.string_depth(l);
    while (depth(stack.back()) > l_depth) {
      const std::uint32_t top = stack.back();
      stack.pop_back();
      if (depth(stack.back()) < l_depth) {
        const auto split = static_cast<std::uint32_t>(node_st.size());
        node_st.push_back(l);
        link(split, top);
        stack.push_back(split);
      } else {
        link(stack.back(), top);
      }
    }
    stack.push_back(static_cast<std::uint32_t>(node_st.size()));
    node_st.push_back(x);
  }
  while (stack.size() > 1) {
    const std::uint32_t top = stack.back();
    stack.pop_back();
    link(stack.back(), top);
  }

  // Children were linked in preorder; renumber nodes by a preorder walk.
  const std::size_t m = node_st.size();
  std::vector<std::uint32_t> begin(m + 1, 0);
  for (std::uint32_t p : edge_parent) ++begin[p + 1];
  std::partial_sum(begin.begin(), begin.end(), begin.begin());
  std::vector<std::uint32_t> kids(edge_child.size());
  {
    std::vector<std::uint32_t> fill(begin.begin(), begin.end() - 1);
    for (std::size_t e = 0; e < edge_child.size(); ++e) kids[fill[edge_parent[e]]++] = edge_child[e];
  }

  InducedSubtree out;
  out.st_node_.reserve(m);
  out.parent_.reserve(m);
  out.child_begin_.assign(m + 1, 0);
  out.children_.reserve(m - 1);
  std::vector<std::uint32_t> rename(m, kNone);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> walk{{0, kNone}};
  while (!walk.empty()) {
    const auto [old, parent] = walk.back();
    walk.pop_back();
    const auto id = static_cast<std::uint32_t>(out.st_node_.size());
    rename[old] = id;
    out.st_node_.push_back(node_st[old]);
    out.parent_.push_back(parent);
    for (std::uint32_t k = begin[old + 1]; k-- > begin[old];) walk.emplace_back(kids[k], id);
  }
  for (std::uint32_t i = 1; i < m; ++i) ++out.child_begin_[out.parent_[i] + 1];
  std::partial_sum(out.child_begin_.begin(), out.child_begin_.end(), out.child_begin_.begin());
  out.children_.resize(m - 1);
  std::vector<std::uint32_t> fill(out.child_begin_.begin(), out.child_begin_.end() - 1);
  for (std::uint32_t i = 1; i < m; ++i) out.children_[fill[out.parent_[i]]++] = i;
  return out;
}

std::size_t emit_for_letter(const RootedMawIndex& index, const InducedSubtree& sta, Letter a,
                            const MawSink& sink, LetterStats* stats) {
  const SuffixTree& st = index.suffix_tree();
  const Letter sentinel = st.sentinel();
  std::size_t emitted = 0;
  std::size_t visited = 0;
  std::vector<StNode> inner;

  for (std::uint32_t i = 0; i < sta.size(); ++i) {
    const StNode v = sta.st_node(i);
    ++visited;

    if (i != 0) {
      // Explicit ST nodes strictly inside the ST(a) edge into v. Nodes whose
      // only non-sentinel child leads to v emit nothing and are skipped. A
      // leaf hanging below its parent by a bare sentinel edge is the one
      // exception: every non-sentinel child of that parent misses v.
      const std::uint32_t top_depth = st.node_depth(sta.st_node(sta.parent(i)));
      inner.clear();
      StNode w = index.branching_ancestor(v);
      if (st.is_leaf(v) && st.first_letter(v) == sentinel) {
        const StNode p = st.parent(v);
        if (st.node_depth(p) > top_depth) {
          inner.push_back(p);
          w = index.branching_ancestor(p);
        }
      }
      for (; w != kNoStNode && st.node_depth(w) > top_depth; w = index.branching_ancestor(w))
        inner.push_back(w);
      visited += inner.size();
      for (auto it = inner.rbegin(); it != inner.rend(); ++it) {
        for (StNode c : st.children(*it)) {
          const Letter b = st.first_letter(c);
          if (b == sentinel || st.in_subtree(c, v)) continue;
          sink(MawTriple{a, *it, b});
          ++emitted;
        }
      }
    }

    auto kids = sta.children(i);
    std::size_t j = 0;
    for (StNode c : st.children(v)) {
      if (j < kids.size() && st.in_subtree(c, sta.st_node(kids[j]))) {
        ++j;
        continue;
      }
      const Letter b = st.first_letter(c);
      if (b == sentinel) continue;
      sink(MawTriple{a, v, b});
      ++emitted;
    }
  }

  if (stats != nullptr) {
    stats->letter = a;
    stats->induced_nodes = sta.size();
    stats->induced_edges = sta.edge_count();
    stats->emitted = emitted;
    stats->visited = visited;
  }
  return emitted;
}

namespace {

SuffixTree suffix_tree_of(const RootedTree& t) {
  if (t.deterministic()) return build_suffix_tree(augment(t));
  return build_suffix_tree(augment(determinize(t)));
}

}  // namespace

RootedMawIndex::RootedMawIndex(const RootedTree& t)
    : suffix_tree_(suffix_tree_of(t)), lca_(suffix_tree_), lists_(build_letter_lists(suffix_tree_)) {
  const SuffixTree& st = suffix_tree_;
  const Letter sentinel = st.sentinel();
  branching_up_.assign(st.size(), kNoStNode);
  std::vector<std::uint8_t> branching(st.size(), 0);
  for (StNode u = 0; u < st.size(); ++u) {
    int letters = 0;
    for (StNode c : st.children(u))
      if (st.first_letter(c) != sentinel && ++letters == 2) break;
    branching[u] = letters >= 2;
  }
  for (StNode u = 1; u < st.size(); ++u) {
    const StNode p = st.parent(u);
    branching_up_[u] = branching[p] ? p : branching_up_[p];
  }
}

std::size_t RootedMawIndex::enumerate(const MawSink& sink, const MawOptions& options,
                                      std::vector<LetterStats>* stats) const {
  const Letter sigma = lists_.sigma();
  std::vector<Letter> active;
  for (Letter a = 0; a < sigma; ++a)
    if (!lists_.of(a).empty()) active.push_back(a);
  if (stats != nullptr) stats->assign(active.size(), LetterStats{});

  auto run_letter = [&](std::size_t k, const MawSink& out) {
    const Letter a = active[k];
    const InducedSubtree sta = build_induced(suffix_tree_, lca_, lists_.of(a));
    LetterStats* s = stats != nullptr ? &(*stats)[k] : nullptr;
    const std::size_t count = emit_for_letter(*this, sta, a, out, s);
    if (s != nullptr) s->list_size = lists_.of(a).size();
    return count;
  };

  std::size_t total = 0;
  if (!options.parallel_letters || active.size() < 2) {
    for (std::size_t k = 0; k < active.size(); ++k) total += run_letter(k, sink);
    return total;
  }

  // Each letter fills its own buffer; buffers are drained in letter order.
  std::vector<std::vector<MawTriple>> buffers(active.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < active.size();) {
      auto& buf = buffers[k];
      run_letter(k, [&buf](const MawTriple& m) { buf.push_back(m); });
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(active.size())));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& buf : buffers) {
    for (const MawTriple& m : buf) sink(m);
    total += buf.size();
  }
  return total;
}

std::size_t maw_rooted(const RootedTree& t, const MawSink& sink, const MawOptions& options) {
  return RootedMawIndex(t).enumerate(sink, options);
}

std::vector<Word> maw_rooted_words(const RootedTree& t) {
  const RootedMawIndex index(t);
  std::vector<Word> words;
  index.enumerate([&](const MawTriple& m) { words.push_back(index.expand(m)); });
  return words;
}

}  // namespace maw
