#include "maw/suffix_tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace maw {

AugmentedTree AugmentedTree::augment(const RootedTree& t) {
  if (!t.deterministic()) throw ValidationError("suffix tree input must be deterministic");
  const std::size_t n = t.size();
  const NodeId top = static_cast<NodeId>(n + 1);

  AugmentedTree a;
  a.tree_ = t;
  a.parent_.assign(t.parents().begin(), t.parents().end());
  a.label_.assign(t.labels().begin(), t.labels().end());
  a.parent_.push_back(kNoNode);
  a.label_.push_back(0);
  a.parent_[1] = top;
  a.label_[1] = t.sigma();

  a.depth_.assign(n + 2, 0);
  a.bfs_.reserve(n);
  a.bfs_.push_back(1);
  a.depth_[1] = 1;
  for (std::size_t head = 0; head < a.bfs_.size(); ++head) {
    const NodeId v = a.bfs_[head];
    for (const Child& c : t.children(v)) {
      a.depth_[c.node] = a.depth_[v] + 1;
      a.bfs_.push_back(c.node);
    }
  }

  // Preorder numbers; the new root takes 0 and the old root 1.
  a.preorder_.assign(n + 2, 0);
  std::uint32_t next = 1;
  std::vector<NodeId> stack{1};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    a.preorder_[v] = next++;
    auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->node);
  }

  // Nodes grouped by depth, each group sorted by preorder.
  const std::uint32_t max_depth = a.depth_[a.bfs_.back()];
  a.level_begin_.assign(max_depth + 2, 0);
  ++a.level_begin_[1];
  for (NodeId v = 1; v <= n; ++v) ++a.level_begin_[a.depth_[v] + 1];
  std::partial_sum(a.level_begin_.begin(), a.level_begin_.end(), a.level_begin_.begin());
  std::vector<NodeId> by_preorder(n + 1);
  by_preorder[0] = top;
  for (NodeId v = 1; v <= n; ++v) by_preorder[a.preorder_[v]] = v;
  a.level_preorder_.resize(n + 1);
  a.level_node_.resize(n + 1);
  std::vector<std::uint32_t> fill(a.level_begin_.begin(), a.level_begin_.end() - 1);
  for (NodeId v : by_preorder) {
    const std::uint32_t slot = fill[a.depth_[v]]++;
    a.level_preorder_[slot] = a.preorder_[v];
    a.level_node_[slot] = v;
  }
  return a;
}

NodeId AugmentedTree::ancestor(NodeId v, std::uint32_t k) const {
  assert(k <= depth_[v]);
  if (k == 0) return v;
  const std::uint32_t d = depth_[v] - k;
  auto first = level_preorder_.begin() + level_begin_[d];
  auto last = level_preorder_.begin() + level_begin_[d + 1];
  auto it = std::upper_bound(first, last, preorder_[v]);
  return level_node_[static_cast<std::size_t>(it - level_preorder_.begin()) - 1];
}

Word AugmentedTree::spell(NodeId v, std::uint32_t length) const {
  Word w;
  w.reserve(length);
  for (; length > 0; --length, v = parent_[v]) w.push_back(label_[v]);
  return w;
}

namespace {

struct Extension {
  Letter letter;
  StNode link;
};

// Incremental construction state. Every inserted word c·X has its parent
// word X already present as a leaf; the new leaf hangs below the node for
// c·word(v), where v is the deepest ancestor of leaf(X) whose word is
// already left-extensible by c.
class WeinerBuilder {
 public:
  explicit WeinerBuilder(const AugmentedTree& t) : t_(t) {
    const std::size_t cap = 2 * t.size() + 1;
    parent_.reserve(cap);
    label_.reserve(cap);
    depth_.reserve(cap);
    kids_.reserve(cap);
    ext_.reserve(cap);
    leaf_.reserve(cap);
    new_node(kNoStNode, {kNoNode, 0}, 0);
    leaf_for_.assign(t.size() + 1, kNoStNode);
    leaf_for_[t.root()] = 0;
  }

  void insert(NodeId v);

  const AugmentedTree& t_;
  std::vector<StNode> parent_;
  std::vector<EdgeLabelRef> label_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<StNode>> kids_;
  std::vector<std::vector<Extension>> ext_;
  std::vector<NodeId> leaf_;
  std::vector<StNode> leaf_for_;

 private:
  StNode new_node(StNode parent, EdgeLabelRef label, std::uint32_t depth) {
    const auto id = static_cast<StNode>(parent_.size());
    parent_.push_back(parent);
    label_.push_back(label);
    depth_.push_back(depth);
    kids_.emplace_back();
    ext_.emplace_back();
    leaf_.push_back(kNoNode);
    return id;
  }

  Letter first_letter(StNode u) const { return t_.label(label_[u].start); }

  std::vector<StNode>::iterator child_slot(StNode u, Letter a) {
    return std::lower_bound(kids_[u].begin(), kids_[u].end(), a,
                            [&](StNode c, Letter x) { return first_letter(c) < x; });
  }

  Extension* find_ext(StNode u, Letter a) {
    auto& e = ext_[u];
    auto it = std::lower_bound(e.begin(), e.end(), a,
                               [](const Extension& x, Letter y) { return x.letter < y; });
    return it != e.end() && it->letter == a ? &*it : nullptr;
  }

  void add_ext(StNode u, Letter a, StNode link) {
    auto& e = ext_[u];
    auto it = std::lower_bound(e.begin(), e.end(), a,
                               [](const Extension& x, Letter y) { return x.letter < y; });
    e.insert(it, {a, link});
  }

  // Split the edge into `g` (child of `w`) at string depth `depth`.
  StNode split(StNode w, StNode g, std::uint32_t depth) {
    const std::uint32_t head = depth - depth_[w];
    const StNode y = new_node(w, {label_[g].start, head}, depth);
    *child_slot(w, first_letter(g)) = y;
    label_[g] = {t_.ancestor(label_[g].start, head), depth_[g] - depth};
    parent_[g] = y;
    kids_[y].push_back(g);
    ext_[y] = ext_[g];
    for (Extension& e : ext_[y]) e.link = kNoStNode;
    return y;
  }

  std::vector<StNode> walked_;
};

void WeinerBuilder::insert(NodeId v) {
  const Letter c = t_.label(v);
  const StNode from = leaf_for_[t_.parent(v)];

  walked_.clear();
  StNode stop = from;
  while (stop != kNoStNode && find_ext(stop, c) == nullptr) {
    walked_.push_back(stop);
    stop = parent_[stop];
  }

  // Indicators go in before any split so that a split node on the path of
  // X inherits the c indicator from its lower half.
  for (StNode u : walked_) add_ext(u, c, kNoStNode);

  StNode y = 0;
  if (stop != kNoStNode) {
    const std::uint32_t target = depth_[stop] + 1;
    // Every ancestor of `stop` is left-extensible by c; climb to the first
    // one whose extension c·word(.) is an explicit node.
    StNode linked = stop;
    StNode below = kNoStNode;
    while (linked != kNoStNode && find_ext(linked, c)->link == kNoStNode) {
      below = linked;
      linked = parent_[linked];
    }
    StNode w = 0;
    Letter next = c;
    if (linked != kNoStNode) {
      w = find_ext(linked, c)->link;
      if (below != kNoStNode) next = first_letter(below);
    }
    if (depth_[w] == target) {
      y = w;
    } else {
      auto slot = child_slot(w, next);
      assert(slot != kids_[w].end() && first_letter(*slot) == next);
      const StNode g = *slot;
      assert(depth_[g] > target);
      y = split(w, g, target);
      find_ext(stop, c)->link = y;
    }
  }

  const std::uint32_t attach = depth_[y];
  const StNode leaf = new_node(y, {t_.ancestor(v, attach), t_.depth(v) - attach}, t_.depth(v));
  leaf_[leaf] = v;
  kids_[y].insert(child_slot(y, first_letter(leaf)), leaf);
  find_ext(from, c)->link = leaf;
  leaf_for_[v] = leaf;
}

}  // namespace

SuffixTree build_suffix_tree(AugmentedTree t) {
  WeinerBuilder b(t);
  for (NodeId v : t.bfs_order()) b.insert(v);

  const std::size_t m = b.parent_.size();
  b.ext_.clear();
  b.ext_.shrink_to_fit();

  // Renumber in preorder.
  std::vector<StNode> order;
  order.reserve(m);
  std::vector<StNode> rename(m, kNoStNode);
  std::vector<StNode> stack{0};
  while (!stack.empty()) {
    const StNode u = stack.back();
    stack.pop_back();
    rename[u] = static_cast<StNode>(order.size());
    order.push_back(u);
    const auto& kids = b.kids_[u];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  SuffixTree st(std::move(t));
  st.parent_.resize(m);
  st.label_.resize(m);
  st.string_depth_.resize(m);
  st.node_depth_.resize(m);
  st.subtree_size_.assign(m, 1);
  st.leaf_of_.resize(m);
  st.child_begin_.resize(m + 1);
  st.children_.reserve(m - 1);
  for (StNode i = 0; i < m; ++i) {
    const StNode u = order[i];
    st.parent_[i] = u == 0 ? kNoStNode : rename[b.parent_[u]];
    st.label_[i] = b.label_[u];
    st.string_depth_[i] = b.depth_[u];
    st.node_depth_[i] = u == 0 ? 0 : st.node_depth_[st.parent_[i]] + 1;
    st.leaf_of_[i] = b.leaf_[u];
    st.child_begin_[i] = static_cast<std::uint32_t>(st.children_.size());
    for (StNode c : b.kids_[u]) st.children_.push_back(rename[c]);
  }
  st.child_begin_[m] = static_cast<std::uint32_t>(st.children_.size());
  for (StNode i = static_cast<StNode>(m); i-- > 1;) st.subtree_size_[st.parent_[i]] += st.subtree_size_[i];

  st.leaf_for_.assign(st.text_.size() + 1, kNoStNode);
  for (NodeId v = 1; v <= st.text_.size(); ++v) st.leaf_for_[v] = rename[b.leaf_for_[v]];
  return st;
}

std::optional<StNode> SuffixTree::child(StNode u, Letter first) const {
  auto kids = children(u);
  auto it = std::lower_bound(kids.begin(), kids.end(), first,
                             [&](StNode c, Letter x) { return first_letter(c) < x; });
  if (it == kids.end() || first_letter(*it) != first) return std::nullopt;
  return *it;
}

Word SuffixTree::spell(StNode u) const {
  Word w(string_depth_[u]);
  for (; u != root(); u = parent_[u]) {
    const Word part = text_.spell(label_[u].start, label_[u].length);
    std::copy(part.begin(), part.end(), w.begin() + (string_depth_[u] - label_[u].length));
  }
  return w;
}

Word expand(const SuffixTree& st, const MawTriple& m) {
  if (m.node >= st.size())
    throw std::out_of_range("suffix tree node " + std::to_string(m.node) + " does not exist");
  if (m.first >= st.sentinel() || m.last >= st.sentinel())
    throw ValidationError("MAW letters must belong to the working alphabet");
  if (!st.child(m.node, m.last))
    throw ValidationError("no edge of node " + std::to_string(m.node) + " starts with letter " +
                          std::to_string(m.last));
  Word w;
  w.reserve(st.string_depth(m.node) + 2);
  w.push_back(m.first);
  const Word mid = st.spell(m.node);
  w.insert(w.end(), mid.begin(), mid.end());
  w.push_back(m.last);
  return w;
}

}  // namespace maw
