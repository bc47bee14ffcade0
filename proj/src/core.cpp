#include "maw/core.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace maw {

Alphabet::Alphabet(Letter size) : size_(size) {
  if (size == 0) throw ValidationError("alphabet size must be positive");
}

Alphabet Alphabet::from_symbols(std::string_view text) {
  std::array<bool, 256> seen{};
  for (unsigned char c : text) seen[c] = true;
  std::string symbols;
  for (int c = 0; c < 256; ++c)
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  Alphabet a(static_cast<Letter>(std::max<std::size_t>(symbols.size(), 1)));
  a.symbols_ = std::move(symbols);
  return a;
}

Letter Alphabet::encode(char symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol,
                             [](char x, char y) {
                               return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
                             });
  if (it == symbols_.end() || *it != symbol)
    throw ValidationError(std::string("symbol '") + symbol + "' is not in the alphabet");
  return static_cast<Letter>(it - symbols_.begin());
}

char Alphabet::decode(Letter letter) const {
  if (letter >= symbols_.size()) throw ValidationError("letter has no ASCII symbol");
  return symbols_[letter];
}

Word Alphabet::encode(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(encode(c));
  return w;
}

std::string Alphabet::decode(std::span<const Letter> word) const {
  std::string s;
  s.reserve(word.size());
  for (Letter l : word) s.push_back(decode(l));
  return s;
}

namespace {

// Node ids 2..n ordered by label, ties by id.
std::vector<NodeId> order_by_label(std::span<const Letter> label, Letter sigma) {
  const std::size_t n = label.size() - 1;
  std::vector<NodeId> order;
  order.reserve(n > 0 ? n - 1 : 0);
  if (sigma <= 4 * n + 16) {
    std::vector<std::uint32_t> count(static_cast<std::size_t>(sigma) + 1, 0);
    for (NodeId v = 2; v <= n; ++v) ++count[label[v] + 1];
    std::partial_sum(count.begin(), count.end(), count.begin());
    order.resize(n > 0 ? n - 1 : 0);
    for (NodeId v = 2; v <= n; ++v) order[count[label[v]]++] = v;
  } else {
    for (NodeId v = 2; v <= n; ++v) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId x, NodeId y) { return label[x] < label[y]; });
  }
  return order;
}

}  // namespace

RootedTree RootedTree::from_parents(Letter sigma, std::vector<NodeId> parent,
                                   std::vector<Letter> label) {
  if (sigma == 0) throw ValidationError("alphabet size must be positive");
  if (parent.size() != label.size() || parent.size() < 2)
    throw ValidationError("rooted tree needs at least one node");
  const std::size_t n = parent.size() - 1;
  if (parent[1] != kNoNode) throw ValidationError("node 1 is the root and cannot have a parent");
  for (NodeId v = 2; v <= n; ++v) {
    if (parent[v] < 1 || parent[v] > n)
      throw ValidationError("node " + std::to_string(v) + " has an invalid parent");
    if (parent[v] == v) throw ValidationError("node " + std::to_string(v) + " is its own parent");
    if (label[v] >= sigma)
      throw ValidationError("label " + std::to_string(label[v]) + " of node " + std::to_string(v) +
                            " is outside the alphabet");
  }
  parent[0] = kNoNode;
  label[0] = 0;
  label[1] = 0;

  RootedTree t;
  t.sigma_ = sigma;
  t.child_begin_.assign(n + 2, 0);
  for (NodeId v = 2; v <= n; ++v) ++t.child_begin_[parent[v] + 1];
  std::partial_sum(t.child_begin_.begin(), t.child_begin_.end(), t.child_begin_.begin());
  t.children_.resize(n - 1);
  {
    std::vector<std::uint32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
    for (NodeId v : order_by_label(label, sigma)) t.children_[fill[parent[v]]++] = {label[v], v};
  }

  std::vector<NodeId> queue{1};
  queue.reserve(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (std::uint32_t i = t.child_begin_[v]; i < t.child_begin_[v + 1]; ++i)
      queue.push_back(t.children_[i].node);
  }
  if (queue.size() != n) throw ValidationError("parent references contain a cycle or unreachable node");

  for (NodeId v = 1; v <= n && t.deterministic_; ++v)
    for (std::uint32_t i = t.child_begin_[v] + 1; i < t.child_begin_[v + 1]; ++i)
      if (t.children_[i].label == t.children_[i - 1].label) {
        t.deterministic_ = false;
        break;
      }

  t.parent_ = std::move(parent);
  t.label_ = std::move(label);
  return t;
}

RootedTree RootedTree::single_node(Letter sigma) {
  return from_parents(sigma, {kNoNode, kNoNode}, {0, 0});
}

UnrootedTree UnrootedTree::from_edges(std::size_t n, Letter sigma, std::vector<Edge> edges) {
  if (sigma == 0) throw ValidationError("alphabet size must be positive");
  if (n == 0) throw ValidationError("unrooted tree needs at least one node");
  if (edges.size() != n - 1)
    throw ValidationError("expected " + std::to_string(n - 1) + " edges, got " +
                          std::to_string(edges.size()));
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self loop at node " + std::to_string(e.u));
    if (e.label >= sigma)
      throw ValidationError("label " + std::to_string(e.label) + " is outside the alphabet");
  }

  UnrootedTree t;
  t.sigma_ = sigma;
  t.adj_begin_.assign(n + 2, 0);
  for (const Edge& e : edges) {
    ++t.adj_begin_[e.u + 1];
    ++t.adj_begin_[e.v + 1];
  }
  std::partial_sum(t.adj_begin_.begin(), t.adj_begin_.end(), t.adj_begin_.begin());
  t.adj_.resize(2 * edges.size());
  std::vector<std::uint32_t> fill(t.adj_begin_.begin(), t.adj_begin_.end() - 1);
  for (const Edge& e : edges) {
    t.adj_[fill[e.u]++] = {e.v, e.label};
    t.adj_[fill[e.v]++] = {e.u, e.label};
  }
  for (NodeId v = 1; v <= n; ++v) {
    auto first = t.adj_.begin() + t.adj_begin_[v];
    auto last = t.adj_.begin() + t.adj_begin_[v + 1];
    std::sort(first, last, [](const Neighbor& x, const Neighbor& y) { return x.node < y.node; });
    if (std::adjacent_find(first, last, [](const Neighbor& x, const Neighbor& y) {
          return x.node == y.node;
        }) != last)
      throw ValidationError("duplicate edge at node " + std::to_string(v));
  }

  std::vector<bool> seen(n + 1, false);
  std::vector<NodeId> stack{1};
  seen[1] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (std::uint32_t i = t.adj_begin_[v]; i < t.adj_begin_[v + 1]; ++i) {
      const NodeId w = t.adj_[i].node;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw ValidationError("unrooted tree is not connected");

  t.edges_ = std::move(edges);
  return t;
}

RootedTree word_to_rooted(std::span<const Letter> w, Letter sigma) {
  validate_word(w, sigma);
  const std::size_t n = w.size() + 1;
  std::vector<NodeId> parent(n + 1, kNoNode);
  std::vector<Letter> label(n + 1, 0);
  for (std::size_t k = 2; k <= n; ++k) {
    parent[k] = static_cast<NodeId>(k - 1);
    label[k] = w[w.size() - k + 1];
  }
  return RootedTree::from_parents(sigma, std::move(parent), std::move(label));
}

Word spell_to_root(const RootedTree& t, NodeId v) {
  if (!t.contains(v)) throw std::out_of_range("node " + std::to_string(v) + " is not in the tree");
  Word w;
  for (; v != t.root(); v = t.parent(v)) w.push_back(t.parent_label(v));
  return w;
}

void validate_word(std::span<const Letter> w, Letter sigma) {
  for (Letter l : w)
    if (l >= sigma)
      throw ValidationError("letter " + std::to_string(l) + " is outside the alphabet of size " +
                            std::to_string(sigma));
}

}  // namespace maw
