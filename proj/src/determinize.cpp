#include "maw/determinize.hpp"

#include <algorithm>
#include <numeric>

namespace maw {

bool is_deterministic(const RootedTree& t) {
  for (NodeId v = 1; v <= t.size(); ++v) {
    auto kids = t.children(v);
    for (std::size_t i = 1; i < kids.size(); ++i)
      if (kids[i].label == kids[i - 1].label) return false;
  }
  return true;
}

namespace {

// Stable counting sort of `items` by key(item) in [0, range).
template <typename Key>
std::vector<NodeId> counting_sort(const std::vector<NodeId>& items, std::size_t range, Key key) {
  std::vector<std::uint32_t> count(range + 1, 0);
  for (NodeId v : items) ++count[key(v) + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<NodeId> out(items.size());
  for (NodeId v : items) out[count[key(v)]++] = v;
  return out;
}

}  // namespace

RootedTree determinize(const RootedTree& t) {
  const std::size_t n = t.size();

  // Depths from one BFS; the BFS order also lists nodes by depth.
  std::vector<std::uint32_t> depth(n + 1, 0);
  std::vector<NodeId> bfs{t.root()};
  bfs.reserve(n);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const NodeId v = bfs[head];
    for (const Child& c : t.children(v)) {
      depth[c.node] = depth[v] + 1;
      bfs.push_back(c.node);
    }
  }
  const std::uint32_t max_depth = depth[bfs.back()];

  // Sort non-root nodes by (depth, parent label): letter pass, then stable depth pass.
  std::vector<NodeId> nodes(bfs.begin() + 1, bfs.end());
  if (t.sigma() <= 4 * n + 16) {
    nodes = counting_sort(nodes, t.sigma(), [&](NodeId v) { return t.parent_label(v); });
  } else {
    std::stable_sort(nodes.begin(), nodes.end(), [&](NodeId x, NodeId y) {
      return t.parent_label(x) < t.parent_label(y);
    });
  }
  nodes = counting_sort(nodes, max_depth + 1, [&](NodeId v) { return depth[v]; });

  // image[v] is the output node for input node v. Output nodes are created
  // in (depth, letter) order, so every output node's children are created
  // in increasing letter order.
  std::vector<NodeId> image(n + 1, kNoNode);
  std::vector<NodeId> out_parent{kNoNode, kNoNode};
  std::vector<Letter> out_label{0, 0};
  image[t.root()] = 1;

  std::vector<std::uint32_t> stamp(n + 1, 0);
  std::vector<NodeId> created(n + 1, kNoNode);
  std::uint32_t group = 0;
  for (std::size_t i = 0; i < nodes.size();) {
    const Letter a = t.parent_label(nodes[i]);
    const std::uint32_t d = depth[nodes[i]];
    ++group;
    for (; i < nodes.size() && depth[nodes[i]] == d && t.parent_label(nodes[i]) == a; ++i) {
      const NodeId v = nodes[i];
      const NodeId target = image[t.parent(v)];
      if (stamp[target] != group) {
        stamp[target] = group;
        created[target] = static_cast<NodeId>(out_parent.size());
        out_parent.push_back(target);
        out_label.push_back(a);
      }
      image[v] = created[target];
    }
  }

  // Renumber in BFS order of the new tree.
  const std::size_t m = out_parent.size() - 1;
  std::vector<std::uint32_t> child_begin(m + 2, 0);
  for (NodeId v = 2; v <= m; ++v) ++child_begin[out_parent[v] + 1];
  std::partial_sum(child_begin.begin(), child_begin.end(), child_begin.begin());
  std::vector<NodeId> kids(m > 0 ? m - 1 : 0);
  {
    std::vector<std::uint32_t> fill(child_begin.begin(), child_begin.end() - 1);
    for (NodeId v = 2; v <= m; ++v) kids[fill[out_parent[v]]++] = v;
  }
  std::vector<NodeId> rename(m + 1, kNoNode);
  std::vector<NodeId> order{1};
  order.reserve(m);
  rename[1] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (std::uint32_t k = child_begin[v]; k < child_begin[v + 1]; ++k) {
      rename[kids[k]] = static_cast<NodeId>(order.size() + 1);
      order.push_back(kids[k]);
    }
  }
  std::vector<NodeId> parent(m + 1, kNoNode);
  std::vector<Letter> label(m + 1, 0);
  for (NodeId v = 2; v <= m; ++v) {
    parent[rename[v]] = rename[out_parent[v]];
    label[rename[v]] = out_label[v];
  }
  return RootedTree::from_parents(t.sigma(), std::move(parent), std::move(label));
}

}  // namespace maw
