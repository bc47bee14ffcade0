#include "maw/maw_unrooted.hpp"

#include <string>

namespace maw {

std::uint64_t merged_node_count(std::size_t n) {
  return 1 + static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0);
}

RootedTree merge_rootings(const UnrootedTree& t, std::uint64_t max_nodes) {
  const std::size_t n = t.size();
  const std::uint64_t total = merged_node_count(n);
  if (total > max_nodes)
    throw LimitError("merging all rootings of a " + std::to_string(n) + "-node tree needs " +
                     std::to_string(total) + " nodes, above the cap of " +
                     std::to_string(max_nodes));

  std::vector<NodeId> parent(total + 1, kNoNode);
  std::vector<Letter> label(total + 1, 0);
  NodeId next = 2;

  // copy[v] is the merged node for v in the current rooting.
  std::vector<NodeId> copy(n + 1, kNoNode);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId root = 1; root <= n; ++root) {
    std::fill(copy.begin(), copy.end(), kNoNode);
    copy[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId v = queue[head];
      for (const Neighbor& nb : t.neighbors(v)) {
        if (copy[nb.node] != kNoNode) continue;
        copy[nb.node] = next;
        parent[next] = copy[v];
        label[next] = nb.label;
        ++next;
        queue.push_back(nb.node);
      }
    }
  }
  return RootedTree::from_parents(t.sigma(), std::move(parent), std::move(label));
}

std::size_t maw_unrooted(const UnrootedTree& t, const MawSink& sink, std::uint64_t max_nodes,
                         const MawOptions& options) {
  return maw_rooted(merge_rootings(t, max_nodes), sink, options);
}

std::vector<Word> maw_unrooted_words(const UnrootedTree& t, std::uint64_t max_nodes) {
  return maw_rooted_words(merge_rootings(t, max_nodes));
}

}  // namespace maw
