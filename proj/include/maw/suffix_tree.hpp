#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "maw/core.hpp"

namespace maw {

/// The input tree with one extra root above the old root, joined by an
/// edge carrying the sentinel letter. Original nodes keep their ids 1..n;
/// the new root is n+1. str(v) of every original node thus ends in the
/// sentinel, and the new root spells the empty word.
class AugmentedTree {
 public:
  /// Throws ValidationError if `t` is not deterministic.
  static AugmentedTree augment(const RootedTree& t);

  std::size_t size() const { return parent_.size() - 1; }
  NodeId root() const { return static_cast<NodeId>(size()); }
  NodeId original_root() const { return 1; }
  Letter sigma() const { return tree_.sigma(); }
  Letter sentinel() const { return tree_.sigma(); }
  const RootedTree& tree() const { return tree_; }

  NodeId parent(NodeId v) const { return parent_[v]; }
  Letter label(NodeId v) const { return label_[v]; }
  /// Length of str(v), the sentinel included.
  std::uint32_t depth(NodeId v) const { return depth_[v]; }
  /// Ancestor `k` edges above `v`, found by binary search over the
  /// preorder-sorted nodes of the target depth.
  NodeId ancestor(NodeId v, std::uint32_t k) const;
  /// First `length` letters of str(v).
  Word spell(NodeId v, std::uint32_t length) const;
  /// Original nodes by increasing depth, the old root first.
  std::span<const NodeId> bfs_order() const { return bfs_; }

 private:
  AugmentedTree() = default;

  RootedTree tree_ = RootedTree::single_node(1);
  std::vector<NodeId> parent_;
  std::vector<Letter> label_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> preorder_;
  std::vector<std::uint32_t> level_begin_;
  std::vector<std::uint32_t> level_preorder_;
  std::vector<NodeId> level_node_;
  std::vector<NodeId> bfs_;
};

inline AugmentedTree augment(const RootedTree& t) { return AugmentedTree::augment(t); }

inline constexpr StNode kNoStNode = std::numeric_limits<StNode>::max();

/// Compacted edge label: the first `length` letters of str(start).
struct EdgeLabelRef {
  NodeId start;
  std::uint32_t length;
};

/// Compacted trie of { str(v) : v an original node } over the augmented
/// tree. Node ids are preorder numbers (root 0, children by first letter),
/// so subtree membership is an interval test. Leaves correspond one-to-one
/// with the original tree nodes; the augmented root maps to the ST root.
class SuffixTree {
 public:
  const AugmentedTree& text() const { return text_; }
  Letter sentinel() const { return text_.sentinel(); }

  std::size_t size() const { return parent_.size(); }
  std::size_t edge_count() const { return size() - 1; }
  std::size_t leaf_count() const { return text_.size() - 1; }
  StNode root() const { return 0; }

  StNode parent(StNode u) const { return parent_[u]; }
  EdgeLabelRef edge_label(StNode u) const { return label_[u]; }
  Letter first_letter(StNode u) const { return text_.label(label_[u].start); }
  std::span<const StNode> children(StNode u) const {
    return {children_.data() + child_begin_[u], children_.data() + child_begin_[u + 1]};
  }
  std::optional<StNode> child(StNode u, Letter first) const;
  std::uint32_t string_depth(StNode u) const { return string_depth_[u]; }
  std::uint32_t node_depth(StNode u) const { return node_depth_[u]; }
  std::uint32_t preorder(StNode u) const { return u; }
  std::uint32_t subtree_size(StNode u) const { return subtree_size_[u]; }
  bool is_leaf(StNode u) const { return child_begin_[u] == child_begin_[u + 1]; }
  /// Tree node spelled by leaf `u`, kNoNode for internal nodes.
  NodeId leaf_of(StNode u) const { return leaf_of_[u]; }
  /// ST leaf spelling str(v); the augmented root maps to the ST root.
  StNode leaf_for(NodeId v) const { return leaf_for_[v]; }

  bool in_subtree(StNode ancestor, StNode v) const {
    return v >= ancestor && v - ancestor < subtree_size_[ancestor];
  }

  /// Root-to-node label concatenation, sentinel included if present.
  Word spell(StNode u) const;

 private:
  friend SuffixTree build_suffix_tree(AugmentedTree t);
  explicit SuffixTree(AugmentedTree t) : text_(std::move(t)) {}

  AugmentedTree text_;
  std::vector<StNode> parent_;
  std::vector<EdgeLabelRef> label_;
  std::vector<std::uint32_t> string_depth_;
  std::vector<std::uint32_t> node_depth_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<StNode> children_;
  std::vector<NodeId> leaf_of_;
  std::vector<StNode> leaf_for_;
};

/// Weiner-style construction: tree nodes are inserted by increasing depth,
/// each new word extending its parent's word by one letter on the left.
SuffixTree build_suffix_tree(AugmentedTree t);

/// first · word(node) · last. Throws std::out_of_range for a node outside
/// the tree and ValidationError for a triple that cannot denote a MAW.
Word expand(const SuffixTree& st, const MawTriple& m);

}  // namespace maw
