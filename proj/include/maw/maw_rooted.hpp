#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "maw/core.hpp"
#include "maw/lca.hpp"
#include "maw/suffix_tree.hpp"

namespace maw {

using MawSink = std::function<void(const MawTriple&)>;

/// For each letter a, the ST leaves of tree nodes that have an a-labeled
/// child, sorted by preorder. Stored as one array sliced by letter.
class LetterLists {
 public:
  Letter sigma() const { return static_cast<Letter>(begin_.size() - 1); }
  std::span<const StNode> of(Letter a) const {
    return {leaves_.data() + begin_[a], leaves_.data() + begin_[a + 1]};
  }
  std::size_t total() const { return leaves_.size(); }

 private:
  friend LetterLists build_letter_lists(const SuffixTree& st);
  std::vector<std::uint32_t> begin_;
  std::vector<StNode> leaves_;
};

LetterLists build_letter_lists(const SuffixTree& st);

/// Compacted subtree of ST induced by a preorder-sorted leaf list, always
/// rooted at the ST root. Nodes are indexed in preorder (root = 0).
class InducedSubtree {
 public:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  std::size_t size() const { return st_node_.size(); }
  std::size_t edge_count() const { return size() - 1; }
  StNode st_node(std::uint32_t i) const { return st_node_[i]; }
  std::uint32_t parent(std::uint32_t i) const { return parent_[i]; }
  std::span<const std::uint32_t> children(std::uint32_t i) const {
    return {children_.data() + child_begin_[i], children_.data() + child_begin_[i + 1]};
  }

 private:
  friend InducedSubtree build_induced(const SuffixTree&, const LcaIndex&, std::span<const StNode>);
  std::vector<StNode> st_node_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<std::uint32_t> children_;
};

/// Stack-based construction over the rightmost path, comparing string
/// depths of LCAs of consecutive leaves. O(|leaves|).
InducedSubtree build_induced(const SuffixTree& st, const LcaIndex& lca,
                             std::span<const StNode> leaves);

/// Work counters for one letter pass.
struct LetterStats {
  Letter letter = 0;
  std::size_t list_size = 0;
  std::size_t induced_nodes = 0;
  std::size_t induced_edges = 0;
  std::size_t emitted = 0;
  std::size_t visited = 0;
};

struct MawOptions {
  /// Run letter passes on worker threads; output order is unchanged.
  bool parallel_letters = false;
  unsigned threads = 0;
};

/// Everything the enumeration reads: the determinized input, its suffix
/// tree with LCA support, the letter lists, and for each ST node its
/// nearest proper ancestor with at least two non-sentinel children.
/// Immutable once built.
class RootedMawIndex {
 public:
  explicit RootedMawIndex(const RootedTree& t);

  const RootedTree& tree() const { return suffix_tree_.text().tree(); }
  const SuffixTree& suffix_tree() const { return suffix_tree_; }
  const LcaIndex& lca() const { return lca_; }
  const LetterLists& letter_lists() const { return lists_; }
  StNode branching_ancestor(StNode u) const { return branching_up_[u]; }

  /// Streams every MAW exactly once: letters ascending, then ST preorder,
  /// then last letter ascending. Returns the count.
  std::size_t enumerate(const MawSink& sink, const MawOptions& options = {},
                        std::vector<LetterStats>* stats = nullptr) const;

  Word expand(const MawTriple& m) const { return maw::expand(suffix_tree_, m); }

 private:
  SuffixTree suffix_tree_;
  LcaIndex lca_;
  LetterLists lists_;
  std::vector<StNode> branching_up_;
};

/// Emits (a, u, b) for every MAW a·word(u)·b whose u lies on `sta`:
/// explicit ST(a) nodes contribute the ST edges with no ST(a) edge sharing
/// their first letter; ST nodes strictly inside an ST(a) edge contribute
/// the edges whose subtree misses the edge's lower endpoint.
std::size_t emit_for_letter(const RootedMawIndex& index, const InducedSubtree& sta, Letter a,
                            const MawSink& sink, LetterStats* stats = nullptr);

/// Full pipeline; nondeterministic input is determinized first.
std::size_t maw_rooted(const RootedTree& t, const MawSink& sink, const MawOptions& options = {});

/// Expanded MAW words, in emission order.
std::vector<Word> maw_rooted_words(const RootedTree& t);

}  // namespace maw
