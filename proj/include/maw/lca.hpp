#pragma once

#include <cstdint>
#include <vector>

#include "maw/suffix_tree.hpp"

namespace maw {

/// Static range-minimum over a fixed array. Blocks of 64 entries answer
/// in-block queries from a per-position stack bitmask; a sparse table over
/// block minima covers the rest. O(n) words of space, O(1) per query.
class RangeMinimum {
 public:
  RangeMinimum() = default;
  explicit RangeMinimum(std::vector<std::uint32_t> values);

  /// Position of the leftmost minimum in values[l..r] (inclusive).
  std::size_t argmin(std::size_t l, std::size_t r) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::size_t in_block(std::size_t l, std::size_t r) const;
  std::size_t better(std::size_t i, std::size_t j) const {
    return values_[j] < values_[i] || (values_[j] == values_[i] && j < i) ? j : i;
  }

  std::vector<std::uint32_t> values_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint32_t>> sparse_;
};

/// Constant-time lowest common ancestor on a suffix tree. Node ids are
/// preorder numbers, so for x < y the LCA is the parent of the shallowest
/// node with preorder in (x, y].
class LcaIndex {
 public:
  explicit LcaIndex(const SuffixTree& st);

  StNode lca(StNode x, StNode y) const;
  StNode operator()(StNode x, StNode y) const { return lca(x, y); }

 private:
  std::vector<StNode> parent_;
  RangeMinimum depth_rmq_;
};

inline LcaIndex preprocess_lca(const SuffixTree& st) { return LcaIndex(st); }

}  // namespace maw
