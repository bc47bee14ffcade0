#include "maw/lca.hpp"

#include <bit>
#include <utility>

namespace maw {

namespace {
constexpr std::size_t kBlock = 64;
}

RangeMinimum::RangeMinimum(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  masks_.resize(n);
  for (std::size_t start = 0; start < n; start += kBlock) {
    std::uint64_t stack = 0;
    for (std::size_t i = start; i < n && i < start + kBlock; ++i) {
      while (stack != 0) {
        const int top = 63 - std::countl_zero(stack);
        if (values_[start + top] <= values_[i]) break;
        stack &= ~(std::uint64_t{1} << top);
      }
      stack |= std::uint64_t{1} << (i - start);
      masks_[i] = stack;
    }
  }

  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  if (blocks == 0) return;
  sparse_.emplace_back(blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    sparse_[0][b] = static_cast<std::uint32_t>(in_block(b * kBlock, std::min(n, (b + 1) * kBlock) - 1));
  for (std::size_t k = 1; (std::size_t{1} << k) <= blocks; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> level(blocks - (std::size_t{1} << k) + 1);
    for (std::size_t b = 0; b < level.size(); ++b)
      level[b] = static_cast<std::uint32_t>(better(sparse_[k - 1][b], sparse_[k - 1][b + half]));
    sparse_.push_back(std::move(level));
  }
}

std::size_t RangeMinimum::in_block(std::size_t l, std::size_t r) const {
  const std::size_t start = r - r % kBlock;
  const std::uint64_t live = masks_[r] & (~std::uint64_t{0} << (l - start));
  return start + static_cast<std::size_t>(std::countr_zero(live));
}

std::size_t RangeMinimum::argmin(std::size_t l, std::size_t r) const {
  const std::size_t bl = l / kBlock;
  const std::size_t br = r / kBlock;
  if (bl == br) return in_block(l, r);
  std::size_t best = in_block(l, bl * kBlock + kBlock - 1);
  if (br - bl > 1) {
    const std::size_t span = br - bl - 1;
    const int k = std::bit_width(span) - 1;
    best = better(best, sparse_[k][bl + 1]);
    best = better(best, sparse_[k][br - (std::size_t{1} << k)]);
  }
  return better(best, in_block(br * kBlock, r));
}

LcaIndex::LcaIndex(const SuffixTree& st) {
  const std::size_t m = st.size();
  parent_.resize(m);
  std::vector<std::uint32_t> depth(m);
  for (StNode u = 0; u < m; ++u) {
    parent_[u] = st.parent(u);
    depth[u] = st.node_depth(u);
  }
  depth_rmq_ = RangeMinimum(std::move(depth));
}

StNode LcaIndex::lca(StNode x, StNode y) const {
  if (x == y) return x;
  if (x > y) std::swap(x, y);
  return parent_[depth_rmq_.argmin(x + 1, y)];
}

}  // namespace maw
