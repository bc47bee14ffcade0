#pragma once

#include <cstdint>

#include "maw/core.hpp"
#include "maw/maw_rooted.hpp"

namespace maw {

/// Node count of merge_rootings for an n-node tree: 1 + n(n-1).
std::uint64_t merged_node_count(std::size_t n);

/// Default cap on merge_rootings output (n = 5000).
inline constexpr std::uint64_t kDefaultMaxMergedNodes = 1 + 5000ull * 4999ull;

/// Every rooting of `t` hung below one common root, so that the node words
/// are exactly the labels of all simple paths of `t`. Throws LimitError if
/// the result would exceed `max_nodes`.
RootedTree merge_rootings(const UnrootedTree& t,
                          std::uint64_t max_nodes = kDefaultMaxMergedNodes);

/// MAWs of the path language of `t`: merge_rootings, then the rooted
/// pipeline (which determinizes).
std::size_t maw_unrooted(const UnrootedTree& t, const MawSink& sink,
                         std::uint64_t max_nodes = kDefaultMaxMergedNodes,
                         const MawOptions& options = {});

std::vector<Word> maw_unrooted_words(const UnrootedTree& t,
                                     std::uint64_t max_nodes = kDefaultMaxMergedNodes);

}  // namespace maw
