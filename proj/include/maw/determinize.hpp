#pragma once

#include "maw/core.hpp"

namespace maw {

/// True iff no node has two child edges with the same letter.
bool is_deterministic(const RootedTree& t);

/// Deterministic tree with the same set of node words, built level by level
/// in linear time. Nodes of equal depth are bucketed by parent-edge letter
/// and merged when their parents map to the same output node. Output nodes
/// are numbered in BFS order with children visited by increasing letter.
RootedTree determinize(const RootedTree& t);

}  // namespace maw
