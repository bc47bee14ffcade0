#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maw {

using Letter = std::uint32_t;
using NodeId = std::uint32_t;
using Word = std::vector<Letter>;

// Tree nodes are numbered 1..n; 0 never names a node.
inline constexpr NodeId kNoNode = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad header, non-integer field, truncated file).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a structural contract.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Working alphabet {0, .., size-1}. The id `size` is reserved for the
/// sentinel used by the suffix tree and never appears in user input.
/// In ASCII mode the alphabet also carries the symbol <-> id bijection,
/// with ids assigned in increasing byte order.
class Alphabet {
 public:
  explicit Alphabet(Letter size);

  /// Distinct bytes of `text`, sorted; an empty text yields a one-letter alphabet
  /// without symbols.
  static Alphabet from_symbols(std::string_view text);

  Letter size() const { return size_; }
  Letter sentinel() const { return size_; }
  bool has_symbols() const { return !symbols_.empty(); }

  Letter encode(char symbol) const;
  char decode(Letter letter) const;
  Word encode(std::string_view text) const;
  std::string decode(std::span<const Letter> word) const;

 private:
  Letter size_;
  std::string symbols_;
};

struct Child {
  Letter label;
  NodeId node;
};

/// Rooted tree with letter-labeled edges. Node 1 is the root; each other
/// node stores its parent and the label of the edge to it. Children of a
/// node are sorted by (label, id).
class RootedTree {
 public:
  /// `parent` and `label` are indexed by node id (slot 0 unused) and have
  /// n+1 entries. parent[1] must be kNoNode. Throws ValidationError on
  /// out-of-range ids or labels, cycles, or unreachable nodes.
  static RootedTree from_parents(Letter sigma, std::vector<NodeId> parent,
                                 std::vector<Letter> label);
  static RootedTree single_node(Letter sigma);

  std::size_t size() const { return parent_.size() - 1; }
  Letter sigma() const { return sigma_; }
  NodeId root() const { return 1; }
  bool contains(NodeId v) const { return v >= 1 && v < parent_.size(); }

  NodeId parent(NodeId v) const { return parent_[v]; }
  Letter parent_label(NodeId v) const { return label_[v]; }
  std::span<const Child> children(NodeId v) const {
    return {children_.data() + child_begin_[v], children_.data() + child_begin_[v + 1]};
  }
  bool deterministic() const { return deterministic_; }

  std::span<const NodeId> parents() const { return parent_; }
  std::span<const Letter> labels() const { return label_; }

 private:
  RootedTree() = default;

  Letter sigma_ = 1;
  std::vector<NodeId> parent_;
  std::vector<Letter> label_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<Child> children_;
  bool deterministic_ = true;
};

struct Edge {
  NodeId u;
  NodeId v;
  Letter label;
};

struct Neighbor {
  NodeId node;
  Letter label;
};

/// Connected undirected tree on nodes 1..n with n-1 labeled edges.
class UnrootedTree {
 public:
  /// Throws ValidationError on a wrong edge count, out-of-range ids or
  /// labels, self loops, duplicate edges or a disconnected edge set.
  static UnrootedTree from_edges(std::size_t n, Letter sigma, std::vector<Edge> edges);

  std::size_t size() const { return adj_begin_.size() - 2; }
  Letter sigma() const { return sigma_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adj_.data() + adj_begin_[v], adj_.data() + adj_begin_[v + 1]};
  }

 private:
  UnrootedTree() = default;

  Letter sigma_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_begin_;
  std::vector<Neighbor> adj_;
};

using StNode = std::uint32_t;

/// A minimal absent word first·word(node)·last, where node is an explicit
/// suffix-tree node and last starts one of its outgoing edges.
struct MawTriple {
  Letter first;
  StNode node;
  Letter last;

  friend bool operator==(const MawTriple&, const MawTriple&) = default;
};

/// Unary tree whose deepest node spells `w`; descending from the root the
/// labels read w reversed.
RootedTree word_to_rooted(std::span<const Letter> w, Letter sigma);

/// Labels on the path from `v` up to the root. Throws std::out_of_range
/// for an invalid node.
Word spell_to_root(const RootedTree& t, NodeId v);

/// Throws ValidationError if some letter is not below sigma.
void validate_word(std::span<const Letter> w, Letter sigma);

}  // namespace maw
