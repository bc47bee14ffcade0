#pragma once

#include <cstdint>
#include <vector>

#include "maw/core.hpp"

namespace maw {

/// Word with many MAWs of one fixed length. Letters 0..sigma-1 form the
/// base alphabet and `separator` (= sigma) the extra symbol, so the word
/// lives over sigma+1 letters.
struct FixedLengthWord {
  Word word;
  Letter sigma = 0;
  Letter separator = 0;
  unsigned k = 0;
  std::size_t block_length = 0;
  /// Cores s_1..s_l: the lexicographically first l words of length k.
  std::vector<Word> cores;

  Letter alphabet_size() const { return sigma + 1; }
  /// a·s_i·b for all base letters a, b and every core.
  std::vector<Word> planted_maws() const;
};

/// k is the largest integer with sigma^k < n; blocks
/// $ 1 s $ s 1 $ 2 s $ s 2 $ ... $ sigma s $ s sigma $ of length
/// 2*sigma*(k+2)+1 are concatenated floor(n / block) times.
/// Throws ValidationError unless sigma >= 2, k > 1 and the block fits in n.
FixedLengthWord gen_fixed_length_word(Letter sigma, std::size_t n);

/// Backbone of N+1 nodes on 0-edges, s pendant leaves (labels 1..s) at
/// every backbone node, and s chains of N+1 nodes on 0-edges hung from the
/// last backbone node by edges labeled 1..s. (N+1)(2s+1) nodes over
/// alphabet {0..s}.
UnrootedTree gen_unrooted_extremal(unsigned s, unsigned N);

/// The words a 0^j b 0^k c (a, b, c in 1..s, 0 < j, k <= N) that are MAWs
/// of gen_unrooted_extremal(s, N).
std::vector<Word> extremal_family(unsigned s, unsigned N);

/// Node i >= 2 attaches to a uniform node in [1, i-1] with a uniform label.
RootedTree gen_random_rooted(std::size_t n, Letter sigma, std::uint64_t seed);
UnrootedTree gen_random_unrooted(std::size_t n, Letter sigma, std::uint64_t seed);

/// Uniform word of the given length.
Word gen_random_word(std::size_t length, Letter sigma, std::uint64_t seed);

}  // namespace maw
