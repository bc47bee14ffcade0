#include "maw/generators.hpp"

#include <random>
#include <string>

namespace maw {

std::vector<Word> FixedLengthWord::planted_maws() const {
  std::vector<Word> out;
  out.reserve(cores.size() * sigma * sigma);
  for (const Word& s : cores)
    for (Letter a = 0; a < sigma; ++a)
      for (Letter b = 0; b < sigma; ++b) {
        Word w{a};
        w.insert(w.end(), s.begin(), s.end());
        w.push_back(b);
        out.push_back(std::move(w));
      }
  return out;
}

FixedLengthWord gen_fixed_length_word(Letter sigma, std::size_t n) {
  if (sigma < 2) throw ValidationError("fixed-length construction needs sigma >= 2");
  // Largest k with sigma^k < n.
  unsigned k = 0;
  for (std::uint64_t p = sigma; p < n; p *= sigma) ++k;
  if (k <= 1)
    throw ValidationError("fixed-length construction needs k > 1 (sigma^2 < n); got k = " +
                          std::to_string(k));
  const std::size_t block = 2 * static_cast<std::size_t>(sigma) * (k + 2) + 1;
  if (block > n)
    throw ValidationError("block length 2*sigma*(k+2)+1 = " + std::to_string(block) +
                          " exceeds n = " + std::to_string(n) +
                          " (the construction excludes small cases)");

  FixedLengthWord f;
  f.sigma = sigma;
  f.separator = sigma;
  f.k = k;
  f.block_length = block;
  const std::size_t blocks = n / block;

  Word core(k, 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    f.cores.push_back(core);
    for (std::size_t pos = k; pos-- > 0;) {
      if (++core[pos] < sigma) break;
      core[pos] = 0;
    }
  }

  f.word.reserve(blocks * block);
  for (const Word& s : f.cores) {
    for (Letter c = 0; c < sigma; ++c) {
      f.word.push_back(f.separator);
      f.word.push_back(c);
      f.word.insert(f.word.end(), s.begin(), s.end());
      f.word.push_back(f.separator);
      f.word.insert(f.word.end(), s.begin(), s.end());
      f.word.push_back(c);
    }
    f.word.push_back(f.separator);
  }
  return f;
}

UnrootedTree gen_unrooted_extremal(unsigned s, unsigned N) {
  if (s == 0 || N == 0) throw ValidationError("extremal construction needs s >= 1 and N >= 1");
  std::vector<Edge> edges;
  NodeId next = 1;
  std::vector<NodeId> backbone;
  for (unsigned i = 0; i <= N; ++i) backbone.push_back(next++);
  for (unsigned i = 0; i < N; ++i) edges.push_back({backbone[i], backbone[i + 1], 0});
  for (NodeId b : backbone)
    for (Letter x = 1; x <= s; ++x) edges.push_back({b, next++, x});
  for (Letter x = 1; x <= s; ++x) {
    NodeId prev = next++;
    edges.push_back({backbone.back(), prev, x});
    for (unsigned i = 0; i < N; ++i) {
      edges.push_back({prev, next, 0});
      prev = next++;
    }
  }
  return UnrootedTree::from_edges(next - 1, s + 1, std::move(edges));
}

std::vector<Word> extremal_family(unsigned s, unsigned N) {
  std::vector<Word> out;
  for (Letter a = 1; a <= s; ++a)
    for (unsigned j = 1; j <= N; ++j)
      for (Letter b = 1; b <= s; ++b)
        for (unsigned k = 1; k <= N; ++k)
          for (Letter c = 1; c <= s; ++c) {
            Word w{a};
            w.insert(w.end(), j, 0);
            w.push_back(b);
            w.insert(w.end(), k, 0);
            w.push_back(c);
            out.push_back(std::move(w));
          }
  return out;
}

RootedTree gen_random_rooted(std::size_t n, Letter sigma, std::uint64_t seed) {
  if (n == 0 || sigma == 0) throw ValidationError("random tree needs n >= 1 and sigma >= 1");
  std::mt19937_64 rng(seed);
  std::vector<NodeId> parent(n + 1, kNoNode);
  std::vector<Letter> label(n + 1, 0);
  std::uniform_int_distribution<Letter> letter(0, sigma - 1);
  for (NodeId v = 2; v <= n; ++v) {
    parent[v] = std::uniform_int_distribution<NodeId>(1, v - 1)(rng);
    label[v] = letter(rng);
  }
  return RootedTree::from_parents(sigma, std::move(parent), std::move(label));
}

UnrootedTree gen_random_unrooted(std::size_t n, Letter sigma, std::uint64_t seed) {
  if (n == 0 || sigma == 0) throw ValidationError("random tree needs n >= 1 and sigma >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Letter> letter(0, sigma - 1);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (NodeId v = 2; v <= n; ++v) {
    const NodeId u = std::uniform_int_distribution<NodeId>(1, v - 1)(rng);
    edges.push_back({u, v, letter(rng)});
  }
  return UnrootedTree::from_edges(n, sigma, std::move(edges));
}

Word gen_random_word(std::size_t length, Letter sigma, std::uint64_t seed) {
  if (sigma == 0) throw ValidationError("random word needs sigma >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Letter> letter(0, sigma - 1);
  Word w(length);
  for (Letter& l : w) l = letter(rng);
  return w;
}

}  // namespace maw
