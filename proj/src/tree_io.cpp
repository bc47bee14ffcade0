#include "maw/tree_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace maw {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::uint32_t to_uint(const std::string& tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() ||
      value > std::numeric_limits<std::uint32_t>::max())
    throw ParseError("line " + std::to_string(line) + ": '" + tok + "' is not a valid integer");
  return static_cast<std::uint32_t>(value);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

AnyTree parse_tree(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError("missing header line");
  if (tok.size() != 3 || (tok[0] != "rooted" && tok[0] != "unrooted"))
    throw ParseError("line " + std::to_string(reader.line()) +
                     ": expected header 'rooted <n> <sigma>' or 'unrooted <n> <sigma>'");
  const bool rooted = tok[0] == "rooted";
  const std::uint32_t n = to_uint(tok[1], reader.line());
  const std::uint32_t sigma = to_uint(tok[2], reader.line());
  if (n == 0) throw ValidationError("a tree needs at least one node");
  if (sigma == 0) throw ValidationError("alphabet size must be positive");

  std::vector<std::array<std::uint32_t, 3>> rows;
  rows.reserve(std::min<std::size_t>(n - 1, 1u << 20));
  while (reader.next(tok)) {
    if (tok.size() != 3)
      throw ParseError("line " + std::to_string(reader.line()) + ": expected three integers");
    if (rows.size() == n - 1)
      throw ParseError("line " + std::to_string(reader.line()) + ": more than " +
                       std::to_string(n - 1) + " edge lines");
    rows.push_back({to_uint(tok[0], reader.line()), to_uint(tok[1], reader.line()),
                    to_uint(tok[2], reader.line())});
  }
  if (rows.size() != n - 1)
    throw ParseError("expected " + std::to_string(n - 1) + " edge lines, found " +
                     std::to_string(rows.size()));

  if (!rooted) {
    std::vector<Edge> edges;
    edges.reserve(rows.size());
    for (const auto& r : rows) edges.push_back({r[0], r[1], r[2]});
    return UnrootedTree::from_edges(n, sigma, std::move(edges));
  }

  std::vector<NodeId> parent(n + 1, kNoNode);
  std::vector<Letter> label(n + 1, 0);
  for (const auto& [child, par, lab] : rows) {
    if (child < 1 || child > n) throw ValidationError("node " + std::to_string(child) + " out of range");
    if (child == 1) throw ValidationError("the root (node 1) cannot have a parent");
    if (parent[child] != kNoNode)
      throw ValidationError("duplicate edge: node " + std::to_string(child) + " has two parents");
    if (par < 1 || par > n) throw ValidationError("node " + std::to_string(par) + " out of range");
    parent[child] = par;
    label[child] = lab;
  }
  return RootedTree::from_parents(sigma, std::move(parent), std::move(label));
}

AnyTree parse_tree_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_tree(in);
}

WordInput parse_word(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError("missing header line");
  if (tok.size() != 3 || tok[0] != "word")
    throw ParseError("line " + std::to_string(reader.line()) + ": expected header 'word <len> <sigma>'");
  WordInput w;
  const std::uint32_t len = to_uint(tok[1], reader.line());
  w.sigma = to_uint(tok[2], reader.line());
  if (w.sigma == 0) throw ValidationError("alphabet size must be positive");
  w.word.reserve(len);
  while (reader.next(tok))
    for (const std::string& t : tok) w.word.push_back(to_uint(t, reader.line()));
  if (w.word.size() != len)
    throw ParseError("expected " + std::to_string(len) + " letters, found " +
                     std::to_string(w.word.size()));
  validate_word(w.word, w.sigma);
  return w;
}

WordInput parse_word_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_word(in);
}

void write_tree(std::ostream& out, const RootedTree& t) {
  out << "rooted " << t.size() << ' ' << t.sigma() << '\n';
  for (NodeId v = 2; v <= t.size(); ++v) out << v << ' ' << t.parent(v) << ' ' << t.parent_label(v) << '\n';
}

void write_tree(std::ostream& out, const UnrootedTree& t) {
  out << "unrooted " << t.size() << ' ' << t.sigma() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << ' ' << e.label << '\n';
}

void write_word(std::ostream& out, const Word& w, Letter sigma) {
  out << "word " << w.size() << ' ' << sigma << '\n';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i == 0 ? "" : " ") << w[i];
  out << '\n';
}

}  // namespace maw
