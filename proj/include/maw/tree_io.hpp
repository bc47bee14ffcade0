#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "maw/core.hpp"

namespace maw {

// Text formats. A tree file starts with `rooted <n> <sigma>` or
// `unrooted <n> <sigma>` followed by n-1 edge lines: `<child> <parent>
// <label>` for rooted trees (node 1 is the root), `<u> <v> <label>` for
// unrooted ones. A word file starts with `word <len> <sigma>` followed by
// len whitespace-separated letters. Blank lines and lines starting with
// '#' are ignored. Syntax problems raise ParseError, contract violations
// ValidationError.

using AnyTree = std::variant<RootedTree, UnrootedTree>;

struct WordInput {
  Word word;
  Letter sigma = 1;
};

AnyTree parse_tree(std::istream& in);
AnyTree parse_tree_file(const std::filesystem::path& path);
WordInput parse_word(std::istream& in);
WordInput parse_word_file(const std::filesystem::path& path);

void write_tree(std::ostream& out, const RootedTree& t);
void write_tree(std::ostream& out, const UnrootedTree& t);
void write_word(std::ostream& out, const Word& w, Letter sigma);

}  // namespace maw
