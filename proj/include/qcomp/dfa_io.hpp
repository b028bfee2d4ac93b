#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qcomp/dfa.hpp"

namespace qcomp {

// Plain-text DFA format, one directive per line, '#' starts a comment:
//
//   states 2
//   alphabet a b
//   initial 0
//   final 1
//   row a 0 0
//   row b 1 1
//
// `row <letter>` lists the images of states 0..n-1. Every alphabet letter
// needs exactly one row.

std::string render_dfa(const Dfa& d);

/// Throws ParseError carrying the line and column of the offending token.
Dfa parse_dfa(std::string_view text);

Dfa read_dfa_file(const std::filesystem::path& path);
void write_dfa_file(const std::filesystem::path& path, const Dfa& d);

}  // namespace qcomp
