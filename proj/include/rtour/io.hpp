#pragma once

#include "rtour/tournament.hpp"
#include "rtour/tree.hpp"

#include <iosfwd>
#include <string>

namespace rtour {

// Text formats, LF line endings.
//
//   TOUR 1 <n>        then n rows of n chars: '1' if i->j, '0' otherwise,
//                     '-' on the diagonal.
//   CTOUR 1 <n>       TOUR rows, one blank line, then n rows where (i,j)
//                     holds 'r' or 'b' when i->j is an edge and '.' elsewhere.
//   OTREE 1 <m>       one line of m parent ids (-1 for the root), then one
//                     line of m chars: '+' parent->child, '-' child->parent,
//                     '.' for the root.
//
// Readers throw ParseError with the 1-based line of the first problem.

void write_tournament(std::ostream &os, const Tournament &g);
Tournament read_tournament(std::istream &is);

void write_colored(std::ostream &os, const ColoredTournament &g);
ColoredTournament read_colored(std::istream &is);

void write_tree(std::ostream &os, const OrientedTree &t);
OrientedTree read_tree(std::istream &is);

std::string to_text(const Tournament &g);
std::string to_text(const ColoredTournament &g);
std::string to_text(const OrientedTree &t);

Tournament load_tournament(const std::string &path);
ColoredTournament load_colored(const std::string &path);
OrientedTree load_tree(const std::string &path);

} // namespace rtour
