#include "rtour/io.hpp"

#include "rtour/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace rtour {

namespace {

class LineReader {
public:
  explicit LineReader(std::istream &is) : is_(is) {}

  std::string next(const char *what) {
    std::string line;
    if (!std::getline(is_, line))
      throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
    ++line_;
    if (!line.empty() && line.back() == '\r')
      throw ParseError(line_, "CR line ending; files must use LF");
    return line;
  }
  int line() const noexcept { return line_; }

private:
  std::istream &is_;
  int line_ = 0;
};

int parse_int(std::string_view tok, int line) {
  int value = 0;
  const auto *end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ')
      ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ')
      ++j;
    if (j > i)
      out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_header(LineReader &r, std::string_view magic) {
  const auto line = r.next("header");
  const auto tok = split_spaces(line);
  if (tok.size() != 3 || tok[0] != magic)
    throw ParseError(r.line(), "expected '" + std::string(magic) + " 1 <n>'");
  if (tok[1] != "1")
    throw ParseError(r.line(), "unsupported version '" + std::string(tok[1]) + "'");
  const int n = parse_int(tok[2], r.line());
  if (n < 1)
    throw ParseError(r.line(), "vertex count must be positive");
  return n;
}

void write_orientation_rows(std::ostream &os, const Tournament &g) {
  std::string row(static_cast<std::size_t>(g.n()), '0');
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = 0; j < g.n(); ++j)
      row[static_cast<std::size_t>(j)] = i == j ? '-' : (g.has_edge(i, j) ? '1' : '0');
    os << row << '\n';
  }
}

Tournament read_orientation_rows(LineReader &r, int n) {
  Tournament g(n);
  std::vector<std::string> rows;
  for (Vertex i = 0; i < n; ++i) {
    auto row = r.next("orientation row");
    if (static_cast<int>(row.size()) != n)
      throw ParseError(r.line(), "row has " + std::to_string(row.size()) + " characters, expected " +
                                     std::to_string(n));
    for (Vertex j = 0; j < n; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      if (i == j ? ch != '-' : ch != '0' && ch != '1')
        throw ParseError(r.line(), std::string("bad character '") + ch + "' at column " + std::to_string(j + 1));
    }
    rows.push_back(std::move(row));
  }
  const int first_row_line = r.line() - n + 1;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      const char a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const char b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a == b)
        throw ParseError(first_row_line + j, "pair " + std::to_string(i) + "," + std::to_string(j) +
                                                 " is not oriented exactly one way");
      if (a == '1')
        g.orient(i, j);
      else
        g.orient(j, i);
    }
  return g;
}

void expect_end(LineReader &r, std::istream &is) {
  std::string rest;
  while (std::getline(is, rest))
    if (!rest.empty())
      throw ParseError(r.line() + 1, "trailing content");
}

} // namespace

void write_tournament(std::ostream &os, const Tournament &g) {
  os << "TOUR 1 " << g.n() << '\n';
  write_orientation_rows(os, g);
}

Tournament read_tournament(std::istream &is) {
  LineReader r(is);
  const int n = parse_header(r, "TOUR");
  auto g = read_orientation_rows(r, n);
  expect_end(r, is);
  return g;
}

void write_colored(std::ostream &os, const ColoredTournament &g) {
  os << "CTOUR 1 " << g.n() << '\n';
  write_orientation_rows(os, g.base());
  os << '\n';
  std::string row(static_cast<std::size_t>(g.n()), '.');
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = 0; j < g.n(); ++j)
      row[static_cast<std::size_t>(j)] =
          i != j && g.has_edge(i, j) ? (g.color(i, j) == Color::Red ? 'r' : 'b') : '.';
    os << row << '\n';
  }
}

ColoredTournament read_colored(std::istream &is) {
  LineReader r(is);
  const int n = parse_header(r, "CTOUR");
  ColoredTournament g(read_orientation_rows(r, n));
  if (!r.next("blank separator line").empty())
    throw ParseError(r.line(), "expected a blank line between orientation and colour blocks");
  for (Vertex i = 0; i < n; ++i) {
    const auto row = r.next("colour row");
    if (static_cast<int>(row.size()) != n)
      throw ParseError(r.line(), "row has " + std::to_string(row.size()) + " characters, expected " +
                                     std::to_string(n));
    for (Vertex j = 0; j < n; ++j) {
      const char ch = row[static_cast<std::size_t>(j)];
      const bool edge = i != j && g.has_edge(i, j);
      if (!edge) {
        if (ch != '.')
          throw ParseError(r.line(), "column " + std::to_string(j + 1) + " is not an edge and must be '.'");
        continue;
      }
      if (ch == 'r')
        g.set_color(i, j, Color::Red);
      else if (ch == 'b')
        g.set_color(i, j, Color::Blue);
      else
        throw ParseError(r.line(), std::string("bad colour '") + ch + "' at column " + std::to_string(j + 1));
    }
  }
  expect_end(r, is);
  return g;
}

void write_tree(std::ostream &os, const OrientedTree &t) {
  os << "OTREE 1 " << t.size() << '\n';
  for (int v = 0; v < t.size(); ++v)
    os << (v ? " " : "") << t.parent(v);
  os << '\n';
  for (int v = 0; v < t.size(); ++v)
    os << (t.parent(v) == -1 ? '.' : t.dir(v) == EdgeDir::AwayFromParent ? '+' : '-');
  os << '\n';
}

OrientedTree read_tree(std::istream &is) {
  LineReader r(is);
  const int m = parse_header(r, "OTREE");
  const auto parent_line = r.next("parent list");
  const auto tok = split_spaces(parent_line);
  if (static_cast<int>(tok.size()) != m)
    throw ParseError(r.line(), "expected " + std::to_string(m) + " parent ids, got " +
                                   std::to_string(tok.size()));
  std::vector<int> parent;
  for (auto t : tok)
    parent.push_back(parse_int(t, r.line()));
  const int parent_line_no = r.line();
  const auto dirs = r.next("direction line");
  if (static_cast<int>(dirs.size()) != m)
    throw ParseError(r.line(), "expected " + std::to_string(m) + " direction characters");
  std::vector<EdgeDir> dir;
  for (int v = 0; v < m; ++v) {
    const char ch = dirs[static_cast<std::size_t>(v)];
    const bool root = parent[static_cast<std::size_t>(v)] == -1;
    if (root != (ch == '.') || (ch != '.' && ch != '+' && ch != '-'))
      throw ParseError(r.line(), std::string("bad direction '") + ch + "' for vertex " + std::to_string(v));
    dir.push_back(ch == '-' ? EdgeDir::TowardParent : EdgeDir::AwayFromParent);
  }
  expect_end(r, is);
  try {
    return OrientedTree(std::move(parent), std::move(dir));
  } catch (const PreconditionError &e) {
    throw ParseError(parent_line_no, e.what());
  }
}

std::string to_text(const Tournament &g) {
  std::ostringstream os;
  write_tournament(os, g);
  return os.str();
}

std::string to_text(const ColoredTournament &g) {
  std::ostringstream os;
  write_colored(os, g);
  return os.str();
}

std::string to_text(const OrientedTree &t) {
  std::ostringstream os;
  write_tree(os, t);
  return os.str();
}

namespace {

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw PreconditionError("cannot open '" + path + "'");
  return in;
}

} // namespace

Tournament load_tournament(const std::string &path) {
  auto in = open_input(path);
  return read_tournament(in);
}

ColoredTournament load_colored(const std::string &path) {
  auto in = open_input(path);
  return read_colored(in);
}

OrientedTree load_tree(const std::string &path) {
  auto in = open_input(path);
  return read_tree(in);
}

} // namespace rtour
