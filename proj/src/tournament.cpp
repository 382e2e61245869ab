#include "rtour/tournament.hpp"

namespace rtour {

std::optional<Color> parse_color(std::string_view s) noexcept {
  if (s == "red" || s == "r")
    return Color::Red;
  if (s == "blue" || s == "b")
    return Color::Blue;
  return std::nullopt;
}

Tournament::Tournament(int n) : out_(n), in_(n) {
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      out_.set(i, j);
      in_.set(j, i);
    }
}

void Tournament::orient(Vertex i, Vertex j) noexcept {
  out_.set(i, j);
  in_.set(j, i);
  out_.reset(j, i);
  in_.reset(i, j);
}

long long Tournament::edge_count() const noexcept {
  long long total = 0;
  for (Vertex v = 0; v < n(); ++v)
    total += out_.row_count(v);
  return total;
}

ColoredTournament::ColoredTournament(Tournament base)
    : base_(std::move(base)),
      out_{BitMatrix(base_.n()), BitMatrix(base_.n())},
      in_{BitMatrix(base_.n()), BitMatrix(base_.n())} {
  const int n = base_.n();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && base_.has_edge(i, j)) {
        out_[0].set(i, j);
        in_[0].set(j, i);
      }
}

void ColoredTournament::set_color(Vertex i, Vertex j, Color c) noexcept {
  const auto on = idx(c);
  const auto off = idx(other(c));
  out_[on].set(i, j);
  in_[on].set(j, i);
  out_[off].reset(i, j);
  in_[off].reset(j, i);
}

long long ColoredTournament::edge_count(Color c) const noexcept {
  long long total = 0;
  for (Vertex v = 0; v < n(); ++v)
    total += out_[idx(c)].row_count(v);
  return total;
}

} // namespace rtour
