#pragma once

#include "rtour/vertex_set.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace rtour {

enum class Color : unsigned char { Red = 0, Blue = 1 };

constexpr Color other(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}
constexpr std::string_view to_string(Color c) noexcept {
  return c == Color::Red ? "red" : "blue";
}
std::optional<Color> parse_color(std::string_view s) noexcept;

/// Read-only view of a digraph given by out- and in-neighbourhood rows.
/// Used for a whole tournament or for one colour class of it.
struct DigraphRef {
  const BitMatrix *out = nullptr;
  const BitMatrix *in = nullptr;

  int n() const noexcept { return out->size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept { return out->test(u, v); }
  std::span<const Word> out_row(Vertex v) const noexcept { return out->row(v); }
  std::span<const Word> in_row(Vertex v) const noexcept { return in->row(v); }
  int out_degree_in(Vertex v, const VertexSet &s) const noexcept { return out->row_count_in(v, s); }
  int in_degree_in(Vertex v, const VertexSet &s) const noexcept { return in->row_count_in(v, s); }
};

/// Complete orientation on n vertices. Both the out-rows and the in-rows are
/// kept so that neighbourhood queries in either direction are word-parallel.
class Tournament {
public:
  Tournament() = default;
  /// Transitive orientation i -> j for i < j; callers reorient as needed.
  explicit Tournament(int n);

  int n() const noexcept { return out_.size(); }
  bool has_edge(Vertex i, Vertex j) const noexcept { return out_.test(i, j); }

  /// Orients the pair {i, j} as i -> j.
  void orient(Vertex i, Vertex j) noexcept;

  int out_degree(Vertex v) const noexcept { return out_.row_count(v); }
  int in_degree(Vertex v) const noexcept { return in_.row_count(v); }
  std::span<const Word> out_row(Vertex v) const noexcept { return out_.row(v); }
  std::span<const Word> in_row(Vertex v) const noexcept { return in_.row(v); }
  DigraphRef view() const noexcept { return {&out_, &in_}; }

  long long edge_count() const noexcept;

  friend bool operator==(const Tournament &a, const Tournament &b) { return a.out_ == b.out_; }

private:
  BitMatrix out_;
  BitMatrix in_;
};

/// Tournament together with a red/blue label on each of its edges.
class ColoredTournament {
public:
  ColoredTournament() = default;
  /// Every edge starts red.
  explicit ColoredTournament(Tournament base);

  template <typename F>
  ColoredTournament(Tournament base, F &&color_of) : ColoredTournament(std::move(base)) {
    const int n = base_.n();
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (i != j && base_.has_edge(i, j))
          set_color(i, j, color_of(i, j));
  }

  int n() const noexcept { return base_.n(); }
  const Tournament &base() const noexcept { return base_; }
  bool has_edge(Vertex i, Vertex j) const noexcept { return base_.has_edge(i, j); }

  /// Colour of the edge i -> j; the edge must exist.
  Color color(Vertex i, Vertex j) const noexcept {
    return out_[0].test(i, j) ? Color::Red : Color::Blue;
  }
  bool has_colored_edge(Vertex i, Vertex j, Color c) const noexcept {
    return out_[idx(c)].test(i, j);
  }
  void set_color(Vertex i, Vertex j, Color c) noexcept;

  DigraphRef view(Color c) const noexcept { return {&out_[idx(c)], &in_[idx(c)]}; }
  DigraphRef view(std::optional<Color> c) const noexcept { return c ? view(*c) : base_.view(); }

  int out_degree(Color c, Vertex v) const noexcept { return out_[idx(c)].row_count(v); }
  int in_degree(Color c, Vertex v) const noexcept { return in_[idx(c)].row_count(v); }

  long long edge_count(Color c) const noexcept;

  friend bool operator==(const ColoredTournament &a, const ColoredTournament &b) {
    return a.base_ == b.base_ && a.out_[0] == b.out_[0];
  }

private:
  static std::size_t idx(Color c) noexcept { return static_cast<std::size_t>(c); }

  Tournament base_;
  std::array<BitMatrix, 2> out_;
  std::array<BitMatrix, 2> in_;
};

} // namespace rtour
