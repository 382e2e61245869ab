#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rtour {

using Vertex = int;
using Word = std::uint64_t;

constexpr int kWordBits = 64;

inline int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

/// Popcount of a & b over equal-length word spans.
int and_count(std::span<const Word> a, std::span<const Word> b) noexcept;

/// Subset of the vertex range [0, n), stored as a bitmask.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_(static_cast<std::size_t>(words_for(universe)), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);
  static VertexSet from_words(int universe, std::span<const Word> words);

  int universe() const noexcept { return n_; }

  void insert(Vertex v) noexcept { words_[idx(v)] |= bit(v); }
  void erase(Vertex v) noexcept { words_[idx(v)] &= ~bit(v); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < n_ && (words_[idx(v)] & bit(v)) != 0;
  }

  int size() const noexcept;
  bool empty() const noexcept;
  /// Lowest member, or -1.
  Vertex first() const noexcept { return next(0); }
  /// Lowest member >= from, or -1.
  Vertex next(Vertex from) const noexcept;

  std::vector<Vertex> to_vector() const;

  VertexSet &operator&=(const VertexSet &o) noexcept;
  VertexSet &operator|=(const VertexSet &o) noexcept;
  VertexSet &operator-=(const VertexSet &o) noexcept;
  VertexSet &intersect_words(std::span<const Word> row) noexcept;
  VertexSet &subtract_words(std::span<const Word> row) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }
  friend bool operator==(const VertexSet &, const VertexSet &) = default;

  bool intersects(const VertexSet &o) const noexcept;
  bool is_subset_of(const VertexSet &o) const noexcept;

  std::span<const Word> words() const noexcept { return words_; }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word x = words_[w];
      while (x) {
        const int b = std::countr_zero(x);
        f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(b)));
        x &= x - 1;
      }
    }
  }

private:
  static std::size_t idx(Vertex v) noexcept { return static_cast<std::size_t>(v) / kWordBits; }
  static Word bit(Vertex v) noexcept { return Word{1} << (static_cast<unsigned>(v) % kWordBits); }

  int n_ = 0;
  std::vector<Word> words_;
};

/// Square bit matrix, row-major, one word-aligned row per vertex.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), stride_(words_for(n)),
        bits_(static_cast<std::size_t>(stride_) * static_cast<std::size_t>(n), 0) {}

  int size() const noexcept { return n_; }

  bool test(Vertex i, Vertex j) const noexcept {
    return (bits_[pos(i, j)] >> (static_cast<unsigned>(j) % kWordBits)) & 1U;
  }
  void set(Vertex i, Vertex j) noexcept { bits_[pos(i, j)] |= Word{1} << (static_cast<unsigned>(j) % kWordBits); }
  void reset(Vertex i, Vertex j) noexcept { bits_[pos(i, j)] &= ~(Word{1} << (static_cast<unsigned>(j) % kWordBits)); }

  std::span<const Word> row(Vertex i) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(stride_),
            static_cast<std::size_t>(stride_)};
  }
  int row_count(Vertex i) const noexcept;
  int row_count_in(Vertex i, const VertexSet &s) const noexcept { return and_count(row(i), s.words()); }
  VertexSet row_set(Vertex i) const { return VertexSet::from_words(n_, row(i)); }

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t pos(Vertex i, Vertex j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(stride_) +
           static_cast<std::size_t>(j) / kWordBits;
  }

  int n_ = 0;
  int stride_ = 0;
  std::vector<Word> bits_;
};

} // namespace rtour
