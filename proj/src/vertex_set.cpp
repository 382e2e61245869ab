#include "rtour/vertex_set.hpp"

#include <algorithm>

namespace rtour {

int and_count(std::span<const Word> a, std::span<const Word> b) noexcept {
  int total = 0;
  const std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i)
    total += std::popcount(a[i] & b[i]);
  return total;
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members)
    insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members)
    insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto &w : s.words_)
    w = ~Word{0};
  const int tail = universe % kWordBits;
  if (tail != 0 && !s.words_.empty())
    s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::from_words(int universe, std::span<const Word> words) {
  VertexSet s(universe);
  std::copy_n(words.begin(), std::min(words.size(), s.words_.size()),
              s.words_.begin());
  return s;
}

int VertexSet::size() const noexcept {
  int c = 0;
  for (Word w : words_)
    c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::next(Vertex from) const noexcept {
  if (from < 0)
    from = 0;
  if (from >= n_)
    return -1;
  std::size_t w = idx(from);
  Word x = words_[w] & (~Word{0} << (static_cast<unsigned>(from) % kWordBits));
  while (true) {
    if (x)
      return static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
    if (++w >= words_.size())
      return -1;
    x = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet &VertexSet::operator&=(const VertexSet &o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

VertexSet &VertexSet::operator|=(const VertexSet &o) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &o) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet &VertexSet::intersect_words(std::span<const Word> row) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < row.size() ? row[i] : 0;
  return *this;
}

VertexSet &VertexSet::subtract_words(std::span<const Word> row) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < row.size(); ++i)
    words_[i] &= ~row[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet &o) const noexcept {
  const std::size_t len = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < len; ++i)
    if (words_[i] & o.words_[i])
      return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet &o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word other = i < o.words_.size() ? o.words_[i] : 0;
    if (words_[i] & ~other)
      return false;
  }
  return true;
}

int BitMatrix::row_count(Vertex i) const noexcept {
  int c = 0;
  for (Word w : row(i))
    c += std::popcount(w);
  return c;
}

} // namespace rtour
