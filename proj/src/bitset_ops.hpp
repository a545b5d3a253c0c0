#pragma once

// Small helpers for vertex sets stored as 64-bit word vectors.

#include "orthograph/bitmatrix.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace orthograph::detail {

using Bits = std::vector<std::uint64_t>;

inline Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

inline void set_bit(Bits &b, std::size_t i) {
  b[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline void clear_bit(Bits &b, std::size_t i) {
  b[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}
inline bool test_bit(const Bits &b, std::size_t i) {
  return (b[i >> 6] >> (i & 63)) & 1u;
}
inline bool any(const Bits &b) {
  for (auto w : b)
    if (w)
      return true;
  return false;
}
inline std::size_t count(const Bits &b) {
  std::size_t c = 0;
  for (auto w : b)
    c += std::popcount(w);
  return c;
}
/// Lowest set index; caller ensures any(b).
inline std::size_t first(const Bits &b) {
  for (std::size_t w = 0;; ++w)
    if (b[w])
      return w * 64 + std::countr_zero(b[w]);
}
/// Lowest set index above i, or SIZE_MAX.
inline std::size_t next(const Bits &b, std::size_t i) {
  ++i;
  std::size_t w = i / 64;
  if (w >= b.size())
    return SIZE_MAX;
  std::uint64_t word = b[w] & (~std::uint64_t{0} << (i % 64));
  while (!word) {
    if (++w == b.size())
      return SIZE_MAX;
    word = b[w];
  }
  return w * 64 + std::countr_zero(word);
}
inline void and_row(Bits &b, const BitMatrix &m, std::size_t row) {
  const auto r = m.row(row);
  for (std::size_t w = 0; w < b.size(); ++w)
    b[w] &= r[w];
}
inline void and_not_row(Bits &b, const BitMatrix &m, std::size_t row) {
  const auto r = m.row(row);
  for (std::size_t w = 0; w < b.size(); ++w)
    b[w] &= ~r[w];
}

/// Complement graph (no loops).
inline BitMatrix complement(const BitMatrix &m) {
  BitMatrix c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j && !m.test(i, j))
        c.set(i, j);
  return c;
}

/// Classes of vertices with identical neighbourhoods (necessarily pairwise
/// non-adjacent in a loopless graph). Classes ordered by smallest member.
inline std::vector<std::vector<std::size_t>> twin_classes(const BitMatrix &m) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<int> assigned(m.size(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (assigned[i] >= 0)
      continue;
    assigned[i] = static_cast<int>(classes.size());
    classes.push_back({i});
    const auto ri = m.row(i);
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (assigned[j] >= 0)
        continue;
      const auto rj = m.row(j);
      if (std::equal(ri.begin(), ri.end(), rj.begin())) {
        assigned[j] = assigned[i];
        classes.back().push_back(j);
      }
    }
  }
  return classes;
}

} // namespace orthograph::detail
