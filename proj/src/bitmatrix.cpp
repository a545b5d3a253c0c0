#include "orthograph/bitmatrix.hpp"

namespace orthograph {

BitMatrix::BitMatrix(std::size_t size)
    : size_(size), words_((size + 63) / 64), bits_(size * words_, 0) {}

std::size_t BitMatrix::row_count(std::size_t i) const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : row(i))
    c += std::popcount(w);
  return c;
}

std::size_t BitMatrix::common(std::size_t i, std::size_t j) const noexcept {
  const std::uint64_t *a = bits_.data() + i * words_;
  const std::uint64_t *b = bits_.data() + j * words_;
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += std::popcount(a[w] & b[w]);
  return c;
}

std::vector<std::size_t> BitMatrix::row_indices(std::size_t i) const {
  std::vector<std::size_t> out;
  const auto r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

BitMatrix BitMatrix::induced(std::span<const std::size_t> ids) const {
  BitMatrix sub(ids.size());
  for (std::size_t a = 0; a < ids.size(); ++a)
    for (std::size_t b = 0; b < ids.size(); ++b)
      if (test(ids[a], ids[b]))
        sub.set(a, b);
  return sub;
}

bool BitMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (test(i, j) != test(j, i))
        return false;
  return true;
}

bool BitMatrix::has_loops() const noexcept {
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i, i))
      return true;
  return false;
}

} // namespace orthograph
