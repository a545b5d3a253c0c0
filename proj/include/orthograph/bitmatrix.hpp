#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orthograph {

/// Dense square bit matrix with 64-bit word rows; used as a symmetric
/// adjacency matrix.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
  }
  void set_symmetric(std::size_t i, std::size_t j) noexcept {
    set(i, j);
    set(j, i);
  }

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::span<std::uint64_t> row(std::size_t i) noexcept {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t row_count(std::size_t i) const noexcept;
  /// |row(i) & row(j)|
  std::size_t common(std::size_t i, std::size_t j) const noexcept;

  /// Column indices set in row i, ascending.
  std::vector<std::size_t> row_indices(std::size_t i) const;

  /// Submatrix on the given ordered index list.
  BitMatrix induced(std::span<const std::size_t> ids) const;

  bool is_symmetric() const noexcept;
  bool has_loops() const noexcept;

  friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

} // namespace orthograph
