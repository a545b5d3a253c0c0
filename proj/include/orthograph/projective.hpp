#pragma once

#include "orthograph/forms.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orthograph {

inline constexpr std::uint64_t kDefaultVertexCap = 200'000;

/// Canonical representative of a class [a] under scaling by units: the first
/// unit coordinate is 1.
struct ProjPoint {
  std::vector<Residue> rep;

  friend auto operator<=>(const ProjPoint &, const ProjPoint &) = default;
};

/// Scales a by the inverse of its first unit coordinate. Throws DomainError
/// when a has no unit coordinate.
ProjPoint canonicalize(const FormSpec &spec, std::span<const Residue> a);

/// Lexicographically sorted set of points, stored flat for locality.
class PointSet {
public:
  PointSet(FormSpec spec, std::vector<Residue> coords);

  const FormSpec &spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const Residue> operator[](std::size_t i) const {
    return {coords_.data() + i * spec_.dim(),
            static_cast<std::size_t>(spec_.dim())};
  }
  const std::vector<Residue> &flat() const noexcept { return coords_; }

  /// Position of a canonical rep, or -1 if absent.
  std::ptrdiff_t find(std::span<const Residue> rep) const;

private:
  FormSpec spec_;
  std::vector<Residue> coords_;
  std::size_t size_;
};

/// Vertex count predicted by the lifting count; saturates at UINT64_MAX.
std::uint64_t predicted_vertex_count(const FormSpec &spec);

/// All canonical points with Q(rep) = 0, sorted lexicographically. Throws
/// ResourceError if the predicted count exceeds cap.
PointSet enumerate_vertices(const FormSpec &spec,
                            std::uint64_t cap = kDefaultVertexCap);

/// True iff some coordinate among the first 2*nu is a unit.
bool unit_position_check(const FormSpec &spec, std::span<const Residue> rep);

} // namespace orthograph
