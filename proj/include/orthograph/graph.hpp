#pragma once

#include "orthograph/bitmatrix.hpp"
#include "orthograph/projective.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace orthograph {

/// Vertex ids of one lifting fiber X_a over a residue-graph vertex.
struct Fiber {
  std::size_t base = 0;
  std::vector<std::size_t> members;
};

/// The orthogonal graph over Z_{2^n}: sorted canonical vertices, a dense
/// adjacency bit matrix and the index of lifting fibers over the residue
/// graph. Immutable once built.
class OrthoGraph {
public:
  OrthoGraph(PointSet vertices, BitMatrix adjacency, PointSet residue_vertices,
             std::vector<int> residue_of);

  const FormSpec &spec() const noexcept { return vertices_.spec(); }
  const PointSet &vertices() const noexcept { return vertices_; }
  const BitMatrix &adjacency() const noexcept { return adjacency_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return adjacency_.test(u, v);
  }

  const PointSet &residue_vertices() const noexcept { return residue_vertices_; }
  /// Residue-graph vertex id of every vertex; doubles as the fiber label.
  std::span<const int> residue_labels() const noexcept { return residue_of_; }
  const std::vector<std::vector<std::size_t>> &fibers() const noexcept {
    return fibers_;
  }

private:
  PointSet vertices_;
  BitMatrix adjacency_;
  PointSet residue_vertices_;
  std::vector<int> residue_of_;
  std::vector<std::vector<std::size_t>> fibers_;
};

OrthoGraph build_graph(const FormSpec &spec,
                       std::uint64_t cap = kDefaultVertexCap);

/// The graph over Z_2 with the same (nu, delta) and z projected.
OrthoGraph residue_graph(const FormSpec &spec);

/// Residue-graph vertex id of the coordinatewise projection of vertex v.
std::size_t project_vertex(const OrthoGraph &g, std::size_t v);

Fiber fiber_of(const OrthoGraph &g, std::size_t residue_id);

std::vector<std::size_t> neighbors(const OrthoGraph &g, std::size_t v);
std::size_t common_neighbors(const OrthoGraph &g, std::size_t u,
                             std::size_t v);

/// Exhaustive comparison of a graph against its residue graph.
struct LiftingCheck {
  std::size_t fiber_count = 0;
  std::size_t min_fiber = 0;
  std::size_t max_fiber = 0;
  bool fibers_partition = false;
  std::uint64_t pairs_checked = 0;
  /// Adjacent pairs whose projections are not adjacent.
  std::uint64_t descend_violations = 0;
  /// Pairs over adjacent residue vertices that are not adjacent.
  std::uint64_t lift_violations = 0;
};

LiftingCheck check_lifting(const OrthoGraph &g, const OrthoGraph &residue);

} // namespace orthograph
