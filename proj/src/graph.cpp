#include "orthograph/graph.hpp"

#include "orthograph/errors.hpp"
#include "orthograph/kernels.hpp"

#include <algorithm>

namespace orthograph {

OrthoGraph::OrthoGraph(PointSet vertices, BitMatrix adjacency,
                       PointSet residue_vertices, std::vector<int> residue_of)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)),
      residue_vertices_(std::move(residue_vertices)),
      residue_of_(std::move(residue_of)),
      fibers_(residue_vertices_.size()) {
  for (std::size_t v = 0; v < residue_of_.size(); ++v)
    fibers_[residue_of_[v]].push_back(v);
}

namespace {

std::ptrdiff_t locate_projection(const PointSet &residue_vertices,
                                 std::span<const Residue> rep) {
  std::vector<Residue> reduced(rep.begin(), rep.end());
  for (Residue &x : reduced)
    x = project(x);
  const auto canon = canonicalize(residue_vertices.spec(), reduced);
  return residue_vertices.find(canon.rep);
}

} // namespace

OrthoGraph build_graph(const FormSpec &spec, std::uint64_t cap) {
  PointSet vertices = enumerate_vertices(spec, cap);
  BitMatrix adjacency = fill_adjacency(vertices);
  PointSet residue = spec.n() == 1
                         ? vertices
                         : enumerate_vertices(spec.residue_spec(), cap);
  std::vector<int> residue_of(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto id = locate_projection(residue, vertices[v]);
    if (id < 0)
      throw InvariantError("projection of a vertex is not a residue vertex");
    residue_of[v] = static_cast<int>(id);
  }
  return OrthoGraph(std::move(vertices), std::move(adjacency),
                    std::move(residue), std::move(residue_of));
}

OrthoGraph residue_graph(const FormSpec &spec) {
  return build_graph(spec.residue_spec());
}

std::size_t project_vertex(const OrthoGraph &g, std::size_t v) {
  if (v >= g.size())
    throw UsageError("vertex id out of range");
  return static_cast<std::size_t>(g.residue_labels()[v]);
}

Fiber fiber_of(const OrthoGraph &g, std::size_t residue_id) {
  if (residue_id >= g.fibers().size())
    throw UsageError("residue vertex id out of range");
  return {residue_id, g.fibers()[residue_id]};
}

std::vector<std::size_t> neighbors(const OrthoGraph &g, std::size_t v) {
  return g.adjacency().row_indices(v);
}

std::size_t common_neighbors(const OrthoGraph &g, std::size_t u,
                             std::size_t v) {
  return g.adjacency().common(u, v);
}

LiftingCheck check_lifting(const OrthoGraph &g, const OrthoGraph &residue) {
  if (g.residue_vertices().flat() != residue.vertices().flat())
    throw UsageError("residue graph does not match the graph's residue index");
  LiftingCheck out;
  const auto &fibers = g.fibers();
  out.fiber_count = fibers.size();
  out.min_fiber = g.size();
  std::size_t total = 0;
  for (const auto &f : fibers) {
    out.min_fiber = std::min(out.min_fiber, f.size());
    out.max_fiber = std::max(out.max_fiber, f.size());
    total += f.size();
  }
  out.fibers_partition = total == g.size();

  const auto label = g.residue_labels();
  const std::size_t v = g.size();
  std::uint64_t descend = 0, checked = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : descend, checked)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(v); ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i + 1; j < v; ++j) {
      ++checked;
      if (g.adjacent(i, j) && !residue.adjacent(label[i], label[j]))
        ++descend;
    }
  }
  out.pairs_checked = checked;
  out.descend_violations = descend;

  std::uint64_t lift = 0;
  for (std::size_t a = 0; a < fibers.size(); ++a)
    for (std::size_t b = a + 1; b < fibers.size(); ++b) {
      if (!residue.adjacent(a, b))
        continue;
      for (std::size_t x : fibers[a])
        for (std::size_t y : fibers[b])
          if (!g.adjacent(x, y))
            ++lift;
    }
  out.lift_violations = lift;
  return out;
}

} // namespace orthograph
