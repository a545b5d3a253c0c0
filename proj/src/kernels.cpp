#include "orthograph/kernels.hpp"

#include "orthograph/errors.hpp"

#include <cstdlib>
#include <omp.h>
#include <string>
#include <vector>

namespace orthograph {

Histogram PairCensus::nonadjacent() const {
  Histogram out = nonadjacent_same;
  for (const auto &[value, count] : nonadjacent_cross)
    out[value] += count;
  return out;
}

BitMatrix fill_adjacency(const PointSet &points) {
  const FormSpec &spec = points.spec();
  const std::size_t v = points.size();
  BitMatrix adj(v);
  const Residue *base = points.flat().data();
  const int dim = spec.dim();
  // Each thread owns whole rows; the upper triangle is mirrored afterwards.
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(v); ++i) {
    const Residue *a = base + i * dim;
    for (std::size_t j = 0; j < v; ++j)
      if (is_unit(bform_raw(spec, a, base + j * dim)))
        adj.set(static_cast<std::size_t>(i), j);
  }
  return adj;
}

BitMatrix fill_adjacency_serial(const PointSet &points) {
  const FormSpec &spec = points.spec();
  const std::size_t v = points.size();
  BitMatrix adj(v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (is_unit(bform(spec, points[i], points[j])))
        adj.set_symmetric(i, j);
  return adj;
}

namespace {

void require_groups(const BitMatrix &adj, std::span<const int> group) {
  if (group.size() != adj.size())
    throw UsageError("group label count does not match vertex count");
}

Histogram to_histogram(const std::vector<std::uint64_t> &counts) {
  Histogram h;
  for (std::size_t value = 0; value < counts.size(); ++value)
    if (counts[value])
      h[value] = counts[value];
  return h;
}

} // namespace

PairCensus pair_census(const BitMatrix &adj, std::span<const int> group) {
  require_groups(adj, group);
  const std::size_t v = adj.size();
  std::vector<std::uint64_t> adjacent(v + 1, 0), same(v + 1, 0),
      cross(v + 1, 0), degree(v + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> l_adj(v + 1, 0), l_same(v + 1, 0),
        l_cross(v + 1, 0), l_deg(v + 1, 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(v); ++si) {
      const auto i = static_cast<std::size_t>(si);
      ++l_deg[adj.row_count(i)];
      for (std::size_t j = i + 1; j < v; ++j) {
        const std::size_t c = adj.common(i, j);
        if (adj.test(i, j))
          ++l_adj[c];
        else if (group[i] == group[j])
          ++l_same[c];
        else
          ++l_cross[c];
      }
    }
#pragma omp critical
    for (std::size_t k = 0; k <= v; ++k) {
      adjacent[k] += l_adj[k];
      same[k] += l_same[k];
      cross[k] += l_cross[k];
      degree[k] += l_deg[k];
    }
  }
  return {to_histogram(degree), to_histogram(adjacent), to_histogram(same),
          to_histogram(cross)};
}

PairCensus pair_census_serial(const BitMatrix &adj,
                              std::span<const int> group) {
  require_groups(adj, group);
  PairCensus c;
  const std::size_t v = adj.size();
  for (std::size_t i = 0; i < v; ++i) {
    ++c.degrees[adj.row_count(i)];
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t common = adj.common(i, j);
      if (adj.test(i, j))
        ++c.adjacent[common];
      else if (group[i] == group[j])
        ++c.nonadjacent_same[common];
      else
        ++c.nonadjacent_cross[common];
    }
  }
  return c;
}

int configure_threads() {
  if (const char *env = std::getenv("ORTHOGRAPH_THREADS")) {
    const int requested = std::atoi(env);
    if (requested < 1)
      throw ConfigError(std::string("ORTHOGRAPH_THREADS must be a positive "
                                    "integer, got '") +
                        env + "'");
    omp_set_num_threads(requested);
  }
  return omp_get_max_threads();
}

} // namespace orthograph
