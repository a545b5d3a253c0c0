#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference with identical output; tests compare the two and bench_kernels
// times them.

#include "orthograph/bitmatrix.hpp"
#include "orthograph/projective.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace orthograph {

/// Adjacency from the bilinear form: i ~ j iff B(v_i, v_j) is a unit.
BitMatrix fill_adjacency(const PointSet &points);
BitMatrix fill_adjacency_serial(const PointSet &points);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Common-neighbour counts over all unordered pairs, split by adjacency and,
/// for non-adjacent pairs, by whether both ends carry the same group label.
struct PairCensus {
  Histogram degrees;            // degree -> number of vertices
  Histogram adjacent;           // |N(u) & N(v)| -> number of adjacent pairs
  Histogram nonadjacent_same;   // same group label
  Histogram nonadjacent_cross;  // different group labels

  Histogram nonadjacent() const;

  friend bool operator==(const PairCensus &, const PairCensus &) = default;
};

PairCensus pair_census(const BitMatrix &adj, std::span<const int> group);
PairCensus pair_census_serial(const BitMatrix &adj, std::span<const int> group);

/// Number of threads OpenMP regions will use; honours ORTHOGRAPH_THREADS.
int configure_threads();

} // namespace orthograph
