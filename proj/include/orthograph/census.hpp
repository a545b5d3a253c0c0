#pragma once

#include "orthograph/graph.hpp"
#include "orthograph/kernels.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace orthograph {

enum class Classification { Complete, SRG, QSRG, Regular, Irregular };

const char *to_string(Classification c);

/// Brute-force measurement of regularity and common-neighbour structure.
/// The classification is derived from the census alone.
struct MeasuredParams {
  std::size_t vertex_count = 0;
  PairCensus census;
  Classification classification = Classification::Irregular;

  std::optional<std::uint64_t> degree() const;
  std::uint64_t edge_count() const;
  /// e.g. "SRG(9,4,1,2)" or "QSRG(36,16,4,{8,16})".
  std::string describe() const;
};

Classification classify(const PairCensus &census);

MeasuredParams census(const OrthoGraph &g);
/// Census of an arbitrary adjacency matrix with group labels marking which
/// non-adjacent pairs count as "same group".
MeasuredParams census(const BitMatrix &adj, std::span<const int> group);

} // namespace orthograph
