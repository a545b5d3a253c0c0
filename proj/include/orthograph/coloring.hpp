#pragma once

#include "orthograph/bitmatrix.hpp"
#include "orthograph/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orthograph {

struct ColoringBudget {
  std::uint64_t max_nodes = 20'000'000;
  double max_seconds = 60.0;
};

struct ColoringResult {
  /// Set when lower == upper.
  std::optional<std::size_t> chromatic_number;
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// Proper colouring with `upper` colours, colours numbered from 0.
  std::vector<int> coloring;
  /// "clique", "independence-ratio" or "exhaustive-search".
  std::string lower_bound_method;
  /// Source of the colouring: "dsatur-greedy", "incumbent",
  /// "invariant-partition", "partition-search" or "branch-and-bound".
  std::string upper_bound_method;
  std::vector<std::size_t> clique;
  std::optional<std::size_t> independence_number;
  /// Vertices after merging classes of identical neighbourhoods.
  std::size_t reduced_size = 0;
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound on the twin-reduced
/// graph, bracketed by a clique and an independence-ratio lower bound.
/// `incumbent` (optional) seeds the upper bound when it is proper.
ColoringResult chromatic_exact(const BitMatrix &adj, const ColoringBudget &budget,
                               std::span<const int> incumbent = {});

/// Independent check: no edge is monochromatic and every vertex is coloured.
bool is_proper_coloring(const BitMatrix &adj, std::span<const int> colors);

std::size_t color_count(std::span<const int> colors);

/// Colour each vertex with the colour of its residue-graph vertex.
std::vector<int> lift_coloring(const OrthoGraph &g,
                               std::span<const int> residue_coloring);

/// Largest clique, searched exactly up to the node budget. `complete` is
/// false if the budget ran out (the clique is then only a lower bound).
struct CliqueResult {
  std::vector<std::size_t> clique;
  bool complete = false;
  std::uint64_t nodes = 0;
};
CliqueResult max_clique(const BitMatrix &adj, std::uint64_t max_nodes);

} // namespace orthograph
