#pragma once

#include "orthograph/bitmatrix.hpp"
#include "orthograph/formulas.hpp"
#include "orthograph/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace orthograph {

struct AutBudget {
  /// Largest graph searched directly; bigger graphs go through twin reduction.
  std::size_t max_vertices = 150;
  std::uint64_t max_nodes = 5'000'000;
};

using Permutation = std::vector<std::size_t>;

struct AutGroupResult {
  /// False if the search ran out of budget; nothing else is then meaningful.
  bool complete = false;
  /// "full-search" or "twin-reduction".
  std::string method;
  BigInt order = 0;
  std::vector<Permutation> generators;
  std::size_t vertex_orbits = 0;
  bool vertex_transitive = false;
  std::uint64_t arc_count = 0;
  std::uint64_t arc_orbit_size = 0;
  bool arc_transitive = false;
  std::uint64_t nodes = 0;
};

/// Automorphism group of a graph whose vertices carry colours that must be
/// preserved (pass an empty span for an uncoloured graph). The order comes
/// from the stabiliser chain found by individualisation-refinement search.
AutGroupResult automorphisms(const BitMatrix &adj, const AutBudget &budget,
                             std::span<const int> colors = {});

/// Order and transitivity via the quotient by twin classes:
/// |Aut(G)| = |Aut_sizes(G / twins)| * prod(class size)!.
AutGroupResult automorphisms_by_twins(const BitMatrix &adj,
                                      const AutBudget &budget);

bool is_automorphism(const BitMatrix &adj, std::span<const std::size_t> perm);

/// True iff every permutation within each fibre is an automorphism, i.e. all
/// members of a fibre have identical neighbourhoods.
bool fiber_wreath_check(const OrthoGraph &g);

/// Lifts a residue-graph automorphism fibrewise (k-th member to k-th member).
Permutation lift_automorphism(const OrthoGraph &g,
                              std::span<const std::size_t> residue_perm);

} // namespace orthograph
