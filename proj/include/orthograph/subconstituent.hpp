#pragma once

#include "orthograph/census.hpp"
#include "orthograph/formulas.hpp"
#include "orthograph/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orthograph {

/// Induced subgraph on the neighbours (index 1) or the non-neighbours other
/// than the base vertex (index 2). Vertex order follows the parent.
struct Subconstituent {
  int index = 0;
  std::size_t base = 0;
  std::vector<std::size_t> ids;
  BitMatrix adjacency;
  /// Parent fibre label of every member.
  std::vector<int> fiber_labels;
};

/// Id of [1, 0, ..., 0].
std::size_t base_vertex(const OrthoGraph &g);

Subconstituent subconstituent(const OrthoGraph &g, int index,
                              std::optional<std::size_t> base = {});

/// Second subconstituent without the other members of the base vertex's own
/// fibre, i.e. only lifts of residue second-subconstituent vertices.
Subconstituent second_without_base_fiber(const OrthoGraph &g,
                                         std::optional<std::size_t> base = {});

/// Whether "non-adjacent to the base" coincides with "distance 2".
struct DistanceCheck {
  bool nonadjacent_is_distance_two = true;
  std::size_t farther = 0; // non-neighbours with no common neighbour
  bool degenerate_path = false;
};
DistanceCheck distance_check(const OrthoGraph &g, std::size_t base);

struct FieldCheck {
  std::string field;
  std::string predicted;
  std::string measured;
  bool pass = false;
};

struct SubVerification {
  SubconstituentPrediction predicted;
  MeasuredParams measured;
  std::vector<FieldCheck> fields;
  bool pass = false;
};

/// Field-by-field comparison. Every measured common-neighbour value must be
/// one the prediction allows; vertex count and degree must match exactly.
SubVerification compare_sub(const SubconstituentPrediction &predicted,
                            const MeasuredParams &measured);

SubVerification verify_sub(const OrthoGraph &g, int index);

MeasuredParams census(const Subconstituent &s);

} // namespace orthograph
