#include "orthograph/subconstituent.hpp"

#include "orthograph/errors.hpp"

namespace orthograph {

std::size_t base_vertex(const OrthoGraph &g) {
  std::vector<Residue> e1(g.spec().dim(), 0);
  e1[0] = 1;
  const auto id = g.vertices().find(e1);
  if (id < 0)
    throw InvariantError("[1,0,...,0] is missing from the vertex list");
  return static_cast<std::size_t>(id);
}

namespace {

Subconstituent make(const OrthoGraph &g, int index, std::size_t base,
                    std::vector<std::size_t> ids) {
  Subconstituent s;
  s.index = index;
  s.base = base;
  s.adjacency = g.adjacency().induced(ids);
  for (std::size_t v : ids)
    s.fiber_labels.push_back(g.residue_labels()[v]);
  s.ids = std::move(ids);
  return s;
}

} // namespace

Subconstituent subconstituent(const OrthoGraph &g, int index,
                              std::optional<std::size_t> base) {
  if (index != 1 && index != 2)
    throw UsageError("subconstituent index must be 1 or 2");
  const std::size_t b = base.value_or(base_vertex(g));
  if (b >= g.size())
    throw UsageError("base vertex out of range");
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v == b)
      continue;
    if (g.adjacent(b, v) == (index == 1))
      ids.push_back(v);
  }
  return make(g, index, b, std::move(ids));
}

Subconstituent second_without_base_fiber(const OrthoGraph &g,
                                         std::optional<std::size_t> base) {
  const std::size_t b = base.value_or(base_vertex(g));
  const int fiber = g.residue_labels()[b];
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (v != b && !g.adjacent(b, v) && g.residue_labels()[v] != fiber)
      ids.push_back(v);
  return make(g, 2, b, std::move(ids));
}

DistanceCheck distance_check(const OrthoGraph &g, std::size_t base) {
  DistanceCheck d;
  d.degenerate_path = g.size() == 2;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (v != base && !g.adjacent(base, v) && common_neighbors(g, base, v) == 0)
      ++d.farther;
  d.nonadjacent_is_distance_two = d.farther == 0;
  return d;
}

MeasuredParams census(const Subconstituent &s) {
  return census(s.adjacency, s.fiber_labels);
}

namespace {

std::string set_string(const std::set<BigInt> &values) {
  std::string s = "{";
  for (const auto &v : values) {
    if (s.size() > 1)
      s += ",";
    s += v.str();
  }
  return s + "}";
}

std::string hist_keys(const Histogram &h) {
  std::string s = "{";
  for (const auto &[value, count] : h) {
    if (s.size() > 1)
      s += ",";
    s += std::to_string(value);
  }
  return s + "}";
}

bool subset(const Histogram &measured, const std::set<BigInt> &allowed) {
  for (const auto &[value, count] : measured)
    if (!allowed.contains(BigInt(value)))
      return false;
  return true;
}

} // namespace

SubVerification compare_sub(const SubconstituentPrediction &predicted,
                            const MeasuredParams &measured) {
  SubVerification out{predicted, measured, {}, false};
  if (!predicted.covered())
    return out;
  out.fields.push_back({"vertex_count", predicted.vertex_count.str(),
                        std::to_string(measured.vertex_count),
                        predicted.vertex_count == measured.vertex_count});
  const auto k = measured.degree();
  out.fields.push_back(
      {"degree", predicted.degree.str(),
       k ? std::to_string(*k) : "irregular " + hist_keys(measured.census.degrees),
       k && predicted.degree == *k});
  out.fields.push_back({"adjacent_common_neighbors",
                        set_string(predicted.adjacent_values),
                        hist_keys(measured.census.adjacent),
                        subset(measured.census.adjacent,
                               predicted.adjacent_values)});
  const Histogram non = measured.census.nonadjacent();
  out.fields.push_back({"nonadjacent_common_neighbors",
                        set_string(predicted.nonadjacent_values),
                        hist_keys(non),
                        subset(non, predicted.nonadjacent_values)});
  out.pass = true;
  for (const auto &f : out.fields)
    out.pass = out.pass && f.pass;
  return out;
}

SubVerification verify_sub(const OrthoGraph &g, int index) {
  return compare_sub(predict_sub(g.spec(), index),
                     census(subconstituent(g, index)));
}

} // namespace orthograph
