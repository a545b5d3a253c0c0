#include "orthograph/census.hpp"

#include <sstream>

namespace orthograph {

const char *to_string(Classification c) {
  switch (c) {
  case Classification::Complete:
    return "complete";
  case Classification::SRG:
    return "SRG";
  case Classification::QSRG:
    return "QSRG";
  case Classification::Regular:
    return "regular";
  case Classification::Irregular:
    return "irregular";
  }
  return "?";
}

Classification classify(const PairCensus &c) {
  if (c.degrees.size() != 1)
    return Classification::Irregular;
  const Histogram non = c.nonadjacent();
  if (non.empty())
    return Classification::Complete;
  if (c.adjacent.size() > 1)
    return Classification::Regular;
  return non.size() == 1 ? Classification::SRG : Classification::QSRG;
}

std::optional<std::uint64_t> MeasuredParams::degree() const {
  if (census.degrees.size() != 1)
    return std::nullopt;
  return census.degrees.begin()->first;
}

std::uint64_t MeasuredParams::edge_count() const {
  std::uint64_t twice = 0;
  for (const auto &[deg, count] : census.degrees)
    twice += deg * count;
  return twice / 2;
}

namespace {

std::string keys(const Histogram &h) {
  std::string s;
  for (const auto &[value, count] : h) {
    if (!s.empty())
      s += ",";
    s += std::to_string(value);
  }
  return s;
}

} // namespace

std::string MeasuredParams::describe() const {
  std::ostringstream os;
  const auto k = degree();
  switch (classification) {
  case Classification::Complete:
    os << "K" << vertex_count;
    break;
  case Classification::SRG:
    os << "SRG(" << vertex_count << "," << *k << ","
       << (census.adjacent.empty() ? std::string("-") : keys(census.adjacent))
       << "," << keys(census.nonadjacent()) << ")";
    break;
  case Classification::QSRG:
    os << "QSRG(" << vertex_count << "," << *k << ","
       << (census.adjacent.empty() ? std::string("-") : keys(census.adjacent))
       << ",{" << keys(census.nonadjacent()) << "})";
    break;
  case Classification::Regular:
    os << "regular(" << vertex_count << "," << *k << ",{"
       << keys(census.adjacent) << "},{" << keys(census.nonadjacent()) << "})";
    break;
  case Classification::Irregular:
    os << "irregular(" << vertex_count << ", degrees {" << keys(census.degrees)
       << "})";
    break;
  }
  return os.str();
}

MeasuredParams census(const BitMatrix &adj, std::span<const int> group) {
  MeasuredParams m;
  m.vertex_count = adj.size();
  m.census = pair_census(adj, group);
  m.classification = classify(m.census);
  return m;
}

MeasuredParams census(const OrthoGraph &g) {
  return census(g.adjacency(), g.residue_labels());
}

} // namespace orthograph
