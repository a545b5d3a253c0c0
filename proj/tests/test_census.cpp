#include <doctest.h>

#include "orthograph/census.hpp"

using namespace orthograph;

namespace {

BitMatrix cycle(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.set_symmetric(i, (i + 1) % n);
  return m;
}

BitMatrix complete(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m.set_symmetric(i, j);
  return m;
}

std::vector<int> singletons(std::size_t n) {
  std::vector<int> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = static_cast<int>(i);
  return g;
}

} // namespace

TEST_CASE("classification of reference graphs") {
  const auto c5 = census(cycle(5), singletons(5));
  CHECK(c5.classification == Classification::SRG);
  CHECK(c5.describe() == "SRG(5,2,0,1)");
  CHECK(c5.edge_count() == 5);

  CHECK(census(complete(4), singletons(4)).classification ==
        Classification::Complete);

  // C6 has non-adjacent pairs with 0 and 2 common neighbours.
  const auto c6 = census(cycle(6), singletons(6));
  CHECK(c6.classification == Classification::QSRG);

  BitMatrix p3(3);
  p3.set_symmetric(0, 1);
  p3.set_symmetric(1, 2);
  CHECK(census(p3, singletons(3)).classification == Classification::Irregular);
  CHECK_FALSE(census(p3, singletons(3)).degree());
}

TEST_CASE("group labels split non-adjacent pairs") {
  // K_{2,2,2}: parts are the groups.
  BitMatrix m(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (i / 2 != j / 2)
        m.set_symmetric(i, j);
  const std::vector<int> parts{0, 0, 1, 1, 2, 2};
  const auto c = census(m, parts);
  CHECK(c.census.nonadjacent_same == Histogram{{4, 3}});
  CHECK(c.census.nonadjacent_cross.empty());
  CHECK(c.census.adjacent == Histogram{{2, 12}});
}
