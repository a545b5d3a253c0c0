#include <doctest.h>

#include "orthograph/errors.hpp"
#include "orthograph/subconstituent.hpp"

using namespace orthograph;

TEST_CASE("subconstituents partition the vertices around the base") {
  for (const FormSpec &s : {FormSpec(1, 2, 1), FormSpec(2, 2, 0),
                            FormSpec(2, 2, 2), FormSpec(2, 1, 2)}) {
    CAPTURE(s.label());
    const OrthoGraph g = build_graph(s);
    const std::size_t e1 = base_vertex(g);
    CHECK(g.vertices()[e1][0] == 1);
    for (int k = 1; k < s.dim(); ++k)
      CHECK(g.vertices()[e1][k] == 0);

    const Subconstituent s1 = subconstituent(g, 1);
    const Subconstituent s2 = subconstituent(g, 2);
    CHECK(s1.ids == neighbors(g, e1));
    CHECK(s1.ids.size() + s2.ids.size() + 1 == g.size());
    for (std::size_t v : s2.ids) {
      CHECK(v != e1);
      CHECK_FALSE(g.adjacent(v, e1));
    }
    for (std::size_t i = 0; i < s2.ids.size(); ++i)
      for (std::size_t j = 0; j < s2.ids.size(); ++j)
        REQUIRE(s2.adjacency.test(i, j) == g.adjacent(s2.ids[i], s2.ids[j]));

    const std::size_t f = g.fibers()[g.residue_labels()[e1]].size();
    const Subconstituent lifted = second_without_base_fiber(g);
    CHECK(lifted.ids.size() + f - 1 == s2.ids.size());
    CHECK(distance_check(g, e1).nonadjacent_is_distance_two);
  }
}

TEST_CASE("degenerate path is flagged") {
  const OrthoGraph g = build_graph(FormSpec(2, 1, 0));
  const DistanceCheck d = distance_check(g, base_vertex(g));
  CHECK(d.degenerate_path);
  CHECK(subconstituent(g, 2).ids.empty());
}

TEST_CASE("residue-field subconstituents match the predictions for even delta") {
  for (int delta : {0, 2})
    for (int nu : {2, 3})
      for (int i : {1, 2}) {
        const FormSpec s(1, nu, delta);
        CAPTURE(s.label());
        CAPTURE(i);
        const OrthoGraph g = build_graph(s);
        CHECK(verify_sub(g, i).pass);
      }
}

TEST_CASE("census is independent of the base vertex") {
  const OrthoGraph g = build_graph(FormSpec(2, 2, 0));
  const std::string ref = census(subconstituent(g, 1)).describe();
  for (std::size_t b = 0; b < g.size(); b += 5)
    CHECK(census(subconstituent(g, 1, b)).describe() == ref);
  CHECK_THROWS_AS(subconstituent(g, 3), UsageError);
  CHECK_THROWS_AS(subconstituent(g, 1, g.size()), UsageError);
}
