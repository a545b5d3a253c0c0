#include <doctest.h>

#include "orthograph/errors.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/kernels.hpp"

#include <cstdlib>
#include <omp.h>

using namespace orthograph;

TEST_CASE("parallel kernels equal their serial references") {
  for (const FormSpec &s : {FormSpec(1, 3, 2), FormSpec(2, 2, 1),
                            FormSpec(3, 2, 0), FormSpec(2, 2, 2, 3)}) {
    CAPTURE(s.label());
    const PointSet pts = enumerate_vertices(s);
    const BitMatrix serial = fill_adjacency_serial(pts);
    const OrthoGraph g = build_graph(s);
    const auto labels = g.residue_labels();
    const PairCensus ref = pair_census_serial(serial, labels);
    for (int threads : {1, 2, 3}) {
      omp_set_num_threads(threads);
      REQUIRE(fill_adjacency(pts) == serial);
      REQUIRE(pair_census(serial, labels) == ref);
    }
    CHECK(g.adjacency() == serial);
  }
}

TEST_CASE("thread bound from the environment") {
  setenv("ORTHOGRAPH_THREADS", "2", 1);
  CHECK(configure_threads() == 2);
  setenv("ORTHOGRAPH_THREADS", "0", 1);
  CHECK_THROWS_AS(configure_threads(), ConfigError);
  setenv("ORTHOGRAPH_THREADS", "many", 1);
  CHECK_THROWS_AS(configure_threads(), ConfigError);
  unsetenv("ORTHOGRAPH_THREADS");
}
