#include <doctest.h>

#include "orthograph/errors.hpp"
#include "orthograph/formulas.hpp"

using namespace orthograph;

TEST_CASE("rational exponents cancel before evaluation") {
  const auto half = Pow2Sum::pow2(Exponent(1, 2));
  CHECK((half * half).evaluate() == 2);
  CHECK((half - half).evaluate() == 0);
  CHECK((Pow2Sum::pow2(Exponent(5)) + Pow2Sum::constant(3)).evaluate() == 35);
  const auto before = integrality_violations();
  CHECK_THROWS_AS(half.evaluate(), InvariantError);
  CHECK_THROWS_AS(Pow2Sum::pow2(Exponent(-1)).evaluate(), InvariantError);
  CHECK(integrality_violations() == before + 2);
}

TEST_CASE("residue field values") {
  // Rook graph 3x3, symplectic graph on 15 points, Schlafli graph.
  struct Row {
    int nu, delta;
    int v, k, lambda, mu;
  };
  for (const Row &r : {Row{2, 0, 9, 4, 1, 2}, Row{2, 1, 15, 8, 4, 4},
                       Row{2, 2, 27, 16, 10, 8}}) {
    const TheoremPrediction p = predict_main(FormSpec(1, r.nu, r.delta));
    CHECK(p.residue_vertex_count == r.v);
    CHECK(p.residue_degree == r.k);
    CHECK(*p.residue_lambda == r.lambda);
    CHECK(*p.residue_mu == r.mu);
    CHECK(p.vertex_count == r.v);
    CHECK(p.lambda == r.lambda);
    CHECK(*p.c1 == r.mu);
  }
}

TEST_CASE("main predictions on small cases") {
  const TheoremPrediction oct = predict_main(FormSpec(2, 1, 1), BigInt(6));
  CHECK(oct.branch == MainBranch::NuOne);
  CHECK(oct.vertex_count == 6);
  CHECK(oct.degree == 4);
  CHECK(oct.lambda == 2);
  CHECK(*oct.mu == 4);
  CHECK(*oct.chromatic == 3);
  CHECK(*oct.aut_order == 48); // 3! * (2!)^3

  const TheoremPrediction p2 = predict_main(FormSpec(3, 1, 0));
  CHECK(p2.branch == MainBranch::DegeneratePath);
  CHECK(p2.vertex_count == 2);
  CHECK(*p2.mu == 0);

  const TheoremPrediction q = predict_main(FormSpec(2, 2, 0));
  CHECK(q.vertex_count == 36);
  CHECK(q.fiber_size == 4);
  CHECK(q.degree == 16);
  CHECK(q.lambda == 4);
  CHECK(*q.c1 == 8);
  CHECK(*q.c2 == 16);
  CHECK(*q.lambda_expanded == q.lambda);
  CHECK(*q.chromatic == 3);
  CHECK_FALSE(predict_main(FormSpec(1, 3, 0)).chromatic);
}

TEST_CASE("dual lambda forms agree on a wide grid") {
  for (int n = 1; n <= 8; ++n)
    for (int nu = 2; nu <= 6; ++nu)
      for (int delta = 0; delta <= 2; ++delta) {
        const TheoremPrediction p = predict_main(FormSpec(n, nu, delta));
        REQUIRE(p.lambda == *p.lambda_expanded);
        REQUIRE(*p.c2 == p.degree);
      }
}

TEST_CASE("subconstituent predictions exist only for nu >= 2") {
  CHECK_FALSE(predict_sub(FormSpec(2, 1, 1), 1).covered());
  const auto s1 = predict_sub(FormSpec(1, 2, 0), 1);
  CHECK(s1.branch == SubBranch::FirstEvenDelta);
  CHECK(s1.vertex_count == 4);
  const auto s2 = predict_sub(FormSpec(1, 2, 2), 2);
  CHECK(s2.branch == SubBranch::SecondEvenDeltaNuTwo);
  CHECK(s2.vertex_count == 10);
  CHECK(predict_sub(FormSpec(1, 3, 1), 2).branch ==
        SubBranch::SecondOddDeltaHigher);
  CHECK_THROWS(predict_sub(FormSpec(1, 2, 0), 3));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}
