#include <doctest.h>

#include "orthograph/errors.hpp"
#include "orthograph/ring.hpp"

using namespace orthograph;

TEST_CASE("ring params validate the exponent") {
  CHECK_THROWS_AS(RingParams(0), ConfigError);
  CHECK_THROWS_AS(RingParams(kMaxRingExponent + 1), ConfigError);
  const RingParams r(3);
  CHECK(r.modulus() == 8);
  CHECK(r.reduce(13) == 5);
}

TEST_CASE("inverse is exact for every odd residue") {
  for (int n = 1; n <= kMaxRingExponent; ++n) {
    const RingParams r(n);
    const Residue step = n > 10 ? 997 : 1; // sample the large rings
    for (Residue x = 1; x < r.modulus(); x += 2 * step)
      REQUIRE(r.reduce(std::uint64_t{x} * inverse(x, r)) == 1);
  }
}

TEST_CASE("inverting a non-unit is a domain error") {
  const RingParams r(4);
  CHECK_THROWS_AS(inverse(6, r), DomainError);
  CHECK_THROWS_AS(inv(RingElem(0, r)), DomainError);
}

TEST_CASE("ring element arithmetic") {
  const RingParams r(3);
  const RingElem a(5, r), b(7, r);
  CHECK(add(a, b).value() == 4);
  CHECK(sub(a, b).value() == 6);
  CHECK(mul(a, b).value() == 3);
  CHECK(mul(a, inv(a)).value() == 1);
  CHECK(is_unit(a));
  CHECK(in_ideal(RingElem(2, r)));
  CHECK(project(a) == 1);
  CHECK_THROWS_AS(add(a, RingElem(1, RingParams(2))), UsageError);
}
