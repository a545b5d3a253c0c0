#include "orthograph/ring.hpp"

#include "orthograph/errors.hpp"

#include <string>

namespace orthograph {

RingParams::RingParams(int n) : n_(n) {
  if (n < 1 || n > kMaxRingExponent)
    throw ConfigError("ring exponent n must lie in [1, " +
                      std::to_string(kMaxRingExponent) + "], got " +
                      std::to_string(n));
}

RingElem::RingElem(Residue value, RingParams params)
    : value_(params.reduce(value)), params_(params) {}

namespace {

void require_same(const RingElem &x, const RingElem &y) {
  if (x.params() != y.params())
    throw UsageError("ring elements belong to different rings");
}

} // namespace

RingElem add(const RingElem &x, const RingElem &y) {
  require_same(x, y);
  return {x.value() + y.value(), x.params()};
}

RingElem sub(const RingElem &x, const RingElem &y) {
  require_same(x, y);
  return {x.value() + x.params().modulus() - y.value(), x.params()};
}

RingElem mul(const RingElem &x, const RingElem &y) {
  require_same(x, y);
  return {static_cast<Residue>(std::uint64_t{x.value()} * y.value()),
          x.params()};
}

Residue inverse(Residue x, const RingParams &params) {
  x = params.reduce(x);
  if (!is_unit(x))
    throw DomainError("cannot invert even residue " + std::to_string(x) +
                      " modulo 2^" + std::to_string(params.n()));
  // Newton-Hensel: each step doubles the number of correct low bits.
  std::uint32_t y = x; // correct to 3 bits since x*x = 1 mod 8 for odd x
  for (int bits = 3; bits < params.n(); bits *= 2)
    y *= 2u - x * y;
  return params.reduce(y);
}

RingElem inv(const RingElem &x) {
  return {inverse(x.value(), x.params()), x.params()};
}

} // namespace orthograph
