#pragma once

#include <compare>
#include <cstdint>

namespace orthograph {

using Residue = std::uint32_t;

inline constexpr int kMaxRingExponent = 16;

/// Parameters of the ring Z_{2^n}.
class RingParams {
public:
  explicit RingParams(int n);

  int n() const noexcept { return n_; }
  Residue modulus() const noexcept { return Residue{1} << n_; }
  Residue mask() const noexcept { return modulus() - 1; }

  Residue reduce(std::uint64_t x) const noexcept {
    return static_cast<Residue>(x) & mask();
  }

  friend bool operator==(const RingParams &, const RingParams &) = default;

private:
  int n_;
};

/// An element of Z_{2^n} held as its canonical residue in [0, 2^n).
class RingElem {
public:
  RingElem(Residue value, RingParams params);

  Residue value() const noexcept { return value_; }
  const RingParams &params() const noexcept { return params_; }

  friend bool operator==(const RingElem &, const RingElem &) = default;

private:
  Residue value_;
  RingParams params_;
};

RingElem add(const RingElem &x, const RingElem &y);
RingElem sub(const RingElem &x, const RingElem &y);
RingElem mul(const RingElem &x, const RingElem &y);

inline bool is_unit(Residue x) noexcept { return (x & 1u) != 0; }
inline bool is_unit(const RingElem &x) noexcept { return is_unit(x.value()); }

/// Membership in the maximal ideal 2Z_{2^n}.
inline bool in_ideal(const RingElem &x) noexcept { return !is_unit(x); }

/// Multiplicative inverse of an odd residue modulo 2^n. Throws DomainError
/// for even input.
Residue inverse(Residue x, const RingParams &params);
RingElem inv(const RingElem &x);

/// Canonical projection Z_{2^n} -> Z_2.
inline Residue project(Residue x) noexcept { return x & 1u; }
inline Residue project(const RingElem &x) noexcept { return project(x.value()); }

} // namespace orthograph
