#pragma once

#include "orthograph/ring.hpp"

#include <span>
#include <string>
#include <vector>

namespace orthograph {

/// The configuration (n, nu, delta, z) of one orthogonal graph. Tuples have
/// length dim() = 2*nu + delta.
class FormSpec {
public:
  FormSpec(int n, int nu, int delta, Residue z = 1);

  int n() const noexcept { return ring_.n(); }
  int nu() const noexcept { return nu_; }
  int delta() const noexcept { return delta_; }
  /// Only meaningful when delta == 2; reported as 1 otherwise.
  Residue z() const noexcept { return z_; }
  int dim() const noexcept { return 2 * nu_ + delta_; }
  const RingParams &ring() const noexcept { return ring_; }

  /// Same (nu, delta) over the residue field Z_2, with z projected.
  FormSpec residue_spec() const;

  std::string label() const;

  friend bool operator==(const FormSpec &, const FormSpec &) = default;

private:
  RingParams ring_;
  int nu_;
  int delta_;
  Residue z_;
};

/// Dense dim x dim Gram matrix, row-major.
struct GramMatrix {
  int dim = 0;
  std::vector<Residue> entries;

  Residue at(int row, int col) const { return entries[row * dim + col]; }
};

GramMatrix gram_matrix(const FormSpec &spec);

/// Q(a) = a G a^t, evaluated by sparse expansion of the block structure.
Residue qform(const FormSpec &spec, std::span<const Residue> a);

/// B(a, b) = a (G + G^t) b^t.
Residue bform(const FormSpec &spec, std::span<const Residue> a,
              std::span<const Residue> b);

/// Unchecked variants for inner loops; caller guarantees lengths.
Residue qform_raw(const FormSpec &spec, const Residue *a) noexcept;
Residue bform_raw(const FormSpec &spec, const Residue *a,
                  const Residue *b) noexcept;

} // namespace orthograph
