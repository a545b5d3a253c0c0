#include "orthograph/forms.hpp"

#include "orthograph/errors.hpp"

#include <cstdint>

namespace orthograph {

FormSpec::FormSpec(int n, int nu, int delta, Residue z)
    : ring_(n), nu_(nu), delta_(delta), z_(1) {
  if (nu < 1)
    throw ConfigError("nu must be a positive integer, got " +
                      std::to_string(nu));
  if (delta < 0 || delta > 2)
    throw ConfigError("delta must be 0, 1 or 2, got " + std::to_string(delta));
  if (delta == 2) {
    z_ = ring_.reduce(z);
    // z outside {x^2 + x} is the same as z odd.
    if (!is_unit(z_))
      throw ConfigError("z must be a unit of Z_2^" + std::to_string(n) +
                        " when delta = 2, got " + std::to_string(z));
  }
}

FormSpec FormSpec::residue_spec() const {
  return FormSpec(1, nu_, delta_, project(z_));
}

std::string FormSpec::label() const {
  std::string s = "n=" + std::to_string(n()) + " nu=" + std::to_string(nu_) +
                  " delta=" + std::to_string(delta_);
  if (delta_ == 2)
    s += " z=" + std::to_string(z_);
  return s;
}

GramMatrix gram_matrix(const FormSpec &spec) {
  GramMatrix g;
  g.dim = spec.dim();
  g.entries.assign(static_cast<std::size_t>(g.dim) * g.dim, 0);
  auto set = [&](int r, int c, Residue v) { g.entries[r * g.dim + c] = v; };
  for (int i = 0; i < spec.nu(); ++i)
    set(i, spec.nu() + i, 1);
  const int p = 2 * spec.nu();
  if (spec.delta() == 1) {
    set(p, p, 1);
  } else if (spec.delta() == 2) {
    set(p, p, spec.z());
    set(p, p + 1, 1);
    set(p + 1, p + 1, spec.z());
  }
  return g;
}

Residue qform_raw(const FormSpec &spec, const Residue *a) noexcept {
  const int nu = spec.nu();
  std::uint64_t acc = 0;
  for (int i = 0; i < nu; ++i)
    acc += std::uint64_t{a[i]} * a[nu + i];
  const int p = 2 * nu;
  if (spec.delta() == 1) {
    acc += std::uint64_t{a[p]} * a[p];
  } else if (spec.delta() == 2) {
    const std::uint64_t x = a[p], y = a[p + 1];
    acc += spec.z() * ((x * x) & 0xffffffffu) + x * y +
           spec.z() * ((y * y) & 0xffffffffu);
  }
  return spec.ring().reduce(acc);
}

Residue bform_raw(const FormSpec &spec, const Residue *a,
                  const Residue *b) noexcept {
  const int nu = spec.nu();
  std::uint64_t acc = 0;
  for (int i = 0; i < nu; ++i)
    acc += std::uint64_t{a[i]} * b[nu + i] + std::uint64_t{a[nu + i]} * b[i];
  const int p = 2 * nu;
  if (spec.delta() == 1) {
    acc += 2 * std::uint64_t{a[p]} * b[p];
  } else if (spec.delta() == 2) {
    const std::uint64_t z2 = 2 * std::uint64_t{spec.z()};
    acc += ((z2 * a[p]) & 0xffffffffu) * b[p] +
           std::uint64_t{a[p]} * b[p + 1] + std::uint64_t{a[p + 1]} * b[p] +
           ((z2 * a[p + 1]) & 0xffffffffu) * b[p + 1];
  }
  return spec.ring().reduce(acc);
}

namespace {

void require_length(const FormSpec &spec, std::size_t len) {
  if (len != static_cast<std::size_t>(spec.dim()))
    throw UsageError("tuple length " + std::to_string(len) +
                     " does not match dimension " + std::to_string(spec.dim()));
}

} // namespace

Residue qform(const FormSpec &spec, std::span<const Residue> a) {
  require_length(spec, a.size());
  return qform_raw(spec, a.data());
}

Residue bform(const FormSpec &spec, std::span<const Residue> a,
              std::span<const Residue> b) {
  require_length(spec, a.size());
  require_length(spec, b.size());
  return bform_raw(spec, a.data(), b.data());
}

} // namespace orthograph
