#include "orthograph/projective.hpp"

#include "orthograph/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <omp.h>

namespace orthograph {

ProjPoint canonicalize(const FormSpec &spec, std::span<const Residue> a) {
  if (a.size() != static_cast<std::size_t>(spec.dim()))
    throw UsageError("tuple length does not match dimension");
  const auto first =
      std::find_if(a.begin(), a.end(), [](Residue x) { return is_unit(x); });
  if (first == a.end())
    throw DomainError("tuple has no unit coordinate");
  const std::uint64_t scale = inverse(*first, spec.ring());
  ProjPoint p;
  p.rep.reserve(a.size());
  for (Residue x : a)
    p.rep.push_back(spec.ring().reduce(scale * x));
  return p;
}

PointSet::PointSet(FormSpec spec, std::vector<Residue> coords)
    : spec_(spec), coords_(std::move(coords)),
      size_(coords_.size() / spec_.dim()) {}

std::ptrdiff_t PointSet::find(std::span<const Residue> rep) const {
  std::size_t lo = 0, hi = size_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), rep.begin(),
                                     rep.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size_ && std::ranges::equal((*this)[lo], rep))
    return static_cast<std::ptrdiff_t>(lo);
  return -1;
}

std::uint64_t predicted_vertex_count(const FormSpec &spec) {
  const int n = spec.n(), nu = spec.nu(), delta = spec.delta();
  const long double count =
      std::ldexp(1.0L, (n - 1) * (2 * nu + delta - 2)) *
      (std::ldexp(1.0L, nu) - 1) * (std::ldexp(1.0L, nu + delta - 1) + 1);
  if (count >= 1.8e19L)
    return UINT64_MAX;
  return static_cast<std::uint64_t>(count);
}

namespace {

// One stratum: canonical tuples whose first unit coordinate sits at `lead`.
// Coordinates before `lead` are even, `lead` holds 1, later ones are free.
// When the lead has a hyperbolic partner, Q is affine in the partner with
// coefficient 1, so the partner is solved rather than scanned.
void enumerate_stratum(const FormSpec &spec, int lead,
                       std::vector<Residue> &out) {
  const int dim = spec.dim(), nu = spec.nu(), n = spec.n();
  const RingParams &ring = spec.ring();
  int partner = -1;
  if (lead < 2 * nu)
    partner = lead < nu ? lead + nu : lead - nu;

  std::vector<int> free;
  std::vector<std::uint64_t> radix;
  for (int i = 0; i < dim; ++i) {
    if (i == lead || i == partner)
      continue;
    free.push_back(i);
    radix.push_back(i < lead ? (std::uint64_t{1} << (n - 1))
                             : (std::uint64_t{1} << n));
  }
  const std::uint64_t total = std::accumulate(
      radix.begin(), radix.end(), std::uint64_t{1}, std::multiplies<>());

#pragma omp parallel
  {
    std::vector<Residue> local;
    std::vector<Residue> a(dim, 0);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      std::uint64_t rest = static_cast<std::uint64_t>(idx);
      for (std::size_t k = free.size(); k-- > 0;) {
        const Residue digit = static_cast<Residue>(rest % radix[k]);
        rest /= radix[k];
        a[free[k]] = free[k] < lead ? 2 * digit : digit;
      }
      a[lead] = 1;
      if (partner >= 0) {
        a[partner] = 0;
        const Residue solved = ring.reduce(ring.modulus() - qform_raw(spec, a.data()));
        if (partner < lead && is_unit(solved))
          continue; // partner must stay even ahead of the lead
        a[partner] = solved;
      } else if (qform_raw(spec, a.data()) != 0) {
        continue;
      }
      local.insert(local.end(), a.begin(), a.end());
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
}

} // namespace

PointSet enumerate_vertices(const FormSpec &spec, std::uint64_t cap) {
  const std::uint64_t predicted = predicted_vertex_count(spec);
  if (predicted > cap)
    throw ResourceError("predicted vertex count " + std::to_string(predicted) +
                            " exceeds cap " + std::to_string(cap) + " for " +
                            spec.label(),
                        predicted);
  const int dim = spec.dim();
  std::vector<Residue> raw;
  for (int lead = 0; lead < dim; ++lead)
    enumerate_stratum(spec, lead, raw);

  const std::size_t count = raw.size() / dim;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::lexicographical_compare(raw.begin() + x * dim,
                                        raw.begin() + (x + 1) * dim,
                                        raw.begin() + y * dim,
                                        raw.begin() + (y + 1) * dim);
  });
  std::vector<Residue> sorted;
  sorted.reserve(raw.size());
  for (std::size_t i : order)
    sorted.insert(sorted.end(), raw.begin() + i * dim,
                  raw.begin() + (i + 1) * dim);
  return PointSet(spec, std::move(sorted));
}

bool unit_position_check(const FormSpec &spec, std::span<const Residue> rep) {
  return std::any_of(rep.begin(), rep.begin() + 2 * spec.nu(),
                     [](Residue x) { return is_unit(x); });
}

} // namespace orthograph
