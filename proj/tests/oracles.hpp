#pragma once
// Naive reference implementations. They share nothing with the library
// except the FormSpec parameter type and are only usable on tiny inputs.

#include "orthograph/bitmatrix.hpp"
#include "orthograph/forms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<std::uint64_t>;

inline std::uint64_t modulus(const orthograph::FormSpec &s) {
  return std::uint64_t{1} << s.n();
}

/// Dense Gram matrix written out from the block definition.
inline std::vector<std::vector<std::uint64_t>>
gram(const orthograph::FormSpec &s) {
  const int d = s.dim(), nu = s.nu();
  std::vector<std::vector<std::uint64_t>> g(d, std::vector<std::uint64_t>(d));
  for (int i = 0; i < nu; ++i)
    g[i][nu + i] = 1;
  if (s.delta() == 1)
    g[2 * nu][2 * nu] = 1;
  if (s.delta() == 2) {
    g[2 * nu][2 * nu] = s.z();
    g[2 * nu][2 * nu + 1] = 1;
    g[2 * nu + 1][2 * nu + 1] = s.z();
  }
  return g;
}

inline std::uint64_t form(const orthograph::FormSpec &s, const Tuple &a,
                          const Tuple &b, bool symmetrised) {
  const auto g = gram(s);
  const std::uint64_t m = modulus(s);
  std::uint64_t acc = 0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) {
      const std::uint64_t gij = symmetrised ? g[i][j] + g[j][i] : g[i][j];
      acc = (acc + a[i] * gij % m * b[j]) % m;
    }
  return acc;
}

inline std::uint64_t Q(const orthograph::FormSpec &s, const Tuple &a) {
  return form(s, a, a, false);
}
inline std::uint64_t B(const orthograph::FormSpec &s, const Tuple &a,
                       const Tuple &b) {
  return form(s, a, b, true);
}

/// Lexicographically smallest unit multiple: a class representative chosen
/// differently from the library's.
inline Tuple orbit_min(const orthograph::FormSpec &s, const Tuple &a) {
  const std::uint64_t m = modulus(s);
  Tuple best = a;
  for (std::uint64_t u = 1; u < m; u += 2) {
    Tuple t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      t[i] = a[i] * u % m;
    best = std::min(best, t);
  }
  return best;
}

inline Tuple to_tuple(std::span<const orthograph::Residue> a) {
  return Tuple(a.begin(), a.end());
}

/// All classes [a] with a unit coordinate and Q(a) = 0, by scanning every
/// tuple of the ambient module.
inline std::set<Tuple> vertices(const orthograph::FormSpec &s) {
  const std::uint64_t m = modulus(s);
  const int d = s.dim();
  std::set<Tuple> out;
  Tuple a(d, 0);
  while (true) {
    const bool has_unit =
        std::any_of(a.begin(), a.end(), [](auto x) { return x & 1; });
    if (has_unit && Q(s, a) == 0)
      out.insert(orbit_min(s, a));
    int k = 0;
    while (k < d && ++a[k] == m)
      a[k++] = 0;
    if (k == d)
      break;
  }
  return out;
}

/// Chromatic number by dynamic programming over independent subsets.
inline int chromatic_number(const orthograph::BitMatrix &adj) {
  const std::size_t n = adj.size();
  if (n == 0)
    return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> independent(full + 1, 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    bool ok = independent[rest];
    for (std::size_t u = 0; ok && u < n; ++u)
      if ((rest >> u & 1) && adj.test(v, u))
        ok = false;
    independent[s] = ok;
  }
  std::vector<int> best(full + 1, 1 << 20);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s)
    for (std::uint32_t t = s; t; t = (t - 1) & s)
      if (independent[t] && (t & (s & -s)))
        best[s] = std::min(best[s], best[s ^ t] + 1);
  return best[full];
}

/// |Aut| by trying every permutation.
inline std::uint64_t automorphism_count(const orthograph::BitMatrix &adj) {
  std::vector<std::size_t> p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.size(); ++i)
      for (std::size_t j = i + 1; ok && j < p.size(); ++j)
        ok = adj.test(i, j) == adj.test(p[i], p[j]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

} // namespace oracle
