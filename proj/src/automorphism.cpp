#include "orthograph/automorphism.hpp"

#include "bitset_ops.hpp"
#include "orthograph/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace orthograph {

using detail::Bits;

bool is_automorphism(const BitMatrix &adj, std::span<const std::size_t> perm) {
  const std::size_t n = adj.size();
  if (perm.size() != n)
    return false;
  std::vector<bool> seen(n, false);
  for (std::size_t x : perm) {
    if (x >= n || seen[x])
      return false;
    seen[x] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (adj.test(u, v) != adj.test(perm[u], perm[v]))
        return false;
  return true;
}

namespace {

// Ordered partition of the vertex set. Cells are contiguous ranges of
// `elems`, identified by their start position.
class Partition {
public:
  Partition(std::size_t n, std::span<const int> colors)
      : elems_(n), pos_(n), start_of_(n), end_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), std::size_t{0});
    if (!colors.empty())
      std::stable_sort(elems_.begin(), elems_.end(),
                       [&](std::size_t a, std::size_t b) {
                         return colors[a] < colors[b];
                       });
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && !colors.empty() &&
          colors[elems_[i]] != colors[elems_[i - 1]])
        s = i;
      start_of_[elems_[i]] = s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      pos_[elems_[i]] = i;
      end_[start_of_[elems_[i]]] = std::max(end_[start_of_[elems_[i]]], i + 1);
    }
  }

  std::size_t size() const { return elems_.size(); }
  std::size_t elem(std::size_t i) const { return elems_[i]; }
  std::size_t cell_start(std::size_t v) const { return start_of_[v]; }
  std::size_t cell_end(std::size_t start) const { return end_[start]; }

  bool discrete() const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (end_[start_of_[elems_[i]]] - start_of_[elems_[i]] > 1)
        return false;
    return true;
  }

  /// Start of the first cell with more than one element, or size().
  std::size_t first_nonsingleton() const {
    for (std::size_t s = 0; s < elems_.size(); s = end_[s])
      if (end_[s] - s > 1)
        return s;
    return elems_.size();
  }

  std::vector<std::size_t> cell_members(std::size_t start) const {
    return {elems_.begin() + start, elems_.begin() + end_[start]};
  }

  /// Cell boundaries, used to compare two partitions positionally.
  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < elems_.size(); i = end_[i])
      s.push_back(end_[i]);
    return s;
  }

  /// Moves v to the front of its cell as a singleton, then refines.
  Partition individualize(std::size_t v, const BitMatrix &adj) const {
    Partition p = *this;
    const std::size_t s = p.start_of_[v], e = p.end_[s];
    if (e - s > 1) {
      const std::size_t i = p.pos_[v];
      std::swap(p.elems_[s], p.elems_[i]);
      p.pos_[p.elems_[i]] = i;
      p.pos_[v] = s;
      p.end_[s] = s + 1;
      p.end_[s + 1] = e;
      for (std::size_t k = s + 1; k < e; ++k)
        p.start_of_[p.elems_[k]] = s + 1;
      p.refine(adj, {s, s + 1});
    }
    return p;
  }

  /// Refines to the coarsest equitable partition finer than this one,
  /// processing splitters in a label-independent order.
  void refine(const BitMatrix &adj, std::deque<std::size_t> queue) {
    const std::size_t n = elems_.size();
    std::vector<bool> queued(n, false);
    for (std::size_t s : queue)
      queued[s] = true;
    std::vector<std::size_t> counts(n, 0);
    Bits splitter = detail::make_bits(n);
    while (!queue.empty()) {
      const std::size_t sp = queue.front();
      queue.pop_front();
      queued[sp] = false;
      std::fill(splitter.begin(), splitter.end(), 0);
      for (std::size_t k = sp; k < end_[sp]; ++k)
        detail::set_bit(splitter, elems_[k]);
      for (std::size_t s = 0; s < n;) {
        const std::size_t e = end_[s];
        if (e - s == 1) {
          s = e;
          continue;
        }
        bool uniform = true;
        for (std::size_t k = s; k < e; ++k) {
          const auto row = adj.row(elems_[k]);
          std::size_t c = 0;
          for (std::size_t w = 0; w < splitter.size(); ++w)
            c += std::popcount(row[w] & splitter[w]);
          counts[elems_[k]] = c;
          uniform = uniform && c == counts[elems_[s]];
        }
        if (!uniform) {
          std::stable_sort(elems_.begin() + s, elems_.begin() + e,
                           [&](std::size_t a, std::size_t b) {
                             return counts[a] < counts[b];
                           });
          std::size_t part = s;
          for (std::size_t k = s; k < e; ++k) {
            pos_[elems_[k]] = k;
            if (k > s && counts[elems_[k]] != counts[elems_[k - 1]]) {
              end_[part] = k;
              part = k;
            }
            start_of_[elems_[k]] = part;
          }
          end_[part] = e;
          for (std::size_t q = s; q < e; q = end_[q])
            if (!queued[q]) {
              queued[q] = true;
              queue.push_back(q);
            }
        }
        s = e;
      }
    }
  }

private:
  std::vector<std::size_t> elems_;
  std::vector<std::size_t> pos_;
  std::vector<std::size_t> start_of_;
  std::vector<std::size_t> end_; // valid at cell starts
};

class AutSearch {
public:
  AutSearch(const BitMatrix &adj, const AutBudget &budget)
      : adj_(adj), budget_(budget) {}

  AutGroupResult run(std::span<const int> colors) {
    AutGroupResult r;
    r.method = "full-search";
    const std::size_t n = adj_.size();
    Partition p(n, colors);
    std::deque<std::size_t> all;
    for (std::size_t s = 0; s < n; s = p.cell_end(s))
      all.push_back(s);
    p.refine(adj_, all);

    BigInt order = 1;
    while (!p.discrete()) {
      const std::size_t cell = p.first_nonsingleton();
      const auto members = p.cell_members(cell);
      const std::size_t v = members.front();
      const Partition left = p.individualize(v, adj_);
      std::vector<Permutation> level;
      std::vector<bool> in_orbit(n, false);
      in_orbit[v] = true;
      std::size_t orbit = 1;
      for (std::size_t w : members) {
        if (in_orbit[w])
          continue;
        const Partition right = p.individualize(w, adj_);
        Permutation perm;
        if (left.shape() == right.shape() && search(left, right, perm)) {
          level.push_back(perm);
          r.generators.push_back(perm);
          orbit = close_orbit(v, level, in_orbit);
        }
        if (aborted_)
          break;
      }
      if (aborted_)
        break;
      order *= orbit;
      p = left;
    }
    r.nodes = nodes_;
    if (aborted_)
      return r;
    r.complete = true;
    r.order = order;
    return r;
  }

private:
  bool search(const Partition &left, const Partition &right,
              Permutation &perm) {
    if (++nodes_ > budget_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (left.discrete()) {
      perm.assign(left.size(), 0);
      for (std::size_t i = 0; i < left.size(); ++i)
        perm[left.elem(i)] = right.elem(i);
      return is_automorphism(adj_, perm);
    }
    const std::size_t cell = left.first_nonsingleton();
    const Partition next_left = left.individualize(left.elem(cell), adj_);
    const auto shape = next_left.shape();
    for (std::size_t y : right.cell_members(cell)) {
      const Partition next_right = right.individualize(y, adj_);
      if (next_right.shape() != shape)
        continue;
      if (search(next_left, next_right, perm))
        return true;
      if (aborted_)
        return false;
    }
    return false;
  }

  static std::size_t close_orbit(std::size_t v,
                                 const std::vector<Permutation> &gens,
                                 std::vector<bool> &in_orbit) {
    std::fill(in_orbit.begin(), in_orbit.end(), false);
    std::vector<std::size_t> stack{v};
    in_orbit[v] = true;
    std::size_t size = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto &g : gens)
        if (!in_orbit[g[x]]) {
          in_orbit[g[x]] = true;
          ++size;
          stack.push_back(g[x]);
        }
    }
    return size;
  }

  const BitMatrix &adj_;
  AutBudget budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

// Orbits of the generated group on vertices and on the arc set.
void fill_transitivity(const BitMatrix &adj, AutGroupResult &r) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : r.generators)
    for (std::size_t x = 0; x < n; ++x)
      parent[find(x)] = find(g[x]);
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < n; ++x)
    orbits += find(x) == x;
  r.vertex_orbits = orbits;
  r.vertex_transitive = orbits <= 1;

  std::uint64_t arcs = 0;
  std::size_t first_u = n, first_v = n;
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t deg = adj.row_count(u);
    arcs += deg;
    if (deg > 0 && first_u == n) {
      first_u = u;
      first_v = adj.row_indices(u).front();
    }
  }
  r.arc_count = arcs;
  if (arcs == 0) {
    r.arc_orbit_size = 0;
    r.arc_transitive = true;
    return;
  }
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> stack{first_u * n + first_v};
  seen[stack.back()] = true;
  std::uint64_t size = 1;
  while (!stack.empty()) {
    const std::size_t arc = stack.back();
    stack.pop_back();
    const std::size_t u = arc / n, v = arc % n;
    for (const auto &g : r.generators) {
      const std::size_t img = g[u] * n + g[v];
      if (!seen[img]) {
        seen[img] = true;
        ++size;
        stack.push_back(img);
      }
    }
  }
  r.arc_orbit_size = size;
  r.arc_transitive = size == arcs;
}

} // namespace

AutGroupResult automorphisms(const BitMatrix &adj, const AutBudget &budget,
                             std::span<const int> colors) {
  if (!colors.empty() && colors.size() != adj.size())
    throw UsageError("colour count does not match vertex count");
  if (adj.size() > budget.max_vertices)
    throw ResourceError("graph exceeds the automorphism search budget",
                        adj.size());
  AutGroupResult r = AutSearch(adj, budget).run(colors);
  if (!r.complete)
    return r;
  for (const auto &g : r.generators)
    if (!is_automorphism(adj, g))
      throw InvariantError("automorphism search emitted a non-automorphism");
  if (!colors.empty())
    for (const auto &g : r.generators)
      for (std::size_t x = 0; x < g.size(); ++x)
        if (colors[x] != colors[g[x]])
          throw InvariantError("automorphism search broke a colour class");
  fill_transitivity(adj, r);
  return r;
}

AutGroupResult automorphisms_by_twins(const BitMatrix &adj,
                                      const AutBudget &budget) {
  const auto classes = detail::twin_classes(adj);
  std::vector<std::size_t> reps;
  std::vector<int> sizes;
  for (const auto &c : classes) {
    reps.push_back(c.front());
    sizes.push_back(static_cast<int>(c.size()));
  }
  const BitMatrix quotient = adj.induced(reps);
  // Generators of the result act on the quotient (one vertex per class).
  AutGroupResult q = automorphisms(quotient, budget, sizes);
  q.method = "twin-reduction";
  if (!q.complete)
    return q;
  for (const auto &c : classes)
    q.order *= factorial(c.size());
  // Within-class permutations act transitively on each class and on the
  // arcs between two classes, so orbits are those of the quotient.
  std::uint64_t arcs = 0, orbit_arcs = 0;
  for (std::size_t u = 0; u < quotient.size(); ++u)
    for (std::size_t v : quotient.row_indices(u))
      arcs += std::uint64_t(classes[u].size()) * classes[v].size();
  orbit_arcs = q.arc_transitive ? arcs : 0;
  q.arc_count = arcs;
  q.arc_orbit_size = orbit_arcs;
  return q;
}

bool fiber_wreath_check(const OrthoGraph &g) {
  const BitMatrix &adj = g.adjacency();
  for (const auto &fiber : g.fibers())
    for (std::size_t k = 1; k < fiber.size(); ++k) {
      const auto a = adj.row(fiber[0]);
      const auto b = adj.row(fiber[k]);
      if (!std::equal(a.begin(), a.end(), b.begin()))
        return false;
    }
  return true;
}

Permutation lift_automorphism(const OrthoGraph &g,
                              std::span<const std::size_t> residue_perm) {
  const auto &fibers = g.fibers();
  if (residue_perm.size() != fibers.size())
    throw UsageError("residue permutation has the wrong length");
  Permutation out(g.size());
  for (std::size_t a = 0; a < fibers.size(); ++a) {
    const auto &src = fibers[a];
    const auto &dst = fibers[residue_perm[a]];
    if (src.size() != dst.size())
      throw InvariantError("fibres of unequal size");
    for (std::size_t k = 0; k < src.size(); ++k)
      out[src[k]] = dst[k];
  }
  return out;
}

} // namespace orthograph
