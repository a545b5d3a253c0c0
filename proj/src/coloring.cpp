#include "orthograph/coloring.hpp"

#include "bitset_ops.hpp"
#include "orthograph/automorphism.hpp"
#include "orthograph/errors.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>

namespace orthograph {

using detail::Bits;

bool is_proper_coloring(const BitMatrix &adj, std::span<const int> colors) {
  if (colors.size() != adj.size())
    return false;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (colors[i] < 0)
      return false;
    for (std::size_t j = i + 1; j < adj.size(); ++j)
      if (adj.test(i, j) && colors[i] == colors[j])
        return false;
  }
  return true;
}

std::size_t color_count(std::span<const int> colors) {
  return std::set<int>(colors.begin(), colors.end()).size();
}

std::vector<int> lift_coloring(const OrthoGraph &g,
                               std::span<const int> residue_coloring) {
  if (residue_coloring.size() != g.residue_vertices().size())
    throw UsageError("residue colouring has the wrong length");
  std::vector<int> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    out[v] = residue_coloring[g.residue_labels()[v]];
  return out;
}

namespace {

class CliqueSearch {
public:
  /// Only cliques larger than `floor` are searched for.
  CliqueSearch(const BitMatrix &adj, std::uint64_t max_nodes,
               std::size_t floor = 0)
      : adj_(adj), max_nodes_(max_nodes), floor_(floor) {}

  CliqueResult run() {
    Bits all = detail::make_bits(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i)
      detail::set_bit(all, i);
    std::vector<std::size_t> current;
    if (adj_.size() > 0)
      expand(all, current);
    return {best_, !aborted_, nodes_};
  }

private:
  void expand(Bits candidates, std::vector<std::size_t> &current) {
    if (aborted_)
      return;
    if (++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    // Greedy colouring of the candidates bounds the clique size from above.
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (detail::any(uncolored)) {
      ++color;
      Bits q = uncolored;
      while (detail::any(q)) {
        const std::size_t v = detail::first(q);
        detail::clear_bit(q, v);
        detail::and_not_row(q, adj_, v);
        detail::clear_bit(uncolored, v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= std::max(best_.size(), floor_) ||
          aborted_)
        return;
      const std::size_t v = order[i];
      current.push_back(v);
      Bits next = candidates;
      detail::and_row(next, adj_, v);
      if (!detail::any(next)) {
        if (current.size() > best_.size())
          best_ = current;
      } else {
        expand(std::move(next), current);
      }
      current.pop_back();
      detail::clear_bit(candidates, v);
    }
  }

  const BitMatrix &adj_;
  std::uint64_t max_nodes_;
  std::size_t floor_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> best_;
};

/// Greedy maximal clique, highest degree first.
std::vector<std::size_t> greedy_clique(const BitMatrix &adj) {
  std::vector<std::size_t> order(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return adj.row_count(a) > adj.row_count(b);
  });
  std::vector<std::size_t> clique;
  for (std::size_t v : order)
    if (std::all_of(clique.begin(), clique.end(),
                    [&](std::size_t u) { return adj.test(u, v); }))
      clique.push_back(v);
  return clique;
}

/// Partition of the vertices into independent sets of one fixed size. When
/// |V| = k * alpha, every k-colouring has this form. Always branches on the
/// uncovered vertex with the fewest uncovered non-neighbours.
class PartitionSearch {
public:
  PartitionSearch(const BitMatrix &adj, std::size_t block_size,
                  const ColoringBudget &budget)
      : n_(adj.size()), k_(block_size), budget_(budget),
        free_(detail::complement(adj)), color_(n_, -1) {}

  bool run() {
    start_ = std::chrono::steady_clock::now();
    Bits uncovered = detail::make_bits(n_);
    for (std::size_t v = 0; v < n_; ++v)
      detail::set_bit(uncovered, v);
    return cover(uncovered, 0);
  }

  const std::vector<int> &coloring() const { return color_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  bool tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes ||
        ((nodes_ & 1023) == 0 &&
         std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
                 .count() > budget_.max_seconds))
      aborted_ = true;
    return !aborted_;
  }

  bool cover(const Bits &uncovered, int block) {
    if (!detail::any(uncovered))
      return true;
    if (!tick())
      return false;
    // Most constrained vertex; fail early if some vertex cannot be covered.
    std::size_t pick = n_, fewest = n_ + 1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (!detail::test_bit(uncovered, v))
        continue;
      Bits room = uncovered;
      detail::and_row(room, free_, v);
      const std::size_t c = detail::count(room);
      if (c + 1 < k_)
        return false;
      if (c < fewest) {
        fewest = c;
        pick = v;
      }
    }
    Bits candidates = uncovered;
    detail::and_row(candidates, free_, pick);
    std::vector<std::size_t> members{pick};
    return extend(uncovered, candidates, members, block);
  }

  bool extend(const Bits &uncovered, Bits candidates,
              std::vector<std::size_t> &members, int block) {
    if (members.size() == k_) {
      Bits rest = uncovered;
      for (std::size_t v : members)
        detail::clear_bit(rest, v);
      if (cover(rest, block + 1)) {
        for (std::size_t v : members)
          color_[v] = block;
        return true;
      }
      return false;
    }
    const std::size_t depth = members.size();
    while (detail::any(candidates) && !aborted_) {
      // The block size is the independence number, so a candidate that is
      // compatible with every other candidate must join the block.
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t w = detail::first(candidates); w < n_;
             w = detail::next(candidates, w)) {
          Bits others = candidates;
          detail::clear_bit(others, w);
          detail::and_not_row(others, free_, w);
          if (!detail::any(others)) {
            detail::clear_bit(candidates, w);
            members.push_back(w);
            changed = true;
          }
        }
      }
      if (members.size() >= k_ || !detail::any(candidates)) {
        const bool ok = members.size() == k_ &&
                        extend(uncovered, candidates, members, block);
        members.resize(depth);
        return ok;
      }
      if (members.size() + detail::count(candidates) < k_) {
        members.resize(depth);
        return false;
      }
      const std::size_t v = detail::first(candidates);
      detail::clear_bit(candidates, v);
      Bits next = candidates;
      detail::and_row(next, free_, v);
      const std::size_t forced = members.size();
      members.push_back(v);
      if (extend(uncovered, std::move(next), members, block))
        return true;
      members.resize(forced);
      if (!tick()) {
        members.resize(depth);
        return false;
      }
    }
    members.resize(depth);
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  ColoringBudget budget_;
  BitMatrix free_;
  std::vector<int> color_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

class DsaturSearch {
public:
  DsaturSearch(const BitMatrix &adj, std::size_t max_colors)
      : adj_(adj), n_(adj.size()), max_colors_(max_colors),
        color_(n_, -1), saturation_(n_, 0),
        counts_(n_ * (max_colors + 1), 0) {
    neighbors_.reserve(n_);
    degree_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      neighbors_.push_back(adj.row_indices(v));
      degree_.push_back(neighbors_.back().size());
    }
  }

  std::vector<int> greedy() {
    std::size_t used = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      const std::size_t v = select();
      std::size_t c = 0;
      while (c < used && count(v, c) > 0)
        ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    std::vector<int> out = color_;
    for (std::size_t v = 0; v < n_; ++v)
      unassign(v, static_cast<std::size_t>(out[v]));
    return out;
  }

  /// Looks for a colouring with fewer than `best` colours, stopping at `target`.
  void search(std::size_t best, std::vector<int> best_coloring,
              std::size_t target, const ColoringBudget &budget) {
    best_ = best;
    best_coloring_ = std::move(best_coloring);
    target_ = target;
    budget_ = budget;
    start_ = std::chrono::steady_clock::now();
    if (best_ > target_)
      recurse(0, 0);
  }

  std::size_t best() const { return best_; }
  const std::vector<int> &best_coloring() const { return best_coloring_; }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  std::uint32_t &count(std::size_t v, std::size_t c) {
    return counts_[v * (max_colors_ + 1) + c];
  }

  void assign(std::size_t v, std::size_t c) {
    color_[v] = static_cast<int>(c);
    for (std::size_t u : neighbors_[v])
      if (count(u, c)++ == 0)
        ++saturation_[u];
  }

  void unassign(std::size_t v, std::size_t c) {
    color_[v] = -1;
    for (std::size_t u : neighbors_[v])
      if (--count(u, c) == 0)
        --saturation_[u];
  }

  // Highest saturation, then highest degree, then lowest id.
  std::size_t select() const {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0)
        continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && degree_[v] > degree_[best]))
        best = v;
    }
    return best;
  }

  void recurse(std::size_t colored, std::size_t used) {
    if (aborted_)
      return;
    ++nodes_;
    if (nodes_ > budget_.max_nodes ||
        ((nodes_ & 4095) == 0 &&
         std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
                 .count() > budget_.max_seconds)) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_coloring_ = color_;
      }
      return;
    }
    const std::size_t v = select();
    for (std::size_t c = 0; c <= used; ++c) {
      if (c + 1 >= best_)
        break;
      if (c < used && count(v, c) > 0)
        continue;
      assign(v, c);
      recurse(colored + 1, std::max(used, c + 1));
      unassign(v, c);
      if (best_ <= target_ || aborted_)
        return;
    }
  }

  const BitMatrix &adj_;
  std::size_t n_;
  std::size_t max_colors_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> degree_;
  std::vector<int> color_;
  std::vector<std::size_t> saturation_;
  std::vector<std::uint32_t> counts_;

  std::size_t best_ = 0;
  std::vector<int> best_coloring_;
  std::size_t target_ = 0;
  ColoringBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

/// One independent set meeting every orbit of `sigma` exactly once. Its
/// images under the powers of a semiregular `sigma` partition the vertices.
class TransversalSearch {
public:
  TransversalSearch(const BitMatrix &free, const Permutation &sigma,
                    std::uint64_t max_nodes)
      : free_(free), n_(free.size()), max_nodes_(max_nodes),
        orbit_of_(n_, -1) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (orbit_of_[v] >= 0)
        continue;
      Bits bits = detail::make_bits(n_);
      for (std::size_t u = v; orbit_of_[u] < 0; u = sigma[u]) {
        orbit_of_[u] = static_cast<int>(orbits_.size());
        detail::set_bit(bits, u);
      }
      orbits_.push_back(std::move(bits));
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    Bits candidates = detail::make_bits(n_);
    for (std::size_t v = 0; v < n_; ++v)
      detail::set_bit(candidates, v);
    std::vector<char> done(orbits_.size(), 0);
    if (choose(candidates, done))
      return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  bool choose(const Bits &candidates, std::vector<char> &done) {
    if (++nodes_ > max_nodes_)
      return false;
    std::size_t pick = orbits_.size(), fewest = n_ + 1;
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      if (done[o])
        continue;
      Bits room = candidates;
      for (std::size_t w = 0; w < room.size(); ++w)
        room[w] &= orbits_[o][w];
      const std::size_t c = detail::count(room);
      if (c == 0)
        return false;
      if (c < fewest) {
        fewest = c;
        pick = o;
      }
    }
    if (pick == orbits_.size())
      return true;
    done[pick] = 1;
    Bits room = candidates;
    for (std::size_t w = 0; w < room.size(); ++w)
      room[w] &= orbits_[pick][w];
    for (std::size_t v = detail::first(room); v < n_; v = detail::next(room, v)) {
      Bits next = candidates;
      detail::and_row(next, free_, v);
      chosen_.push_back(v);
      if (choose(next, done))
        return true;
      chosen_.pop_back();
      if (nodes_ > max_nodes_)
        break;
    }
    done[pick] = 0;
    return false;
  }

  const BitMatrix &free_;
  std::size_t n_;
  std::uint64_t max_nodes_;
  std::vector<int> orbit_of_;
  std::vector<Bits> orbits_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

Permutation compose(const Permutation &a, const Permutation &b) {
  Permutation c(a.size()); // first a, then b
  for (std::size_t v = 0; v < a.size(); ++v)
    c[v] = b[a[v]];
  return c;
}

Permutation power(const Permutation &p, std::uint64_t e) {
  Permutation result(p.size()), base = p;
  std::iota(result.begin(), result.end(), 0);
  for (; e; e >>= 1) {
    if (e & 1)
      result = compose(result, base);
    base = compose(base, base);
  }
  return result;
}

/// Order of p, or 0 if it overflows.
std::uint64_t order(const Permutation &p) {
  std::vector<char> seen(p.size(), 0);
  std::uint64_t l = 1;
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::uint64_t len = 0;
    for (std::size_t u = v; !seen[u]; u = p[u]) {
      seen[u] = 1;
      ++len;
    }
    if (len) {
      l = std::lcm(l, len);
      if (l > (std::uint64_t{1} << 40))
        return 0;
    }
  }
  return l;
}

bool semiregular(const Permutation &p, std::size_t k) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    std::size_t len = 1;
    for (std::size_t u = p[v]; u != v; u = p[u])
      if (++len > k)
        return false;
    if (len != k)
      return false;
  }
  return true;
}

/// A k-colouring into blocks of size n/k that is invariant under a
/// semiregular automorphism of order k. Group elements are sampled by
/// product replacement from a fixed seed, so the result is reproducible.
std::optional<std::vector<int>> invariant_partition(const BitMatrix &adj,
                                                    std::size_t k,
                                                    const ColoringBudget &budget,
                                                    std::uint64_t &nodes) {
  const std::size_t n = adj.size();
  if (k < 2 || n % k != 0)
    return std::nullopt;
  AutBudget ab;
  ab.max_vertices = n;
  ab.max_nodes = budget.max_nodes;
  AutGroupResult group;
  try {
    group = automorphisms(adj, ab);
  } catch (const ResourceError &) {
    return std::nullopt;
  }
  nodes += group.nodes;
  if (!group.complete || group.generators.empty())
    return std::nullopt;

  std::mt19937_64 rng(0x5eed);
  std::vector<Permutation> pool = group.generators;
  while (pool.size() < 10)
    pool.push_back(group.generators[pool.size() % group.generators.size()]);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto random_element = [&] {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i)
      j = pick(rng);
    pool[i] = compose(pool[i], pool[j]);
    return pool[i];
  };
  for (int warmup = 0; warmup < 100; ++warmup)
    random_element();

  const BitMatrix free = detail::complement(adj);
  int attempts = 0;
  for (int trial = 0; trial < 5000 && attempts < 20; ++trial) {
    const Permutation g = random_element();
    const std::uint64_t ord = order(g);
    if (ord == 0 || ord % k != 0)
      continue;
    const Permutation sigma = power(g, ord / k);
    if (!semiregular(sigma, k))
      continue;
    ++attempts;
    TransversalSearch search(free, sigma, budget.max_nodes / 20 + 1);
    const auto transversal = search.run();
    nodes += search.nodes();
    if (!transversal)
      continue;
    std::vector<int> color(n, -1);
    for (std::size_t v : *transversal) {
      std::size_t u = v;
      for (std::size_t i = 0; i < k; ++i, u = sigma[u])
        color[u] = static_cast<int>(i);
    }
    return color;
  }
  return std::nullopt;
}

} // namespace

CliqueResult max_clique(const BitMatrix &adj, std::uint64_t max_nodes) {
  return CliqueSearch(adj, max_nodes).run();
}

ColoringResult chromatic_exact(const BitMatrix &adj,
                               const ColoringBudget &budget,
                               std::span<const int> incumbent) {
  ColoringResult r;
  if (adj.size() == 0) {
    r.chromatic_number = 0;
    r.lower_bound_method = "clique";
    return r;
  }

  const auto classes = detail::twin_classes(adj);
  std::vector<std::size_t> reps;
  std::vector<std::size_t> class_of(adj.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    reps.push_back(classes[c].front());
    for (std::size_t v : classes[c])
      class_of[v] = c;
  }
  const BitMatrix reduced = adj.induced(reps);
  r.reduced_size = reduced.size();

  // Upper bound: DSATUR greedy, or the incumbent if better.
  DsaturSearch dsatur(reduced, reduced.size());
  std::vector<int> best = dsatur.greedy();
  std::size_t upper = color_count(best);
  r.upper_bound_method = "dsatur-greedy";
  if (!incumbent.empty() && is_proper_coloring(adj, incumbent)) {
    std::vector<int> seeded;
    for (std::size_t rep : reps)
      seeded.push_back(incumbent[rep]);
    // renumber densely
    std::vector<int> palette(seeded.begin(), seeded.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (int &c : seeded)
      c = static_cast<int>(
          std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    if (palette.size() < upper) {
      upper = palette.size();
      best = std::move(seeded);
      r.upper_bound_method = "incumbent";
    }
  }

  // Lower bounds: |V| / independence number, then the clique number, which
  // only matters if it beats the ratio.
  std::size_t ratio = 0;
  const auto independent =
      max_clique(detail::complement(reduced), budget.max_nodes);
  r.nodes = independent.nodes;
  if (independent.complete && !independent.clique.empty()) {
    r.independence_number = independent.clique.size();
    ratio = (reduced.size() + independent.clique.size() - 1) /
            independent.clique.size();
  }
  const auto clique = CliqueSearch(reduced, budget.max_nodes, ratio).run();
  r.nodes += clique.nodes;
  std::vector<std::size_t> witness =
      clique.clique.empty() ? greedy_clique(reduced) : clique.clique;
  for (std::size_t v : witness)
    r.clique.push_back(reps[v]);
  std::sort(r.clique.begin(), r.clique.end());
  std::size_t lower = witness.size();
  r.lower_bound_method = "clique";
  if (ratio > lower) {
    lower = ratio;
    r.lower_bound_method = "independence-ratio";
  }

  // A colouring meeting the ratio bound exactly is a partition into
  // maximum independent sets.
  if (lower < upper && r.independence_number &&
      lower * *r.independence_number == reduced.size()) {
    if (auto colors = invariant_partition(reduced, lower, budget, r.nodes)) {
      upper = lower;
      best = std::move(*colors);
      r.upper_bound_method = "invariant-partition";
    } else {
      PartitionSearch partition(reduced, *r.independence_number, budget);
      const bool found = partition.run();
      r.nodes += partition.nodes();
      if (found) {
        upper = lower;
        best = partition.coloring();
        r.upper_bound_method = "partition-search";
      }
    }
  }

  if (lower < upper) {
    dsatur.search(upper, best, lower, budget);
    r.nodes += dsatur.nodes();
    if (dsatur.best() < upper) {
      upper = dsatur.best();
      best = dsatur.best_coloring();
      r.upper_bound_method = "branch-and-bound";
    }
    if (!dsatur.aborted() && upper > lower) {
      lower = upper;
      r.lower_bound_method = "exhaustive-search";
    }
  }

  r.lower = lower;
  r.upper = upper;
  if (lower == upper)
    r.chromatic_number = upper;
  r.coloring.resize(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v)
    r.coloring[v] = best[class_of[v]];
  if (!is_proper_coloring(adj, r.coloring))
    throw InvariantError("colouring solver produced an improper colouring");
  return r;
}

} // namespace orthograph
