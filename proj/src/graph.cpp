#include "aeq/graph.hpp"

#include <algorithm>
#include <array>

namespace aeq {

ForbiddenProfile ForbiddenProfile::for_dimension(int d) {
  if (d < 2) throw std::invalid_argument("ForbiddenProfile: dimension must be >= 2");
  ForbiddenProfile p;
  p.d = d;
  p.clique_size = d + 2;
  if (d == 2) {
    p.multipartite_classes = {3, 2};
  } else if (d % 2 == 1) {
    p.multipartite_classes.assign(static_cast<std::size_t>((d + 1) / 2), 3);
  } else {
    p.multipartite_classes.assign(static_cast<std::size_t>(d / 2), 3);
    p.multipartite_classes.push_back(1);
  }
  return p;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t row = ~g.neighbors(i) & g.vertex_mask() & ~Graph::bit(i);
    for (int j = i + 1; j < n; ++j)
      if ((row >> j) & 1) c.add_edge(i, j);
  }
  return c;
}

bool has_triangle(const Graph& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    std::uint64_t nb = Graph::bits_above(g.neighbors(i), i);  // j > i only
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      if (g.neighbors(i) & g.neighbors(j)) return true;
    }
  }
  return false;
}

namespace {

// Branch and bound over bit masks: does `allowed` contain a k-clique?
bool clique_search(const Graph& g, std::uint64_t candidates, int need) {
  if (need <= 0) return true;
  if (std::popcount(candidates) < need) return false;
  while (candidates) {
    if (std::popcount(candidates) < need) return false;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (clique_search(g, candidates & g.neighbors(v), need - 1)) return true;
  }
  return false;
}

// Recursive class-by-class selection.  `sizes` is sorted largest first;
// `pool` holds vertices adjacent to every vertex picked in earlier
// classes; `order` lists all vertices by descending degree.
bool multipartite_search(const Graph& g, std::span<const int> sizes, std::size_t level,
                         std::uint64_t pool, std::uint64_t used,
                         const std::array<std::uint8_t, 64>& order, int anchor) {
  if (level == sizes.size()) return anchor < 0;

  // A still-unplaced anchor has to come from the shrinking pool.
  if (anchor >= 0 && !((pool >> anchor) & 1)) return false;

  int remaining = 0;
  for (std::size_t l = level; l < sizes.size(); ++l) remaining += sizes[l];
  if (std::popcount(pool & ~used) < remaining) return false;

  const int want = sizes[level];
  const int n = g.order();

  // Members of the current class are chosen one at a time in `order`
  // position; `from` forbids permuted repeats within the class.
  auto recurse = [&](auto&& self, std::uint64_t chosen, std::uint64_t next_pool, int count,
                     int from) -> bool {
    if (count == want) {
      const bool anchored = anchor >= 0 && ((chosen >> anchor) & 1);
      return multipartite_search(g, sizes, level + 1, next_pool, used | chosen, order,
                                 anchored ? -1 : anchor);
    }
    for (int pos = from; pos < n; ++pos) {
      const int v = order[static_cast<std::size_t>(pos)];
      if (!((pool >> v) & 1) || ((used | chosen) >> v & 1)) continue;
      if (self(self, chosen | Graph::bit(v), next_pool & g.neighbors(v), count + 1, pos + 1))
        return true;
    }
    return false;
  };
  return recurse(recurse, 0, pool, 0, 0);
}

bool multipartite_impl(const Graph& g, std::span<const int> class_sizes, int anchor) {
  int total = 0;
  for (int s : class_sizes) {
    if (s <= 0) throw std::invalid_argument("contains_multipartite: class sizes must be positive");
    total += s;
  }
  if (total > g.order()) throw std::invalid_argument("contains_multipartite: classes exceed order");

  std::vector<int> sizes(class_sizes.begin(), class_sizes.end());
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());

  std::array<std::uint8_t, 64> order{};
  const int n = g.order();
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::sort(order.begin(), order.begin() + n,
            [&](std::uint8_t a, std::uint8_t b) { return g.degree(a) > g.degree(b); });

  return multipartite_search(g, sizes, 0, g.vertex_mask(), 0, order, anchor);
}

}  // namespace

bool contains_clique(const Graph& g, int k) {
  if (k < 1 || k > g.order()) throw std::invalid_argument("contains_clique: need 1 <= k <= n");
  return clique_search(g, g.vertex_mask(), k);
}

bool contains_clique_within(const Graph& g, std::uint64_t allowed, int k) {
  if (k <= 0) return true;
  return clique_search(g, allowed & g.vertex_mask(), k);
}

bool contains_multipartite(const Graph& g, std::span<const int> class_sizes) {
  return multipartite_impl(g, class_sizes, -1);
}

bool contains_multipartite_using(const Graph& g, std::span<const int> class_sizes, int anchor) {
  if (anchor < 0 || anchor >= g.order())
    throw std::out_of_range("contains_multipartite_using: anchor out of range");
  return multipartite_impl(g, class_sizes, anchor);
}

bool is_abstract_aeq(const Graph& g, int d) {
  const ForbiddenProfile profile = ForbiddenProfile::for_dimension(d);
  if (has_triangle(complement(g))) return false;
  if (g.order() >= profile.clique_size && contains_clique(g, profile.clique_size)) return false;
  int pattern_total = 0;
  for (int s : profile.multipartite_classes) pattern_total += s;
  if (g.order() >= pattern_total && contains_multipartite(g, profile.multipartite_classes))
    return false;
  return true;
}

}  // namespace aeq
