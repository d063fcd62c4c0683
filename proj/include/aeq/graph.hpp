#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace aeq {

/// Undirected simple graph on at most 64 vertices, one 64-bit adjacency
/// row per vertex. Rows stay symmetric, loop-free and masked to the
/// first n bits at all times.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n)), 0) {}

  static Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.adj_[i] = g.vertex_mask() & ~bit(i);
    return g;
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  /// Cyclic graph on n vertices: i ~ j iff (i - j) mod n is in +-offsets.
  static Graph circulant(int n, std::span<const int> offsets) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int c : offsets) g.add_edge(i, (i + c) % n);
    return g;
  }

  static Graph circulant(int n, std::initializer_list<int> offsets) {
    return circulant(n, std::span<const int>(offsets.begin(), offsets.size()));
  }

  int order() const { return n_; }

  std::uint64_t neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  bool has_edge(int i, int j) const { return (adj_[static_cast<std::size_t>(i)] >> j) & 1; }

  void add_edge(int i, int j) {
    check_pair(i, j);
    adj_[static_cast<std::size_t>(i)] |= bit(j);
    adj_[static_cast<std::size_t>(j)] |= bit(i);
  }

  void remove_edge(int i, int j) {
    check_pair(i, j);
    adj_[static_cast<std::size_t>(i)] &= ~bit(j);
    adj_[static_cast<std::size_t>(j)] &= ~bit(i);
  }

  int degree(int i) const { return std::popcount(adj_[static_cast<std::size_t>(i)]); }

  int min_degree() const {
    int m = n_ > 0 ? degree(0) : 0;
    for (int i = 1; i < n_; ++i) m = std::min(m, degree(i));
    return m;
  }

  int edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
  }

  /// Appends vertex n whose neighborhood is the given subset of 0..n-1.
  void add_vertex(std::uint64_t neighbor_mask) {
    if (n_ >= kMaxVertices) throw std::invalid_argument("Graph: vertex cap is 64");
    if (neighbor_mask & ~vertex_mask())
      throw std::invalid_argument("Graph: neighbor mask reaches outside the graph");
    const std::uint64_t nb = bit(n_);
    adj_.push_back(neighbor_mask);
    for (int i = 0; i < n_; ++i)
      if ((neighbor_mask >> i) & 1) adj_[static_cast<std::size_t>(i)] |= nb;
    ++n_;
  }

  /// Removes the last vertex; exact inverse of add_vertex.
  void pop_vertex() {
    if (n_ == 0) throw std::logic_error("Graph: pop on empty graph");
    --n_;
    adj_.pop_back();
    const std::uint64_t keep = vertex_mask();
    for (auto& row : adj_) row &= keep;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  /// Bits of `row` at positions strictly greater than i (shift-safe for
  /// i = 63).
  static std::uint64_t bits_above(std::uint64_t row, int i) {
    return row & ~((bit(i) << 1) - 1);
  }

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: order must be in 0..64");
    return n;
  }

  void check_pair(int i, int j) const {
    if (i == j) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Forbidden subgraphs that define abstract almost-equidistance in R^d:
/// the (d+2)-clique plus one complete multipartite pattern.
struct ForbiddenProfile {
  int d = 0;
  int clique_size = 0;
  std::vector<int> multipartite_classes;  // largest first

  static ForbiddenProfile for_dimension(int d);
};

Graph complement(const Graph& g);

bool has_triangle(const Graph& g);

/// True iff g contains K_k as a subgraph.
bool contains_clique(const Graph& g, int k);

/// As contains_clique, but the clique must lie inside `allowed`.
bool contains_clique_within(const Graph& g, std::uint64_t allowed, int k);

/// True iff g contains the complete multipartite pattern with the given
/// class sizes as a subgraph: disjoint vertex sets with every cross pair
/// adjacent. Edges inside a class are unconstrained.
bool contains_multipartite(const Graph& g, std::span<const int> class_sizes);

/// As contains_multipartite, but every witness must use vertex `anchor`.
bool contains_multipartite_using(const Graph& g, std::span<const int> class_sizes, int anchor);

bool is_abstract_aeq(const Graph& g, int d);

}  // namespace aeq
