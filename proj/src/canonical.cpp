#include "aeq/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace aeq {

namespace {

constexpr int kMaxN = Graph::kMaxVertices;
constexpr int kMaxWords = (kMaxN * (kMaxN - 1) / 2 + 63) / 64;

struct PackedBits {
  std::array<std::uint64_t, kMaxWords> words{};
  int word_count = 0;

  int compare(const PackedBits& other) const {
    for (int w = 0; w < word_count; ++w) {
      if (words[static_cast<std::size_t>(w)] != other.words[static_cast<std::size_t>(w)])
        return words[static_cast<std::size_t>(w)] < other.words[static_cast<std::size_t>(w)] ? -1
                                                                                             : 1;
    }
    return 0;
  }
};

// Upper-triangle bits of g permuted by `perm` (position -> vertex), in
// graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
PackedBits pack_permuted(const Graph& g, const std::array<std::uint8_t, kMaxN>& perm) {
  const int n = g.order();
  PackedBits out;
  out.word_count = (n * (n - 1) / 2 + 63) / 64;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    const std::uint64_t row_j = g.neighbors(perm[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i, ++pos) {
      if ((row_j >> perm[static_cast<std::size_t>(i)]) & 1)
        out.words[static_cast<std::size_t>(pos >> 6)] |= std::uint64_t{1} << (63 - (pos & 63));
    }
  }
  return out;
}

// Vertex-colored refinement and backtracking state. Colors are ranks in
// 0..n-1; a cell is a maximal set of vertices sharing a color, and the
// color equals the cell's first position in the sorted vertex order.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    std::array<std::uint8_t, kMaxN> colors{};
    refine(colors);
    descend(colors);
  }

  const PackedBits& best_bits() const { return best_; }
  const std::array<std::uint8_t, kMaxN>& best_perm() const { return best_perm_; }

 private:
  // 1-WL refinement: repeatedly split cells by the count of neighbors in
  // every cell until the partition stabilizes.
  void refine(std::array<std::uint8_t, kMaxN>& colors) const {
    std::array<std::uint64_t, kMaxN> cell_mask;
    std::array<std::array<std::uint8_t, kMaxN + 1>, kMaxN> keys;
    std::array<std::uint8_t, kMaxN> idx;

    int cell_count = count_cells(colors);
    for (;;) {
      if (cell_count == n_) return;  // discrete already
      cell_mask.fill(0);
      for (int v = 0; v < n_; ++v)
        cell_mask[colors[static_cast<std::size_t>(v)]] |= Graph::bit(v);

      for (int v = 0; v < n_; ++v) {
        auto& key = keys[static_cast<std::size_t>(v)];
        key[0] = colors[static_cast<std::size_t>(v)];
        int slot = 1;
        for (int c = 0; c < n_; ++c) {
          if (!cell_mask[static_cast<std::size_t>(c)]) continue;
          key[static_cast<std::size_t>(slot++)] = static_cast<std::uint8_t>(
              std::popcount(g_.neighbors(v) & cell_mask[static_cast<std::size_t>(c)]));
        }
      }

      const int key_len = 1 + cell_count;
      for (int v = 0; v < n_; ++v) idx[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
      std::sort(idx.begin(), idx.begin() + n_, [&](std::uint8_t a, std::uint8_t b) {
        return std::memcmp(keys[a].data(), keys[b].data(), static_cast<std::size_t>(key_len)) < 0;
      });

      int next_color = 0;
      colors[idx[0]] = 0;
      for (int p = 1; p < n_; ++p) {
        if (std::memcmp(keys[idx[static_cast<std::size_t>(p)]].data(),
                        keys[idx[static_cast<std::size_t>(p - 1)]].data(),
                        static_cast<std::size_t>(key_len)) != 0)
          next_color = p;
        colors[idx[static_cast<std::size_t>(p)]] = static_cast<std::uint8_t>(next_color);
      }

      const int new_count = count_cells(colors);
      if (new_count == cell_count) return;
      cell_count = new_count;
    }
  }

  int count_cells(const std::array<std::uint8_t, kMaxN>& colors) const {
    std::uint64_t seen = 0;
    for (int v = 0; v < n_; ++v) seen |= Graph::bit(colors[static_cast<std::size_t>(v)]);
    return std::popcount(seen);
  }

  // A partition is perfect when every cell induces a clique or an
  // independent set and every cell pair is fully joined or fully
  // separated; any within-cell order then yields the same matrix.
  bool is_perfect(const std::array<std::uint8_t, kMaxN>& colors) const {
    std::array<std::uint64_t, kMaxN> cell_mask{};
    for (int v = 0; v < n_; ++v) cell_mask[colors[static_cast<std::size_t>(v)]] |= Graph::bit(v);
    for (int a = 0; a < n_; ++a) {
      const std::uint64_t ma = cell_mask[static_cast<std::size_t>(a)];
      if (!ma) continue;
      for (int b = a; b < n_; ++b) {
        const std::uint64_t mb = cell_mask[static_cast<std::size_t>(b)];
        if (!mb) continue;
        bool all = true, none = true;
        std::uint64_t scan = ma;
        while (scan) {
          const int v = std::countr_zero(scan);
          scan &= scan - 1;
          const std::uint64_t hit = g_.neighbors(v) & mb;
          const std::uint64_t want = a == b ? (mb & ~Graph::bit(v)) : mb;
          if (hit != want) all = false;
          if (hit) none = false;
          if (!all && !none) return false;
        }
      }
    }
    return true;
  }

  void leaf(const std::array<std::uint8_t, kMaxN>& colors) {
    std::array<std::uint8_t, kMaxN> perm{};
    std::array<std::uint8_t, kMaxN> idx{};
    for (int v = 0; v < n_; ++v) idx[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    std::stable_sort(idx.begin(), idx.begin() + n_,
                     [&](std::uint8_t a, std::uint8_t b) { return colors[a] < colors[b]; });
    perm = idx;
    PackedBits bits = pack_permuted(g_, perm);
    if (!have_best_ || bits.compare(best_) < 0) {
      best_ = bits;
      best_perm_ = perm;
      have_best_ = true;
    }
  }

  void descend(std::array<std::uint8_t, kMaxN>& colors) {
    if (count_cells(colors) == n_ || is_perfect(colors)) {
      leaf(colors);
      return;
    }

    // First non-singleton cell, by color rank.
    int target_color = -1, cell_size = 0;
    for (int c = 0; c < n_ && target_color < 0; ++c) {
      int size = 0;
      for (int v = 0; v < n_; ++v) size += colors[static_cast<std::size_t>(v)] == c;
      if (size >= 2) {
        target_color = c;
        cell_size = size;
      }
    }
    (void)cell_size;

    for (int v = 0; v < n_; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target_color) continue;
      std::array<std::uint8_t, kMaxN> child = colors;
      // Individualize v: pull it just ahead of its cellmates.
      for (int u = 0; u < n_; ++u)
        child[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(
            2 * child[static_cast<std::size_t>(u)] + (u == v ? 0 : 1));
      normalize(child);
      refine(child);
      descend(child);
    }
  }

  void normalize(std::array<std::uint8_t, kMaxN>& colors) const {
    std::array<std::uint8_t, kMaxN> idx{};
    for (int v = 0; v < n_; ++v) idx[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    std::stable_sort(idx.begin(), idx.begin() + n_,
                     [&](std::uint8_t a, std::uint8_t b) { return colors[a] < colors[b]; });
    std::array<std::uint8_t, kMaxN> ranked{};
    int next = 0;
    for (int p = 0; p < n_; ++p) {
      if (p > 0 && colors[idx[static_cast<std::size_t>(p)]] != colors[idx[static_cast<std::size_t>(p - 1)]])
        next = p;
      ranked[idx[static_cast<std::size_t>(p)]] = static_cast<std::uint8_t>(next);
    }
    colors = ranked;
  }

  const Graph& g_;
  int n_;
  PackedBits best_;
  std::array<std::uint8_t, kMaxN> best_perm_{};
  bool have_best_ = false;
};

}  // namespace

CanonicalLabel canonical_label(const Graph& g) {
  const int n = g.order();
  CanonicalLabel label;
  label.push_back(static_cast<char>(n));
  if (n <= 1) return label;

  Canonicalizer canon(g);
  canon.run();
  const PackedBits& bits = canon.best_bits();
  const int bytes = (n * (n - 1) / 2 + 7) / 8;
  for (int b = 0; b < bytes; ++b) {
    const std::uint64_t word = bits.words[static_cast<std::size_t>(b >> 3)];
    label.push_back(static_cast<char>((word >> (56 - 8 * (b & 7))) & 0xff));
  }
  return label;
}

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  Canonicalizer canon(g);
  canon.run();
  const auto& perm = canon.best_perm();  // position -> original vertex
  Graph out(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
        out.add_edge(i, j);
  return out;
}

Graph graph_from_label(const CanonicalLabel& label) {
  if (label.empty()) throw std::invalid_argument("graph_from_label: empty label");
  const int n = static_cast<unsigned char>(label[0]);
  if (n > Graph::kMaxVertices) throw std::invalid_argument("graph_from_label: bad order byte");
  const int bytes = (n * (n - 1) / 2 + 7) / 8;
  if (static_cast<int>(label.size()) != 1 + bytes)
    throw std::invalid_argument("graph_from_label: wrong length");
  Graph g(n);
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      const unsigned char byte = static_cast<unsigned char>(label[static_cast<std::size_t>(1 + (pos >> 3))]);
      if ((byte >> (7 - (pos & 7))) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace aeq
