#include "aeq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "aeq/canonical.hpp"

namespace aeq {

std::string to_string(CountMode mode) { return mode == CountMode::All ? "all" : "minimal"; }

void CountTable::set(int n, int d, CountMode mode, long long count, bool complete) {
  rows_[{n, d, static_cast<int>(mode)}] = Row{count, complete};
}

const CountTable::Row* CountTable::find(int n, int d, CountMode mode) const {
  auto it = rows_.find({n, d, static_cast<int>(mode)});
  return it == rows_.end() ? nullptr : &it->second;
}

long long CountTable::count(int n, int d, CountMode mode) const {
  const Row* row = find(n, d, mode);
  if (!row) throw std::out_of_range("CountTable: no such row");
  return row->count;
}

std::string CountTable::to_csv(std::optional<CountMode> only_mode) const {
  std::ostringstream out;
  out << "n,d,mode,count,complete\n";
  for (const auto& [key, row] : rows_) {
    const auto [n, d, mode] = key;
    if (only_mode && static_cast<int>(*only_mode) != mode) continue;
    out << n << ',' << d << ',' << to_string(static_cast<CountMode>(mode)) << ',' << row.count
        << ',' << (row.complete ? 1 : 0) << '\n';
  }
  return out.str();
}

bool CountTable::all_complete() const {
  for (const auto& [key, row] : rows_)
    if (!row.complete) return false;
  return true;
}

bool is_minimal(const Graph& g, int d) {
  if (!is_abstract_aeq(g, d))
    throw std::invalid_argument("is_minimal: graph is not abstract almost-equidistant");
  // Removing edge {i,j} creates a complement triangle exactly when some
  // third vertex is adjacent to neither endpoint; forbidden-subgraph
  // containment is monotone, so nothing else can break.
  const std::uint64_t full = g.vertex_mask();
  for (int i = 0; i < g.order(); ++i) {
    std::uint64_t nb = Graph::bits_above(g.neighbors(i), i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      const std::uint64_t third = full & ~g.neighbors(i) & ~g.neighbors(j) & ~Graph::bit(i) &
                                  ~Graph::bit(j);
      if (!third) return false;
    }
  }
  return true;
}

std::vector<Graph> minimal_filter(std::span<const Graph> graphs, int d) {
  std::vector<Graph> out;
  for (const Graph& g : graphs)
    if (is_minimal(g, d)) out.push_back(g);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  bool passed() const { return at && Clock::now() >= *at; }
};

// All cliques of g (including the empty set) with at most max_size
// vertices, as bit masks.
void collect_cliques(const Graph& g, int max_size, std::vector<std::uint64_t>& out) {
  out.clear();
  out.push_back(0);
  auto rec = [&](auto&& self, std::uint64_t current, int size, std::uint64_t candidates) -> void {
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const std::uint64_t next = current | Graph::bit(v);
      out.push_back(next);
      if (size + 1 < max_size) self(self, next, size + 1, candidates & g.neighbors(v));
    }
  };
  rec(rec, 0, 0, g.vertex_mask());
}

struct LevelMap {
  std::unordered_set<CanonicalLabel> labels;
};

// Expands one parent: every admissible way of appending a vertex. The
// non-neighborhood of the new vertex must be a clique of the parent
// (this is exactly what keeps the complement triangle-free and gives the
// new vertex degree >= n-d-1); the new vertex must end up with minimum
// degree; the extension must avoid the forbidden clique and multipartite
// patterns.
void expand_parent(const Graph& parent, const ForbiddenProfile& profile, LevelMap& into,
                   std::vector<std::uint64_t>& clique_scratch) {
  const int n = parent.order();
  const std::uint64_t full = parent.vertex_mask();
  int pattern_total = 0;
  for (int s : profile.multipartite_classes) pattern_total += s;

  collect_cliques(parent, profile.clique_size - 1, clique_scratch);

  Graph ext = parent;
  for (const std::uint64_t non_neighbors : clique_scratch) {
    const std::uint64_t mask = full & ~non_neighbors;
    const int new_degree = std::popcount(mask);

    bool min_degree_ok = true;
    for (int u = 0; u < n && min_degree_ok; ++u) {
      const int du = parent.degree(u) + ((mask >> u) & 1 ? 1 : 0);
      if (du < new_degree) min_degree_ok = false;
    }
    if (!min_degree_ok) continue;

    // K_{d+2} through the new vertex needs a (d+1)-clique inside mask.
    if (new_degree >= profile.clique_size - 1 &&
        contains_clique_within(parent, mask, profile.clique_size - 1))
      continue;

    ext.add_vertex(mask);
    const bool bad_pattern = n + 1 >= pattern_total &&
                             contains_multipartite_using(ext, profile.multipartite_classes, n);
    if (!bad_pattern) into.labels.insert(canonical_label(ext));
    ext.pop_vertex();
  }
}

// Representatives are the canonical forms, in label order.
std::vector<Graph> sorted_level(LevelMap&& map) {
  std::vector<CanonicalLabel> labels(std::make_move_iterator(map.labels.begin()),
                                     std::make_move_iterator(map.labels.end()));
  std::sort(labels.begin(), labels.end());
  std::vector<Graph> level;
  level.reserve(labels.size());
  for (const CanonicalLabel& label : labels) level.push_back(graph_from_label(label));
  return level;
}

}  // namespace

EnumerationResult enumerate_aeq(const SearchConfig& cfg, const GraphSink& sink) {
  if (cfg.d < 2) throw std::invalid_argument("enumerate_aeq: dimension must be >= 2");
  if (cfg.n_max < 1 || cfg.n_max > Graph::kMaxVertices)
    throw std::invalid_argument("enumerate_aeq: n_max must be in 1..64");
  if (cfg.jobs < 1) throw std::invalid_argument("enumerate_aeq: jobs must be >= 1");

  const ForbiddenProfile profile = ForbiddenProfile::for_dimension(cfg.d);
  Deadline deadline;
  if (cfg.time_budget_s)
    deadline.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(*cfg.time_budget_s));

  EnumerationResult result;
  std::vector<Graph> level{Graph(1)};

  auto record = [&](int n, const std::vector<Graph>& graphs, bool complete) {
    long long minimal = 0;
    for (const Graph& g : graphs) {
      const bool min = is_minimal(g, cfg.d);
      minimal += min ? 1 : 0;
      if (sink && (cfg.mode == CountMode::All || min)) sink(g);
    }
    result.table.set(n, cfg.d, CountMode::All, static_cast<long long>(graphs.size()), complete);
    result.table.set(n, cfg.d, CountMode::Minimal, minimal, complete);
  };

  record(1, level, true);

  for (int n = 1; n < cfg.n_max; ++n) {
    if (deadline.passed()) {
      result.complete = false;
      result.table.set(n + 1, cfg.d, CountMode::All, 0, false);
      result.table.set(n + 1, cfg.d, CountMode::Minimal, 0, false);
      break;
    }

    const int workers =
        (cfg.jobs > 1 && n >= cfg.parallel_depth && level.size() > 1)
            ? static_cast<int>(std::min<std::size_t>(level.size(), static_cast<std::size_t>(cfg.jobs)))
            : 1;

    std::vector<LevelMap> partials(static_cast<std::size_t>(workers));
    std::atomic<bool> out_of_time{false};

    auto work = [&](int w) {
      std::vector<std::uint64_t> scratch;
      for (std::size_t idx = static_cast<std::size_t>(w); idx < level.size();
           idx += static_cast<std::size_t>(workers)) {
        if ((idx & 0x3f) == 0 && deadline.passed()) {
          out_of_time.store(true);
          return;
        }
        expand_parent(level[idx], profile, partials[static_cast<std::size_t>(w)], scratch);
      }
    };

    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }

    LevelMap merged = std::move(partials[0]);
    for (std::size_t w = 1; w < partials.size(); ++w)
      merged.labels.merge(partials[w].labels);

    level = sorted_level(std::move(merged));
    const bool complete = !out_of_time.load();
    record(n + 1, level, complete);
    if (!complete) {
      result.complete = false;
      break;
    }
  }

  return result;
}

}  // namespace aeq
