#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aeq/graph.hpp"

namespace aeq {

enum class CountMode { All, Minimal };

std::string to_string(CountMode mode);

struct SearchConfig {
  int d = 2;
  int n_max = 9;
  CountMode mode = CountMode::All;
  int jobs = 1;
  int parallel_depth = 6;                    // orders below this expand serially
  std::optional<double> time_budget_s = {};  // wall-clock cap
};

/// Per-(n, d, mode) counts of non-isomorphic abstract almost-equidistant
/// graphs, with a completeness flag per row.
class CountTable {
 public:
  struct Row {
    long long count = 0;
    bool complete = true;
  };

  void set(int n, int d, CountMode mode, long long count, bool complete);
  const Row* find(int n, int d, CountMode mode) const;
  long long count(int n, int d, CountMode mode) const;

  /// CSV with header "n,d,mode,count,complete"; complete is 1 or 0.
  std::string to_csv(std::optional<CountMode> only_mode = {}) const;

  bool all_complete() const;

 private:
  std::map<std::tuple<int, int, int>, Row> rows_;
};

struct EnumerationResult {
  CountTable table;   // both modes, all orders 1..n_max reached
  bool complete = true;
};

/// Called once per representative of the requested mode, per order in
/// canonical-label order.
using GraphSink = std::function<void(const Graph&)>;

/// Isomorph-free generation of all abstract almost-equidistant graphs in
/// R^d up to n_max vertices by vertex extension: a new vertex may only be
/// joined so that its non-neighbors form a clique (equivalently it gains
/// at least n-d-1 edges) and so that it has minimum degree in the
/// extended graph. One canonical representative survives per class.
EnumerationResult enumerate_aeq(const SearchConfig& cfg, const GraphSink& sink = nullptr);

/// True iff removing any single edge of g destroys abstract
/// almost-equidistance, i.e. every edge removal creates a triangle in
/// the complement. Requires is_abstract_aeq(g, d).
bool is_minimal(const Graph& g, int d);

std::vector<Graph> minimal_filter(std::span<const Graph> graphs, int d);

}  // namespace aeq
