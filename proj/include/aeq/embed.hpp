#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "aeq/graph.hpp"

namespace aeq {

struct EmbedConfig {
  int dimension = 2;
  int restarts = 100;
  int max_iters = 20000;
  double success_threshold = 1e-10;  // summed residual below which a realization is declared
  double grad_tolerance = 1e-13;     // stop a restart once the gradient norm falls below this
  double shrink = 0.25;              // backtracking factor
  double armijo = 1e-4;
  double min_separation = 1e-3;      // closer final points mark the restart as collapsed
  std::uint64_t rng_seed = 1;
  int jobs = 1;

  /// Optional observer: (restart, iteration, stress after the step).
  std::function<void(int, int, double)> trace;
};

struct EmbeddingResult {
  Eigen::MatrixXd coords;                 // dimension x n, best restart
  double best_residual = 0.0;
  int best_restart = 0;
  std::vector<double> restart_residuals;  // final stress per restart
  std::vector<bool> restart_collapsed;    // final coordinates had a near-coincident pair
  int collapsed_restarts = 0;
  bool realized = false;                  // best_residual < success_threshold, non-collapsed
};

/// Sum over edges {i,j} of (|p_i - p_j|^2 - 1)^2. Zero exactly at
/// realizations.
double stress(const Eigen::MatrixXd& coords, const Graph& g);

/// Analytic gradient: d/dp_i = sum over neighbors j of
/// 4 (|p_i - p_j|^2 - 1) (p_i - p_j).
Eigen::MatrixXd stress_gradient(const Eigen::MatrixXd& coords, const Graph& g);

/// Multi-start descent on the stress function: each restart starts from
/// coordinates drawn uniformly from [-1,1]^d (seeded by rng_seed +
/// restart index) and runs gradient descent with a backtracking line
/// search.
///
/// A realization is a point SET, so descents that merge two vertices
/// cannot certify one: restarts whose final coordinates contain a pair
/// closer than min_separation are flagged collapsed and skipped when the
/// best solution is chosen. A failure to reach the threshold is reported
/// as inconclusive (realized = false), never as a proof of
/// non-realizability.
EmbeddingResult embed(const Graph& g, const EmbedConfig& cfg);

void write_embedding_json(std::ostream& out, const EmbeddingResult& result);

}  // namespace aeq
