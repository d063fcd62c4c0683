#include "aeq/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "aeq/random.hpp"

namespace aeq {

double stress(const Eigen::MatrixXd& coords, const Graph& g) {
  if (coords.cols() != g.order()) throw std::invalid_argument("stress: coordinate count != order");
  double total = 0.0;
  for (int i = 0; i < g.order(); ++i) {
    std::uint64_t nb = Graph::bits_above(g.neighbors(i), i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      const double gap = (coords.col(i) - coords.col(j)).squaredNorm() - 1.0;
      total += gap * gap;
    }
  }
  return total;
}

Eigen::MatrixXd stress_gradient(const Eigen::MatrixXd& coords, const Graph& g) {
  if (coords.cols() != g.order())
    throw std::invalid_argument("stress_gradient: coordinate count != order");
  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(coords.rows(), coords.cols());
  for (int i = 0; i < g.order(); ++i) {
    std::uint64_t nb = Graph::bits_above(g.neighbors(i), i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      const Eigen::VectorXd diff = coords.col(i) - coords.col(j);
      const Eigen::VectorXd term = 4.0 * (diff.squaredNorm() - 1.0) * diff;
      grad.col(i) += term;
      grad.col(j) -= term;
    }
  }
  return grad;
}

namespace {

struct RestartOutcome {
  Eigen::MatrixXd coords;
  double residual = 0.0;
  bool collapsed = false;
};

double min_pair_distance(const Eigen::MatrixXd& coords) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < coords.cols(); ++i)
    for (Eigen::Index j = i + 1; j < coords.cols(); ++j)
      best = std::min(best, (coords.col(i) - coords.col(j)).norm());
  return best;
}

RestartOutcome run_restart(const Graph& g, const EmbedConfig& cfg, int restart) {
  SplitMix64 rng(cfg.rng_seed + static_cast<std::uint64_t>(restart));
  Eigen::MatrixXd x(cfg.dimension, g.order());
  for (int j = 0; j < g.order(); ++j)
    for (int r = 0; r < cfg.dimension; ++r) x(r, j) = rng.uniform(-1.0, 1.0);

  double f = stress(x, g);
  Eigen::MatrixXd grad = stress_gradient(x, g);
  double step = 1.0;
  Eigen::MatrixXd prev_x, prev_grad;

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    const double grad_norm2 = grad.squaredNorm();
    if (f < 0.01 * cfg.success_threshold || grad_norm2 < cfg.grad_tolerance * cfg.grad_tolerance)
      break;

    // Barzilai-Borwein trial step, safeguarded by backtracking.
    if (iter > 0) {
      const Eigen::MatrixXd dx = x - prev_x;
      const Eigen::MatrixXd dg = grad - prev_grad;
      const double dgdg = dg.squaredNorm();
      const double dxdg = (dx.array() * dg.array()).sum();
      step = (dgdg > 0 && dxdg > 0) ? dxdg / dgdg : std::max(step, 1e-8);
    }
    step = std::clamp(step, 1e-12, 1e3);

    double t = step;
    Eigen::MatrixXd candidate;
    double fc = f;
    bool moved = false;
    for (int probe = 0; probe < 60; ++probe) {
      candidate = x - t * grad;
      fc = stress(candidate, g);
      if (fc <= f - cfg.armijo * t * grad_norm2) {
        moved = true;
        break;
      }
      t *= cfg.shrink;
    }
    if (!moved) break;

    prev_x.swap(x);
    prev_grad.swap(grad);
    x = std::move(candidate);
    f = fc;
    grad = stress_gradient(x, g);
    step = t;
    if (cfg.trace) cfg.trace(restart, iter, f);
  }
  const bool collapsed = g.order() > 1 && min_pair_distance(x) < cfg.min_separation;
  return {std::move(x), f, collapsed};
}

}  // namespace

EmbeddingResult embed(const Graph& g, const EmbedConfig& cfg) {
  if (g.order() < 1) throw std::invalid_argument("embed: empty graph");
  if (cfg.dimension < 1) throw std::invalid_argument("embed: dimension must be >= 1");
  if (cfg.restarts < 1) throw std::invalid_argument("embed: restarts must be >= 1");
  if (!(cfg.success_threshold > 0))
    throw std::invalid_argument("embed: success threshold must be positive");

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  const int workers = cfg.trace ? 1 : std::max(1, std::min(cfg.jobs, cfg.restarts));
  if (workers == 1) {
    for (int r = 0; r < cfg.restarts; ++r)
      outcomes[static_cast<std::size_t>(r)] = run_restart(g, cfg, r);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        for (int r = w; r < cfg.restarts; r += workers)
          outcomes[static_cast<std::size_t>(r)] = run_restart(g, cfg, r);
      });
    for (auto& t : threads) t.join();
  }

  EmbeddingResult result;
  result.restart_residuals.reserve(static_cast<std::size_t>(cfg.restarts));
  for (const auto& o : outcomes) {
    result.restart_residuals.push_back(o.residual);
    result.restart_collapsed.push_back(o.collapsed);
    result.collapsed_restarts += o.collapsed ? 1 : 0;
  }

  // Best non-collapsed restart; ties go to the lowest index. If every
  // restart collapsed, the run is inconclusive by definition and the
  // overall best is reported for inspection.
  int best = -1;
  for (int r = 0; r < cfg.restarts; ++r) {
    if (outcomes[static_cast<std::size_t>(r)].collapsed) continue;
    if (best < 0 || outcomes[static_cast<std::size_t>(r)].residual <
                        outcomes[static_cast<std::size_t>(best)].residual)
      best = r;
  }
  const bool all_collapsed = best < 0;
  if (all_collapsed) {
    best = 0;
    for (int r = 1; r < cfg.restarts; ++r)
      if (outcomes[static_cast<std::size_t>(r)].residual <
          outcomes[static_cast<std::size_t>(best)].residual)
        best = r;
  }

  result.best_restart = best;
  result.best_residual = outcomes[static_cast<std::size_t>(best)].residual;
  result.coords = outcomes[static_cast<std::size_t>(best)].coords;
  result.realized = !all_collapsed && result.best_residual < cfg.success_threshold;
  return result;
}

void write_embedding_json(std::ostream& out, const EmbeddingResult& result) {
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "{\n  \"declared\": \"" << (result.realized ? "realized" : "inconclusive") << "\",\n";
  out << "  \"best_residual\": " << fmt(result.best_residual) << ",\n";
  out << "  \"best_restart\": " << result.best_restart << ",\n";
  out << "  \"collapsed_restarts\": " << result.collapsed_restarts << ",\n";
  out << "  \"coordinates\": [\n";
  for (Eigen::Index j = 0; j < result.coords.cols(); ++j) {
    out << "    [";
    for (Eigen::Index r = 0; r < result.coords.rows(); ++r) {
      if (r) out << ", ";
      out << fmt(result.coords(r, j));
    }
    out << (j + 1 < result.coords.cols() ? "],\n" : "]\n");
  }
  out << "  ],\n  \"restart_residuals\": [";
  for (std::size_t r = 0; r < result.restart_residuals.size(); ++r) {
    if (r) out << ", ";
    out << fmt(result.restart_residuals[r]);
  }
  out << "]\n}\n";
}

}  // namespace aeq
