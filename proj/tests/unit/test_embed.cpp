#include <doctest.h>

#include <cmath>

#include "aeq/constructions.hpp"
#include "aeq/embed.hpp"
#include "aeq/geometry.hpp"
#include "test_helpers.hpp"

using namespace aeq;

namespace {

// Second implementation of the objective, summed pair by pair.
double stress_oracle(const Eigen::MatrixXd& coords, const Graph& g) {
  double total = 0.0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) {
      if (j <= i || !g.has_edge(i, j)) continue;
      double sq = 0.0;
      for (Eigen::Index r = 0; r < coords.rows(); ++r) {
        const double diff = coords(r, i) - coords(r, j);
        sq += diff * diff;
      }
      total += (sq - 1.0) * (sq - 1.0);
    }
  return total;
}

Eigen::MatrixXd random_coords(int dim, int n, SplitMix64& rng) {
  Eigen::MatrixXd m(dim, n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < dim; ++r) m(r, j) = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("stress vanishes exactly at realizations") {
  CHECK(stress(moser_spindle_points().float_points(), moser_spindle_graph()) < 1e-20);

  Eigen::MatrixXd square(2, 4);
  square.col(0) << 0, 0;
  square.col(1) << 1, 0;
  square.col(2) << 1, 1;
  square.col(3) << 0, 1;
  CHECK(stress(square, Graph::complete(4)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("stress matches an independent re-evaluation") {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 8);
    const int dim = 1 + static_cast<int>(rng.next() % 4);
    const Graph g = test::random_graph(n, rng, 0.6);
    const Eigen::MatrixXd coords = random_coords(dim, n, rng);
    CHECK(stress(coords, g) == doctest::Approx(stress_oracle(coords, g)).epsilon(1e-13));
  }
}

TEST_CASE("gradient is zero at a realization and on edgeless graphs") {
  const Eigen::MatrixXd spindle = moser_spindle_points().float_points();
  CHECK(stress_gradient(spindle, moser_spindle_graph()).norm() < 1e-12);

  SplitMix64 rng(707);
  const Eigen::MatrixXd coords = random_coords(3, 6, rng);
  CHECK(stress_gradient(coords, Graph(6)).norm() == 0.0);
}

TEST_CASE("gradient agrees with central finite differences") {
  SplitMix64 rng(808);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 6);
    const int dim = 1 + static_cast<int>(rng.next() % 3);
    const Graph g = test::random_graph(n, rng, 0.7);
    if (g.edge_count() == 0) continue;
    Eigen::MatrixXd coords = random_coords(dim, n, rng);
    const Eigen::MatrixXd grad = stress_gradient(coords, g);

    Eigen::MatrixXd numeric(dim, n);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < dim; ++r) {
        const double keep = coords(r, j);
        coords(r, j) = keep + h;
        const double up = stress(coords, g);
        coords(r, j) = keep - h;
        const double down = stress(coords, g);
        coords(r, j) = keep;
        numeric(r, j) = (up - down) / (2.0 * h);
      }
    const double scale = std::max(1.0, grad.norm());
    CHECK((grad - numeric).norm() / scale < 1e-6);
  }
}

TEST_CASE("known realizable graphs reach the success threshold") {
  EmbedConfig cfg;
  cfg.dimension = 2;
  cfg.restarts = 50;
  cfg.rng_seed = 1;
  const EmbeddingResult spindle = embed(moser_spindle_graph(), cfg);
  CHECK(spindle.realized);
  CHECK(spindle.best_residual < 1e-10);
  CHECK_FALSE(spindle.restart_collapsed[static_cast<std::size_t>(spindle.best_restart)]);

  EmbedConfig cfg3 = cfg;
  cfg3.dimension = 3;
  const EmbeddingResult pair = embed(named_graph("biaugmented_pair_3d"), cfg3);
  CHECK(pair.realized);
  CHECK(pair.best_residual < 1e-10);
}

TEST_CASE("the planar K4 probe stays inconclusive") {
  EmbedConfig cfg;
  cfg.dimension = 2;
  cfg.restarts = 100;
  cfg.rng_seed = 5;
  const EmbeddingResult result = embed(Graph::complete(4), cfg);
  CHECK_FALSE(result.realized);
  CHECK(result.best_residual > 1e-3);
}

TEST_CASE("vertex-merging descents cannot certify a realization") {
  // Most G10 restarts drive a non-adjacent pair together and reach
  // near-zero stress; those are collapsed, not realizations.
  EmbedConfig cfg;
  cfg.dimension = 4;
  cfg.restarts = 40;
  cfg.rng_seed = 1;
  cfg.jobs = 2;
  const EmbeddingResult result = embed(named_graph("G10"), cfg);
  CHECK(result.collapsed_restarts > 0);
  CHECK_FALSE(result.realized);
  CHECK(result.best_residual > 1e-4);
  CHECK_FALSE(result.restart_collapsed[static_cast<std::size_t>(result.best_restart)]);
}

TEST_CASE("descent is monotone and deterministic") {
  EmbedConfig cfg;
  cfg.dimension = 2;
  cfg.restarts = 4;
  cfg.rng_seed = 99;
  cfg.max_iters = 400;

  double last = -1.0;
  int last_restart = -1;
  cfg.trace = [&](int restart, int iter, double value) {
    if (restart != last_restart) {
      last_restart = restart;
    } else {
      CHECK(value <= last + 1e-18);
    }
    (void)iter;
    last = value;
  };
  const EmbeddingResult first = embed(moser_spindle_graph(), cfg);

  cfg.trace = nullptr;
  const EmbeddingResult again = embed(moser_spindle_graph(), cfg);
  CHECK(first.best_residual == again.best_residual);
  CHECK(first.best_restart == again.best_restart);
  CHECK(first.restart_residuals == again.restart_residuals);
  CHECK(first.coords == again.coords);

  EmbedConfig threaded = cfg;
  threaded.jobs = 3;
  const EmbeddingResult parallel = embed(moser_spindle_graph(), threaded);
  CHECK(parallel.restart_residuals == again.restart_residuals);
  CHECK(parallel.best_restart == again.best_restart);
}
