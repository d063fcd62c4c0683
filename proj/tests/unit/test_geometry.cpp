#include <doctest.h>

#include <cmath>
#include <sstream>

#include "aeq/canonical.hpp"
#include "aeq/constructions.hpp"
#include "aeq/geometry.hpp"
#include "test_helpers.hpp"

using namespace aeq;

namespace {

PointSet floating_points(std::initializer_list<std::initializer_list<double>> pts,
                         double tol = kDefaultTolerance) {
  const int dim = static_cast<int>(pts.begin()->size());
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(pts.size()));
  int col = 0;
  for (const auto& p : pts) {
    int row = 0;
    for (double v : p) m(row++, col) = v;
    ++col;
  }
  return PointSet::floating(tol, std::move(m));
}

}  // namespace

TEST_CASE("squared distances in both modes") {
  ExactMatrix m(5, 2);
  m.col(0) << 1, 1, 1, 1, 1;
  m.col(1) << 1, 1, 1, -1, -1;
  const PointSet exact = PointSet::exact_scaled(8, std::move(m));
  CHECK(exact.squared_distance_scaled(0, 1) == 8);
  CHECK(exact.unit_pair(0, 1));
  CHECK(exact.squared_distance_scaled(0, 0) == 0);

  const PointSet fl = floating_points({{0.0, 0.0}, {3.0, 4.0}});
  CHECK(fl.squared_distance(0, 1) == doctest::Approx(25.0).epsilon(1e-15));
}

TEST_CASE("degenerate point sets are rejected") {
  ExactMatrix dup(2, 2);
  dup.col(0) << 3, 4;
  dup.col(1) << 3, 4;
  CHECK_THROWS_AS(PointSet::exact_scaled(4, std::move(dup)), std::invalid_argument);

  Eigen::MatrixXd close(2, 2);
  close.col(0) << 0.0, 0.0;
  close.col(1) << 1e-12, 0.0;
  CHECK_THROWS_AS(PointSet::floating(1e-9, std::move(close)), std::invalid_argument);
}

TEST_CASE("unit-distance graphs") {
  const PointSet spindle = moser_spindle_points();
  const Graph udg = unit_distance_graph(spindle);
  CHECK(udg.order() == 7);
  CHECK(udg.edge_count() == 11);
  CHECK(canonical_label(udg) == canonical_label(moser_spindle_graph()));

  CHECK_FALSE(has_triangle(complement(unit_distance_graph(larman_rogers(5)))));

  const PointSet far = floating_points({{0.0}, {2.0}});
  CHECK(unit_distance_graph(far).edge_count() == 0);

  Eigen::MatrixXd many(1, 65);
  for (int i = 0; i < 65; ++i) many(0, i) = 3.0 * i;
  const PointSet crowd = PointSet::floating(kDefaultTolerance, std::move(many));
  CHECK_THROWS_AS(unit_distance_graph(crowd), std::invalid_argument);
}

TEST_CASE("almost-equidistance verification") {
  CHECK(is_almost_equidistant(two_simplex_construction(3)).ok);
  CHECK(is_almost_equidistant(larman_rogers(8)).ok);

  const PointSet collinear = floating_points({{0.0}, {2.0}, {-2.0}});
  const VerificationReport report = is_almost_equidistant(collinear);
  CHECK_FALSE(report.ok);
  REQUIRE(report.witness.has_value());
  CHECK(*report.witness == std::array<int, 3>{0, 1, 2});
  CHECK(report.triples_checked == 1);
}

TEST_CASE("verifier agrees with the complement-triangle characterization") {
  SplitMix64 rng(404);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.next() % 6);
    const int d = 2 + static_cast<int>(rng.next() % 3);
    Eigen::MatrixXd m(d, n);
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < d; ++r) m(r, j) = rng.uniform(-1.0, 1.0);
    const PointSet ps = PointSet::floating(kDefaultTolerance, std::move(m));
    const bool ok = is_almost_equidistant(ps).ok;
    const bool characterized = !has_triangle(complement(unit_distance_graph(ps)));
    if (ok != characterized) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("clique spheres") {
  const PointSet pair = floating_points({{0.0, 0.0}, {1.0, 0.0}});
  const std::vector<int> both = {0, 1};
  const SphereDescription s2 = clique_sphere(pair, both);
  CHECK(s2.radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(s2.sphere_dim == 0);
  CHECK(s2.carrier_dim == 1);
  CHECK(s2.center(0) == doctest::Approx(0.5));

  // k = d: a 0-sphere whose diameter 2 sqrt((d+1)/(2d)) is never 1.
  for (int d = 2; d <= 6; ++d) {
    Eigen::MatrixXd simplex = simplex_points(d - 1).as_float();
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(d, d);
    padded.topRows(simplex.rows()) = simplex;
    const PointSet ps = PointSet::floating(kDefaultTolerance, std::move(padded));
    std::vector<int> clique(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) clique[static_cast<std::size_t>(i)] = i;
    const SphereDescription sphere = clique_sphere(ps, clique);
    CHECK(sphere.sphere_dim == 0);
    CHECK(std::abs(2.0 * sphere.radius - 1.0) > 0.1);
  }

  ExactMatrix tetra(4, 3);
  tetra.setZero();
  for (int i = 0; i < 3; ++i) tetra(i, i) = 1;
  const PointSet t = PointSet::exact_scaled(2, std::move(tetra));
  const std::vector<int> clique3 = {0, 1, 2};
  CHECK(clique_sphere(t, clique3).radius == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));

  const PointSet notunit = floating_points({{0.0, 0.0}, {2.0, 0.0}});
  CHECK_THROWS_AS(clique_sphere(notunit, both), std::invalid_argument);
}

TEST_CASE("sampled sphere points are unit-distant from the whole clique") {
  SplitMix64 rng(505);
  for (int d = 2; d <= 6; ++d)
    for (int k = 2; k <= d; ++k) {
      Eigen::MatrixXd simplex = simplex_points(k - 1).as_float();  // k unit-clique points in R^k
      Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(d, k);
      padded.topRows(simplex.rows()) = simplex;
      const PointSet ps = PointSet::floating(kDefaultTolerance, std::move(padded));
      std::vector<int> clique(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) clique[static_cast<std::size_t>(i)] = i;
      const SphereDescription sphere = clique_sphere(ps, clique);

      for (int i = 0; i < k; ++i)
        CHECK(std::abs((ps.as_float().col(i) - sphere.center).norm() -
                       std::sqrt((k - 1.0) / (2.0 * k))) < 1e-9);

      for (int sample = 0; sample < 100; ++sample) {
        Eigen::VectorXd u(sphere.carrier_dim);
        for (int r = 0; r < sphere.carrier_dim; ++r) u(r) = rng.gaussian();
        u.normalize();
        const Eigen::VectorXd point = sphere.center + sphere.radius * (sphere.carrier_basis * u);
        for (int i = 0; i < k; ++i)
          CHECK(std::abs((point - ps.as_float().col(i)).norm() - 1.0) < 1e-9);
      }
    }
}

TEST_CASE("realization check") {
  CHECK(realizes(moser_spindle_points(), moser_spindle_graph()));
  CHECK(realizes(moser_spindle_points(), Graph(7)));

  const PointSet square = floating_points({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  CHECK_FALSE(realizes(square, Graph::complete(4)));
  CHECK_THROWS_AS(realizes(square, Graph(5)), std::invalid_argument);
}

TEST_CASE("point JSON round-trips bit-exactly") {
  std::ostringstream exact_out;
  write_pointset_json(exact_out, larman_rogers(6));
  std::istringstream exact_in(exact_out.str());
  const PointSet exact = read_pointset_json(exact_in);
  CHECK(exact.arithmetic() == Arithmetic::ExactScaled);
  CHECK(exact.scale() == 8);
  CHECK(exact.exact_points() == larman_rogers(6).exact_points());

  const PointSet spindle = moser_spindle_points();
  std::ostringstream float_out;
  write_pointset_json(float_out, spindle);
  std::istringstream float_in(float_out.str());
  const PointSet fl = read_pointset_json(float_in);
  CHECK(fl.arithmetic() == Arithmetic::Floating);
  CHECK(fl.tolerance() == spindle.tolerance());
  CHECK(fl.float_points() == spindle.float_points());  // 17 digits round-trip doubles

  std::istringstream bad("{\"dimension\": 2, \"arithmetic\": {\"mode\": \"exact_scaled\", "
                         "\"scale\": 4}, \"points\": [[1, 0.5]]}");
  CHECK_THROWS(read_pointset_json(bad));
}
