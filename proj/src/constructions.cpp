#include "aeq/constructions.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace aeq {

PointSet simplex_points(int d) {
  if (d < 1) throw std::invalid_argument("simplex_points: d must be >= 1");
  // e_i/sqrt(2) has integer coordinates at scale 2 and all pairwise
  // squared distances equal to the scale.
  ExactMatrix m = ExactMatrix::Zero(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) m(i, i) = 1;
  return PointSet::exact_scaled(2, std::move(m));
}

PointSet two_simplex_construction(int d) {
  if (d < 3) throw std::invalid_argument("two_simplex_construction: d must be >= 3");
  const int ambient = d + 1;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Eigen::MatrixXd simplex = Eigen::MatrixXd::Zero(ambient, d + 1);
  for (int i = 0; i <= d; ++i) simplex(i, i) = inv_sqrt2;
  const Eigen::VectorXd sum = simplex.rowwise().sum();

  auto reflect_apex = [&](int i) -> Eigen::VectorXd {
    return (2.0 / d) * sum - (1.0 + 2.0 / d) * simplex.col(i);
  };
  const Eigen::VectorXd apex0 = reflect_apex(0);
  const Eigen::VectorXd apex1 = reflect_apex(1);
  const Eigen::VectorXd origin = 0.5 * (apex0 + apex1);
  const Eigen::VectorXd mid = 0.5 * (simplex.col(0) + simplex.col(1));

  // Rotation plane V = span(c - o, x2 - o), orthonormalized.
  const Eigen::VectorXd u1 = (mid - origin).normalized();
  Eigen::VectorXd u2 = simplex.col(2) - origin;
  u2 -= u1.dot(u2) * u1;
  u2.normalize();

  // Turn until the midpoint c travels a chord of exactly 1.
  const double ring_radius = (mid - origin).norm();
  const double angle = 2.0 * std::asin(1.0 / (2.0 * ring_radius));
  const double cos_a = std::cos(angle), sin_a = std::sin(angle);

  auto rotate = [&](const Eigen::VectorXd& p) -> Eigen::VectorXd {
    const Eigen::VectorXd v = p - origin;
    const double a = u1.dot(v), b = u2.dot(v);
    const Eigen::VectorXd rest = v - a * u1 - b * u2;
    return origin + (a * cos_a - b * sin_a) * u1 + (a * sin_a + b * cos_a) * u2 + rest;
  };

  Eigen::MatrixXd points(ambient, 2 * d + 4);
  for (int i = 0; i <= d; ++i) points.col(i) = simplex.col(i);
  for (int i = 0; i <= d; ++i) points.col(d + 1 + i) = rotate(simplex.col(i));
  points.col(2 * d + 2) = apex0;
  points.col(2 * d + 3) = apex1;

  // Every point lies in the hyperplane of the simplex; re-express in an
  // orthonormal basis of its direction space to get true d coordinates.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::VectorXd::Ones(ambient), Eigen::ComputeFullU);
  const Eigen::MatrixXd basis = svd.matrixU().rightCols(d);
  Eigen::MatrixXd reduced = basis.transpose() * (points.colwise() - origin);
  return PointSet::floating(kDefaultTolerance, std::move(reduced));
}

PointSet larman_rogers(int d) {
  if (d < 5 || d > 8) throw std::invalid_argument("larman_rogers: d must be 5, 6, 7 or 8");
  const int rows = d == 5 ? 5 : 8;
  int cols = 16;
  if (d == 6) cols += 2;
  if (d == 7) cols += 4;
  if (d == 8) cols += 8;
  ExactMatrix m = ExactMatrix::Zero(rows, cols);

  int col = 0;
  for (int v = 0; v < 32; ++v) {
    if (std::popcount(static_cast<unsigned>(v)) % 2 == 0) continue;  // odd positive signs
    for (int r = 0; r < 5; ++r) m(r, col) = (v >> r) & 1 ? 1 : -1;
    ++col;
  }

  // The added points are orthogonal to the cube's 5-space. Norms that
  // would be irrational on a single axis (sqrt 3, sqrt 2 after scaling)
  // are realized as (1,1,1) and (1,1) blocks on the auxiliary axes.
  if (d == 6) {
    for (int s : {1, -1}) {
      m(5, col) = m(6, col) = m(7, col) = s;
      ++col;
    }
  } else if (d == 7) {
    for (int s : {1, -1})
      for (int t : {1, -1}) {
        m(5, col) = m(6, col) = s;
        m(7, col) = t;
        ++col;
      }
  } else if (d == 8) {
    for (int v = 0; v < 8; ++v) {
      for (int r = 0; r < 3; ++r) m(5 + r, col) = (v >> r) & 1 ? 1 : -1;
      ++col;
    }
  }
  return PointSet::exact_scaled(8, std::move(m));
}

PointSet moser_spindle_points() {
  const double half_turn = std::asin(1.0 / (2.0 * std::sqrt(3.0)));
  Eigen::MatrixXd m(2, 7);
  m.col(0).setZero();
  int col = 1;
  for (double phi : {-half_turn, half_turn}) {
    const Eigen::Vector2d u(std::cos(phi), std::sin(phi));
    const Eigen::Vector2d perp(-u.y(), u.x());
    m.col(col++) = std::sqrt(3.0) / 2.0 * u + 0.5 * perp;
    m.col(col++) = std::sqrt(3.0) / 2.0 * u - 0.5 * perp;
    m.col(col++) = std::sqrt(3.0) * u;
  }
  return PointSet::floating(kDefaultTolerance, std::move(m));
}

Graph moser_spindle_graph() {
  return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6},
                               {3, 6}});
}

namespace {

Graph square_antiprism_graph() {
  Graph g(8);
  for (int i = 0; i < 4; ++i) {
    g.add_edge(i, (i + 1) % 4);
    g.add_edge(4 + i, 4 + (i + 1) % 4);
    g.add_edge(i, 4 + i);
    g.add_edge(i, 4 + (i + 1) % 4);
  }
  return g;
}

Graph antiprism_minus_vertex_graph() {
  const Graph full = square_antiprism_graph();
  Graph g(7);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (full.has_edge(i, j)) g.add_edge(i, j);
  return g;
}

// Cross-polytope on p0..p7 (diagonals p_i p_{i+4} absent) with edge
// p2p4 removed, plus apexes p8, p9 over two opposite cliques.
Graph g10_graph() {
  Graph g(10);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (j - i != 4) g.add_edge(i, j);
  g.remove_edge(2, 4);
  for (auto [i, j] : {std::pair{8, 0}, {8, 1}, {8, 2}, {8, 3}, {8, 9},
                      {9, 2}, {9, 3}, {9, 4}, {9, 5}})
    g.add_edge(i, j);
  return g;
}

Graph petersen_complement_graph() {
  Graph petersen(10);
  for (int i = 0; i < 5; ++i) {
    petersen.add_edge(i, (i + 1) % 5);          // outer cycle
    petersen.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    petersen.add_edge(i, 5 + i);                // spokes
  }
  return complement(petersen);
}

}  // namespace

Graph named_graph(std::string_view name) {
  if (name == "moser_spindle") return moser_spindle_graph();
  if (name == "biaugmented_pair_3d") return unit_distance_graph(two_simplex_construction(3));
  if (name == "G10") return g10_graph();
  if (name == "G11") return Graph::circulant(11, {1, 2, 3});
  if (name == "G14") return Graph::circulant(14, {2, 3, 5, 6});
  if (name == "square_antiprism") return square_antiprism_graph();
  if (name == "antiprism_minus_vertex") return antiprism_minus_vertex_graph();
  if (name == "petersen_complement") return petersen_complement_graph();
  throw std::invalid_argument("named_graph: unknown name \"" + std::string(name) + "\"");
}

NamedFixture named_fixture(std::string_view name) {
  NamedFixture f;
  f.name = std::string(name);
  f.graph = named_graph(name);
  if (name == "moser_spindle") f.points = moser_spindle_points();
  if (name == "biaugmented_pair_3d") f.points = two_simplex_construction(3);
  return f;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "moser_spindle",     "biaugmented_pair_3d",    "G10",
      "G11",               "G14",                    "square_antiprism",
      "antiprism_minus_vertex", "petersen_complement"};
  return names;
}

}  // namespace aeq
