#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "aeq/graph.hpp"

namespace aeq {

enum class Arithmetic { ExactScaled, Floating };

using ExactMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Ordered point list in R^d, one point per column.
///
/// Exact-scaled mode stores integer coordinates with a declared scale s:
/// the real point is column/sqrt(s), so a pair is at unit distance
/// exactly when its integer squared distance equals s. Floating mode
/// stores doubles and compares squared distances against 1 within the
/// declared tolerance.
class PointSet {
 public:
  static PointSet exact_scaled(std::int64_t scale, ExactMatrix points);
  static PointSet floating(double tolerance, Eigen::MatrixXd points);

  Arithmetic arithmetic() const { return arithmetic_; }
  std::int64_t scale() const { return scale_; }
  double tolerance() const { return tolerance_; }

  int dimension() const;
  int size() const;

  const ExactMatrix& exact_points() const { return exact_; }
  const Eigen::MatrixXd& float_points() const { return floating_; }

  /// Real coordinates regardless of mode (exact: columns / sqrt(scale)).
  Eigen::MatrixXd as_float() const;

  /// Squared real distance between points i and j.
  double squared_distance(int i, int j) const;

  /// Integer squared distance in scaled units; exact mode only.
  std::int64_t squared_distance_scaled(int i, int j) const;

  bool unit_pair(int i, int j) const;

 private:
  PointSet() = default;

  Arithmetic arithmetic_ = Arithmetic::Floating;
  std::int64_t scale_ = 1;
  double tolerance_ = 1e-9;
  ExactMatrix exact_;
  Eigen::MatrixXd floating_;
};

constexpr double kDefaultTolerance = 1e-9;

Graph unit_distance_graph(const PointSet& ps);

struct VerificationReport {
  bool ok = false;
  std::optional<std::array<int, 3>> witness;  // lexicographically first bad triple
  long long unit_pairs = 0;
  long long triples_checked = 0;
};

/// Checks that among any three points some pair is at unit distance.
VerificationReport is_almost_equidistant(const PointSet& ps);

/// The set of points at unit distance from every vertex of a unit
/// k-clique: a (d-k)-sphere of radius sqrt((k+1)/(2k)) about the
/// centroid, inside the affine space through the centroid orthogonal to
/// the clique's span.
struct SphereDescription {
  Eigen::VectorXd center;
  double radius = 0.0;
  int sphere_dim = 0;
  int carrier_dim = 0;
  Eigen::MatrixXd carrier_basis;  // d x carrier_dim, orthonormal
};

SphereDescription clique_sphere(const PointSet& ps, std::span<const int> clique);

/// True iff every edge of g joins a unit-distance pair of ps (non-edges
/// are unconstrained).
bool realizes(const PointSet& ps, const Graph& g);

PointSet read_pointset_json(std::istream& in);
PointSet read_pointset_json_file(const std::string& path);
void write_pointset_json(std::ostream& out, const PointSet& ps);

}  // namespace aeq
