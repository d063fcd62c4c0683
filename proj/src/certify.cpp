#include "aeq/certify.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "aeq/random.hpp"

namespace aeq {

double rank_lower_bound(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rank_lower_bound: matrix not square");
  if (!a.isApprox(a.transpose(), 1e-12))
    throw std::invalid_argument("rank_lower_bound: matrix not symmetric");
  const double denom = a.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("rank_lower_bound: zero matrix");
  const double trace = a.trace();
  return trace * trace / denom;
}

SkewBasisInstance build_skew_basis(int n, double epsilon, int t, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("build_skew_basis: n must be >= 1");
  if (t < 1 || t > n) throw std::invalid_argument("build_skew_basis: need 1 <= t <= n");
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::invalid_argument("build_skew_basis: epsilon must be in [0,1)");

  // Seed family: symmetric square root of the target Gram matrix
  // (1-eps)I + eps J, embedded in the first t coordinates, then spun by
  // a random rotation. aI + bJ works since the Gram has eigenvalues
  // 1+(t-1)eps on the all-ones vector and 1-eps elsewhere.
  const double a = std::sqrt(1.0 - epsilon);
  const double b = (std::sqrt(1.0 + (t - 1) * epsilon) - a) / t;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  w.topLeftCorner(t, t) = a * Eigen::MatrixXd::Identity(t, t) +
                          b * Eigen::MatrixXd::Ones(t, t);

  SplitMix64 rng(seed);
  Eigen::MatrixXd noise(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) noise(i, j) = rng.gaussian();
  const Eigen::MatrixXd rotation = Eigen::HouseholderQR<Eigen::MatrixXd>(noise).householderQ();
  w.leftCols(t) = rotation * w.leftCols(t);

  for (int i = 0; i < t; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(w.col(i).dot(w.col(j)) - epsilon) > 1e-10)
        throw std::logic_error("build_skew_basis: infeasible start family");

  // Extend one vector at a time: the constraints <x, w_j> = eps cut out
  // an affine subspace containing eps/(1+(i-1)eps) * sum w_j, a point
  // strictly inside the unit ball; walk from it along the first
  // coordinate axis that survives projection onto the null space until
  // the unit sphere is hit.
  for (int i = t; i < n; ++i) {
    const auto fixed = w.leftCols(i);
    const Eigen::VectorXd anchor =
        (epsilon / (1.0 + (i - 1) * epsilon)) * fixed.rowwise().sum();

    const Eigen::MatrixXd gram = fixed.transpose() * fixed;
    const auto solver = gram.ldlt();
    Eigen::VectorXd direction;
    for (int axis = 0; axis < n; ++axis) {
      Eigen::VectorXd candidate = Eigen::VectorXd::Unit(n, axis);
      candidate -= fixed * solver.solve(fixed.transpose() * candidate);
      if (candidate.norm() > 1e-6) {
        direction = candidate.normalized();
        break;
      }
    }
    if (direction.size() == 0)
      throw std::logic_error("build_skew_basis: no free direction left");

    const double reach2 = 1.0 - anchor.squaredNorm();
    if (reach2 <= 0) throw std::logic_error("build_skew_basis: anchor left the unit ball");
    w.col(i) = anchor + std::sqrt(reach2) * direction;
  }

  SkewBasisInstance inst;
  inst.n = n;
  inst.epsilon = epsilon;
  inst.lambda = (-1.0 + std::sqrt(1.0 + epsilon * n / (1.0 - epsilon))) / n;
  inst.w = std::move(w);
  inst.e = inst.w.rowwise().sum() / std::sqrt(1.0 + (n - 1) * epsilon);
  inst.basis.resize(n, n);
  for (int i = 0; i < n; ++i)
    inst.basis.col(i) = inst.w.col(i) / std::sqrt(1.0 - epsilon) - inst.lambda * inst.e;
  return inst;
}

std::pair<double, double> skew_identity_sides(const SkewBasisInstance& inst,
                                              const Eigen::VectorXd& x) {
  if (x.size() != inst.n) throw std::invalid_argument("skew_identity_sides: wrong dimension");
  double lhs = 0.0;
  for (int j = 0; j < inst.n; ++j) {
    const double gap = x.dot(inst.w.col(j)) - inst.epsilon;
    lhs += gap * gap;
  }
  const double root = std::sqrt(1.0 + (inst.n - 1) * inst.epsilon);
  const double centered = x.dot(inst.e) - root;
  const double rhs = (1.0 - inst.epsilon) * (x.squaredNorm() - inst.epsilon) +
                     inst.epsilon * centered * centered;
  return {lhs, rhs};
}

namespace {

// Exact values for d <= 9; R(d+2,3) from the known small Ramsey numbers.
constexpr long long kLower[] = {0, 4, 7, 10, 12, 16, 18, 20, 24, 24};
constexpr long long kUpper[] = {0, 4, 7, 10, 13, 20, 26, 34, 41, 49};
constexpr long long kRamsey[] = {0, 6, 9, 14, 18, 23, 28, 36, 42, 50};

}  // namespace

BoundsReport known_bounds(long long d) {
  if (d < 1) throw std::invalid_argument("known_bounds: d must be >= 1");
  BoundsReport report;
  report.d = d;
  const long double root = std::sqrt(static_cast<long double>(d));
  report.asymptotic_upper = static_cast<double>(4.0L * (static_cast<long double>(d) * root + root));
  if (d <= 9) {
    report.lower = kLower[d];
    report.upper = kUpper[d];
    report.ramsey_upper = kRamsey[d] - 1;
    report.ramsey_is_estimate = false;
  } else {
    report.lower = 2 * d + 4;
    report.upper = static_cast<long long>(
        std::ceil(4.0L * (static_cast<long double>(d) * root + root)));
    // R(k,3) <= C(k+1, 2); exact values end at small k.
    report.ramsey_upper = (d + 3) * (d + 2) / 2 - 1;
    report.ramsey_is_estimate = true;
  }
  return report;
}

void write_bounds_table(std::ostream& out, int max_d) {
  if (max_d < 1) throw std::invalid_argument("write_bounds_table: max_d must be >= 1");
  const int width = 8;
  out << std::left << std::setw(14) << "d" << std::right;
  for (int d = 1; d <= max_d; ++d) out << std::setw(width) << d;
  out << '\n';
  out << std::left << std::setw(14) << "lower" << std::right;
  for (int d = 1; d <= max_d; ++d) out << std::setw(width) << known_bounds(d).lower;
  out << '\n';
  out << std::left << std::setw(14) << "upper" << std::right;
  for (int d = 1; d <= max_d; ++d) out << std::setw(width) << known_bounds(d).upper;
  out << '\n';
  out << std::left << std::setw(14) << "ramsey_upper" << std::right;
  for (int d = 1; d <= max_d; ++d) out << std::setw(width) << known_bounds(d).ramsey_upper;
  out << '\n';
}

void write_bounds_json(std::ostream& out, const BoundsReport& report) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", report.asymptotic_upper);
  out << "{\"d\": " << report.d << ", \"lower\": " << report.lower
      << ", \"upper\": " << report.upper << ", \"ramsey_upper\": " << report.ramsey_upper
      << ", \"ramsey_is_estimate\": " << (report.ramsey_is_estimate ? "true" : "false")
      << ", \"asymptotic_upper\": " << buf << "}\n";
}

}  // namespace aeq
