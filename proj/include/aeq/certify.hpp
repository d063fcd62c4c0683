#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <utility>

namespace aeq {

/// trace(A)^2 / sum of squared entries, a lower bound on the rank of any
/// non-zero symmetric real matrix.
double rank_lower_bound(const Eigen::MatrixXd& a);

/// A family w_1..w_n of unit vectors with all pairwise inner products
/// equal to epsilon, together with the orthonormal basis e_1..e_n
/// obtained by unskewing it: w_i = sqrt(1-eps) (e_i + lambda e) with
/// e = sum e_j and lambda = (-1 + sqrt(1 + eps n/(1-eps)))/n.
struct SkewBasisInstance {
  int n = 0;
  double epsilon = 0.0;
  double lambda = 0.0;
  Eigen::MatrixXd w;      // n x n, one vector per column
  Eigen::MatrixXd basis;  // n x n, e_i per column
  Eigen::VectorXd e;      // sum of basis columns
};

/// Builds the instance by generating t seed vectors with the prescribed
/// Gram matrix, extending them one at a time through the intersection of
/// the constraint hyperplanes with the unit sphere, then unskewing.
SkewBasisInstance build_skew_basis(int n, double epsilon, int t, std::uint64_t seed);

/// Both sides of the identity
///   sum_j (<x,w_j> - eps)^2
///     = (1-eps)(|x|^2 - eps) + eps (<x,e> - sqrt(1+(n-1)eps))^2,
/// computed independently.
std::pair<double, double> skew_identity_sides(const SkewBasisInstance& inst,
                                              const Eigen::VectorXd& x);

/// Best known bounds on the maximum size of an almost-equidistant set
/// in R^d.
struct BoundsReport {
  long long d = 0;
  long long lower = 0;          // largest known construction
  long long upper = 0;          // best known upper bound
  long long ramsey_upper = 0;   // R(d+2,3) - 1
  bool ramsey_is_estimate = false;  // true when the binomial estimate was used
  double asymptotic_upper = 0;  // 4 d^{3/2} + 4 sqrt(d)
};

BoundsReport known_bounds(long long d);

/// Aligned text table of lower/upper bound rows for d = 1..max_d.
void write_bounds_table(std::ostream& out, int max_d);
void write_bounds_json(std::ostream& out, const BoundsReport& report);

}  // namespace aeq
