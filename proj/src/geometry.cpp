#include "aeq/geometry.hpp"

#include <Eigen/Dense>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace aeq {

namespace {

void check_distinct(const PointSet& ps) {
  for (int i = 0; i < ps.size(); ++i)
    for (int j = i + 1; j < ps.size(); ++j) {
      const bool coincident = ps.arithmetic() == Arithmetic::ExactScaled
                                  ? ps.squared_distance_scaled(i, j) == 0
                                  : ps.squared_distance(i, j) <= ps.tolerance() * ps.tolerance();
      if (coincident)
        throw std::invalid_argument("PointSet: points " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
    }
}

}  // namespace

PointSet PointSet::exact_scaled(std::int64_t scale, ExactMatrix points) {
  if (scale <= 0) throw std::invalid_argument("PointSet: scale must be positive");
  if (points.cols() < 1 || points.rows() < 1)
    throw std::invalid_argument("PointSet: need at least one point and one coordinate");
  PointSet ps;
  ps.arithmetic_ = Arithmetic::ExactScaled;
  ps.scale_ = scale;
  ps.exact_ = std::move(points);
  check_distinct(ps);
  return ps;
}

PointSet PointSet::floating(double tolerance, Eigen::MatrixXd points) {
  if (!(tolerance > 0)) throw std::invalid_argument("PointSet: tolerance must be positive");
  if (points.cols() < 1 || points.rows() < 1)
    throw std::invalid_argument("PointSet: need at least one point and one coordinate");
  PointSet ps;
  ps.arithmetic_ = Arithmetic::Floating;
  ps.tolerance_ = tolerance;
  ps.floating_ = std::move(points);
  check_distinct(ps);
  return ps;
}

int PointSet::dimension() const {
  return static_cast<int>(arithmetic_ == Arithmetic::ExactScaled ? exact_.rows()
                                                                 : floating_.rows());
}

int PointSet::size() const {
  return static_cast<int>(arithmetic_ == Arithmetic::ExactScaled ? exact_.cols()
                                                                 : floating_.cols());
}

Eigen::MatrixXd PointSet::as_float() const {
  if (arithmetic_ == Arithmetic::Floating) return floating_;
  return exact_.cast<double>() / std::sqrt(static_cast<double>(scale_));
}

std::int64_t PointSet::squared_distance_scaled(int i, int j) const {
  if (arithmetic_ != Arithmetic::ExactScaled)
    throw std::logic_error("squared_distance_scaled: floating-mode point set");
  std::int64_t sum = 0;
  for (Eigen::Index r = 0; r < exact_.rows(); ++r) {
    const std::int64_t diff = exact_(r, i) - exact_(r, j);
    sum += diff * diff;
  }
  return sum;
}

double PointSet::squared_distance(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw std::out_of_range("squared_distance: point index out of range");
  if (arithmetic_ == Arithmetic::ExactScaled)
    return static_cast<double>(squared_distance_scaled(i, j)) / static_cast<double>(scale_);
  return (floating_.col(i) - floating_.col(j)).squaredNorm();
}

bool PointSet::unit_pair(int i, int j) const {
  if (arithmetic_ == Arithmetic::ExactScaled) return squared_distance_scaled(i, j) == scale_;
  return std::abs(squared_distance(i, j) - 1.0) <= tolerance_;
}

Graph unit_distance_graph(const PointSet& ps) {
  const int n = ps.size();
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("unit_distance_graph: more than 64 points");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ps.unit_pair(i, j)) g.add_edge(i, j);
  return g;
}

VerificationReport is_almost_equidistant(const PointSet& ps) {
  const int n = ps.size();
  if (n < 1) throw std::invalid_argument("is_almost_equidistant: empty point set");

  VerificationReport report;
  const Graph udg = unit_distance_graph(ps);
  report.unit_pairs = udg.edge_count();

  for (int i = 0; i < n && !report.witness; ++i)
    for (int j = i + 1; j < n && !report.witness; ++j)
      for (int k = j + 1; k < n; ++k) {
        ++report.triples_checked;
        if (!udg.has_edge(i, j) && !udg.has_edge(i, k) && !udg.has_edge(j, k)) {
          report.witness = {i, j, k};
          break;
        }
      }
  report.ok = !report.witness.has_value();
  return report;
}

SphereDescription clique_sphere(const PointSet& ps, std::span<const int> clique) {
  const int k = static_cast<int>(clique.size());
  const int d = ps.dimension();
  if (k < 1) throw std::invalid_argument("clique_sphere: empty clique");
  if (k > d) throw std::invalid_argument("clique_sphere: clique size exceeds dimension");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!ps.unit_pair(clique[static_cast<std::size_t>(a)], clique[static_cast<std::size_t>(b)]))
        throw std::invalid_argument("clique_sphere: indexed points are not a unit clique");

  const Eigen::MatrixXd coords = ps.as_float();
  Eigen::MatrixXd members(d, k);
  for (int a = 0; a < k; ++a) members.col(a) = coords.col(clique[static_cast<std::size_t>(a)]);

  SphereDescription sphere;
  sphere.center = members.rowwise().mean();
  sphere.radius = std::sqrt((k + 1.0) / (2.0 * k));
  sphere.sphere_dim = d - k;
  sphere.carrier_dim = d - k + 1;

  // Orthonormal basis of the orthogonal complement of lin(C - c).
  const Eigen::MatrixXd directions = members.colwise() - sphere.center;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(directions, Eigen::ComputeFullU);
  // A unit clique spans k-1 dimensions; the trailing U columns are the
  // complement.
  sphere.carrier_basis = svd.matrixU().rightCols(sphere.carrier_dim);
  return sphere;
}

bool realizes(const PointSet& ps, const Graph& g) {
  if (ps.size() != g.order()) throw std::invalid_argument("realizes: size mismatch");
  for (int i = 0; i < g.order(); ++i) {
    std::uint64_t nb = Graph::bits_above(g.neighbors(i), i);
    while (nb) {
      const int j = std::countr_zero(nb);
      nb &= nb - 1;
      if (!ps.unit_pair(i, j)) return false;
    }
  }
  return true;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_pointset_json(std::ostream& out, const PointSet& ps) {
  out << "{\n  \"dimension\": " << ps.dimension() << ",\n  \"arithmetic\": {";
  if (ps.arithmetic() == Arithmetic::ExactScaled) {
    out << "\"mode\": \"exact_scaled\", \"scale\": " << ps.scale();
  } else {
    out << "\"mode\": \"floating\", \"tolerance\": " << format_double(ps.tolerance());
  }
  out << "},\n  \"points\": [\n";
  for (int j = 0; j < ps.size(); ++j) {
    out << "    [";
    for (int r = 0; r < ps.dimension(); ++r) {
      if (r) out << ", ";
      if (ps.arithmetic() == Arithmetic::ExactScaled)
        out << ps.exact_points()(r, j);
      else
        out << format_double(ps.float_points()(r, j));
    }
    out << (j + 1 < ps.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
}

PointSet read_pointset_json(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);  // parse_error carries byte position

  const int dim = doc.at("dimension").get<int>();
  const auto& arith = doc.at("arithmetic");
  const std::string mode = arith.at("mode").get<std::string>();
  const auto& points = doc.at("points");
  if (!points.is_array() || points.empty())
    throw std::invalid_argument("point file: \"points\" must be a non-empty array");
  const int count = static_cast<int>(points.size());

  for (const auto& p : points)
    if (!p.is_array() || static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("point file: every point needs exactly 'dimension' coordinates");

  if (mode == "exact_scaled") {
    ExactMatrix m(dim, count);
    for (int j = 0; j < count; ++j)
      for (int r = 0; r < dim; ++r) {
        const auto& v = points[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
        if (!v.is_number_integer())
          throw std::invalid_argument("point file: exact mode requires integer coordinates");
        m(r, j) = v.get<std::int64_t>();
      }
    return PointSet::exact_scaled(arith.at("scale").get<std::int64_t>(), std::move(m));
  }
  if (mode == "floating") {
    Eigen::MatrixXd m(dim, count);
    for (int j = 0; j < count; ++j)
      for (int r = 0; r < dim; ++r)
        m(r, j) = points[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)].get<double>();
    const double tol = arith.contains("tolerance") ? arith.at("tolerance").get<double>()
                                                   : kDefaultTolerance;
    return PointSet::floating(tol, std::move(m));
  }
  throw std::invalid_argument("point file: unknown arithmetic mode \"" + mode + "\"");
}

PointSet read_pointset_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_pointset_json(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace aeq
