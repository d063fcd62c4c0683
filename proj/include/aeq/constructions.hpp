#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aeq/geometry.hpp"
#include "aeq/graph.hpp"

namespace aeq {

/// Vertices of a unit regular d-simplex: the d+1 scaled basis vectors
/// e_i/sqrt(2) of R^{d+1}. Exact (scale 2), ambient dimension d+1.
PointSet simplex_points(int d);

/// Almost-equidistant set of 2d+4 points in R^d (d >= 3): a unit
/// d-simplex S, the reflections x0', x1' of its first two vertices in
/// the opposite facets, and a rotated copy of S. The rotation acts in
/// the plane spanned by c = (x0+x1)/2 and x2 about the midpoint o of
/// x0'x1', through the angle that moves c by exactly 1.
///
/// Point order: x0..xd, rho(x0)..rho(xd), x0', x1'. Floating mode,
/// true d coordinates.
PointSet two_simplex_construction(int d);

/// Almost-equidistant sets built from the 16 odd-positive-sign vertices
/// of the 5-cube scaled by 1/sqrt(8): 16, 18, 20 or 24 points for
/// d = 5, 6, 7, 8. Exact (scale 8); for d >= 6 the extra points use
/// integer coordinates in three auxiliary axes, so the ambient
/// dimension is 8 while the affine span has dimension exactly d.
PointSet larman_rogers(int d);

/// Moser spindle coordinates: two rhombi of unit triangles sharing an
/// apex, turned so the far tips are at distance 1. Point order: apex,
/// then side pair + tip per rhombus.
PointSet moser_spindle_points();

/// The spindle's adjacency on the same vertex order.
Graph moser_spindle_graph();

/// Fixture graphs by name: moser_spindle, biaugmented_pair_3d, G10,
/// G11, G14, square_antiprism, antiprism_minus_vertex,
/// petersen_complement.
Graph named_graph(std::string_view name);

struct NamedFixture {
  std::string name;
  std::optional<Graph> graph;
  std::optional<PointSet> points;
};

NamedFixture named_fixture(std::string_view name);

const std::vector<std::string>& fixture_names();

}  // namespace aeq
