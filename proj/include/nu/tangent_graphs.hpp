#pragma once

#include <memory>
#include <vector>

#include "nu/geometry.hpp"
#include "nu/graph.hpp"

namespace nu {

// A graph built from a Hermitian space, keeping the vertex <-> point maps.
// Vertex order follows the point enumeration order, so independent runs
// produce identical graphs.
struct TangentGraph {
  Graph graph;
  std::shared_ptr<const HermitianSpace> space;
  std::vector<int> vertex_point;  // vertex index -> point index
  std::vector<int> point_vertex;  // point index -> vertex index, -1 if absent
  int n = 0, q = 0;
  bool includes_isotropic = false;  // true for the Gamma variant
};

// NU(n+1, q^2): vertices are the non-isotropic points, two vertices adjacent
// iff the line joining them is tangent to the Hermitian variety.
TangentGraph build_nu(std::shared_ptr<const HermitianSpace> space);
TangentGraph build_nu(int n, int q);

// Gamma_n: same adjacency rule over all points of PG(n, q^2); the isotropic
// points form an independent set, each joined to the q^2 non-isotropic
// points of its unique tangent (for n = 2).
TangentGraph build_gamma(std::shared_ptr<const HermitianSpace> space);
TangentGraph build_gamma(int n, int q);

}  // namespace nu
