#include "nu/tangent_graphs.hpp"

#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

namespace {

std::shared_ptr<const HermitianSpace> space_for(int n, int q) {
  auto [p, e] = prime_power_decompose(q);
  return std::make_shared<const HermitianSpace>(make_field(p, e), n);
}

TangentGraph build(std::shared_ptr<const HermitianSpace> space, bool include_isotropic) {
  const HermitianSpace& S = *space;
  int P = S.point_count();
  TangentGraph t;
  t.space = std::move(space);
  t.n = S.dim();
  t.q = S.q();
  t.includes_isotropic = include_isotropic;
  t.point_vertex.assign(P, -1);
  for (int p = 0; p < P; ++p) {
    if (!include_isotropic && S.isotropic(p)) continue;
    t.point_vertex[p] = int(t.vertex_point.size());
    t.vertex_point.push_back(p);
  }
  Graph g(int(t.vertex_point.size()));
  std::vector<int> members;
  for (const Line& l : S.lines()) {
    if (l.cls != LineClass::tangent) continue;
    members.clear();
    for (int p : l.points)
      if (t.point_vertex[p] >= 0) members.push_back(t.point_vertex[p]);
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) g.add_edge(members[i], members[j]);
  }
  t.graph = std::move(g);
  return t;
}

}  // namespace

TangentGraph build_nu(std::shared_ptr<const HermitianSpace> space) {
  if (space->dim() < 2) throw std::invalid_argument("build_nu: n must be >= 2");
  return build(std::move(space), false);
}

TangentGraph build_nu(int n, int q) { return build_nu(space_for(n, q)); }

TangentGraph build_gamma(std::shared_ptr<const HermitianSpace> space) {
  if (space->dim() < 2) throw std::invalid_argument("build_gamma: n must be >= 2");
  return build(std::move(space), true);
}

TangentGraph build_gamma(int n, int q) { return build_gamma(space_for(n, q)); }

}  // namespace nu
