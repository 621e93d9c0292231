#include "nu/theorem.hpp"

#include <numeric>
#include <stdexcept>

#include "nu/aut_engine.hpp"
#include "nu/perm_group.hpp"
#include "nu/tangent_graphs.hpp"
#include "nu/unitary.hpp"
#include "nu/util.hpp"

namespace nu {

std::vector<Permutation> wreath_generators(int degree,
                                           const std::vector<std::vector<int>>& blocks) {
  if (blocks.size() < 2) throw std::invalid_argument("need at least two blocks");
  size_t m = blocks[0].size();
  if (m < 2) throw std::invalid_argument("blocks must have at least two elements");
  for (const auto& b : blocks)
    if (b.size() != m) throw std::invalid_argument("blocks must have equal sizes");

  std::vector<Permutation> gens;
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<int> g = id;  // transposition inside the first block
  std::swap(g[blocks[0][0]], g[blocks[0][1]]);
  gens.emplace_back(g);

  g = id;  // full cycle inside the first block
  for (size_t i = 0; i < m; ++i) g[blocks[0][i]] = blocks[0][(i + 1) % m];
  gens.emplace_back(g);

  g = id;  // elementwise swap of the first two blocks
  for (size_t i = 0; i < m; ++i) {
    g[blocks[0][i]] = blocks[1][i];
    g[blocks[1][i]] = blocks[0][i];
  }
  gens.emplace_back(g);

  g = id;  // elementwise cycle of all blocks
  for (size_t b = 0; b < blocks.size(); ++b)
    for (size_t i = 0; i < m; ++i) g[blocks[b][i]] = blocks[(b + 1) % blocks.size()][i];
  gens.emplace_back(g);
  return gens;
}

Theorem1Report run_theorem1(int q, int max_aut_vertices) {
  Theorem1Report rep;
  auto [p, e] = prime_power_decompose(q);
  rep.q = q;
  rep.p = p;
  rep.e = e;

  auto field = make_field(p, e);
  rep.field_modulus = field->modulus_string();
  auto space = std::make_shared<const HermitianSpace>(field, 2);
  TangentGraph nu_graph = build_nu(space);
  rep.vertices = nu_graph.graph.vertex_count();

  AutResult aut = automorphism_group(nu_graph.graph, max_aut_vertices);
  BigInt aut_order = aut.group.order();
  rep.aut_order = aut_order.str();

  if (q == 2) {
    rep.expected_aut_order = "31104";
    rep.aut_order_matches = aut_order == 31104;

    Graph comp = nu_graph.graph.complement();
    auto components = comp.connected_components();
    rep.complement_component_count = int(components.size());
    rep.complement_components_are_k3 = components.size() == 4;
    for (const auto& c : components)
      if (c.size() != 3 || !comp.is_clique(c)) rep.complement_components_are_k3 = false;

    if (rep.complement_components_are_k3) {
      auto wgens = wreath_generators(comp.vertex_count(), components);
      PermGroup wreath(comp.vertex_count(), wgens);
      rep.wreath_order = wreath.order().str();
      rep.wreath_generators_in_aut = true;
      for (const auto& g : wgens)
        if (!aut.group.contains(g)) rep.wreath_generators_in_aut = false;
      rep.confirmed = rep.aut_order_matches && rep.wreath_generators_in_aut &&
                      rep.wreath_order == "31104";
    }
    return rep;
  }

  UnitaryGroup pgu = pgu3(*space);
  UnitaryGroup pgammau = pgammau3(*space);
  rep.pgu_order = pgu.group.order().str();
  rep.pgammau_order = pgammau.group.order().str();
  rep.expected_aut_order = std::to_string(pgammau3_order(p, e));
  rep.aut_order_matches = aut_order == BigInt(pgammau3_order(p, e));

  rep.pgammau_generators_are_automorphisms = true;
  rep.contained_in_aut = true;
  int v = nu_graph.graph.vertex_count();
  for (const auto& map : pgammau.generators) {
    Permutation perm = induced_vertex_permutation(map, nu_graph);
    for (int a = 0; a < v && rep.pgammau_generators_are_automorphisms; ++a)
      for (int b = a + 1; b < v; ++b)
        if (nu_graph.graph.adjacent(a, b) != nu_graph.graph.adjacent(perm(a), perm(b))) {
          rep.pgammau_generators_are_automorphisms = false;
          break;
        }
    if (!aut.group.contains(perm)) rep.contained_in_aut = false;
  }
  rep.orders_equal = aut_order == pgammau.group.order();
  rep.confirmed = rep.aut_order_matches && rep.orders_equal && rep.contained_in_aut &&
                  rep.pgammau_generators_are_automorphisms;
  return rep;
}

}  // namespace nu
