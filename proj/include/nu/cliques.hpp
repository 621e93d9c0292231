#pragma once

#include <map>
#include <vector>

#include "nu/tangent_graphs.hpp"

namespace nu {

// All maximal cliques, via pivoted Bron-Kerbosch over bitset candidate and
// exclusion sets with degeneracy vertex ordering. Output is the full sorted
// list (each clique sorted, cliques in lexicographic order), so runs are
// reproducible. Throws ResourceCapError above max_vertices.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_vertices = 1024);

struct CliqueCensus {
  long long tangent_type = 0;   // cliques that are the non-isotropic points of a tangent line
  long long two_line_type = 0;  // everything else
  std::map<int, long long> by_size;
  std::vector<int> tangent_clique_ids;  // indices into the input clique list
};

// Geometric classification of the maximal cliques of a labeled NU graph
// (n = 2). A clique is tangent-type iff its vertices are collinear, which
// identifies the class correctly even at q = 2 where the two clique sizes
// coincide. Throws std::invalid_argument on an unlabeled or Gamma graph.
CliqueCensus classify_cliques(const TangentGraph& t,
                              const std::vector<std::vector<int>>& cliques);

enum class TripleType { concurrent, triangle, other };

// Configuration type of three distinct tangent-type cliques:
//   concurrent - all three pairwise intersections are the same single vertex
//   triangle   - three distinct single-vertex pairwise intersections
//   other      - some pairwise intersection is empty, or a mixed pattern
// Throws std::invalid_argument if a pairwise intersection has more than one
// vertex (the inputs cannot be distinct line cliques).
TripleType tangent_triple_type(const std::vector<int>& c1, const std::vector<int>& c2,
                               const std::vector<int>& c3);

}  // namespace nu
