#pragma once

#include <vector>

#include "nu/graph.hpp"
#include "nu/perm.hpp"
#include "nu/perm_group.hpp"

namespace nu {

// Ordered partition of {0..v-1} into disjoint covering cells; the state of
// the refinement procedure.
class OrderedPartition {
public:
  explicit OrderedPartition(int v);  // unit partition
  OrderedPartition(int v, std::vector<std::vector<int>> cells);

  int vertex_count() const { return v_; }
  int cell_count() const { return int(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  bool discrete() const;

private:
  int v_;
  std::vector<std::vector<int>> cells_;
};

// Coarsest equitable refinement of p with respect to g: within every cell,
// all vertices have the same number of neighbours in every cell. Sub-cells
// produced by a split are ordered by ascending neighbour count, which keeps
// the output invariant under relabeling. Idempotent.
OrderedPartition refine(const Graph& g, const OrderedPartition& p);

struct AutResult {
  std::vector<Permutation> generators;
  PermGroup group;
  Permutation canonical_labeling;  // maps original vertex -> canonical position
  std::vector<std::vector<int>> orbit_partition;
};

// Full automorphism group and canonical labeling via an
// individualization-refinement search with discovered-automorphism orbit
// pruning and refinement-trace invariants. The traversal prunes a subtree
// only when (a) a known automorphism fixing the branch prefix maps it onto
// an explored sibling, or (b) its trace can neither match the first leaf
// nor beat the best leaf, so the generated group is the full automorphism
// group. Throws ResourceCapError above max_vertices.
AutResult automorphism_group(const Graph& g, int max_vertices = 600);

// Canonically relabeled copy: isomorphic graphs map to identical graphs.
Graph canonical_form(const Graph& g, int max_vertices = 600);

bool is_isomorphic(const Graph& a, const Graph& b, int max_vertices = 600);

}  // namespace nu
