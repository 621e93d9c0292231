#pragma once

#include <cstdint>
#include <random>

#include "nu/graph.hpp"
#include "nu/srg.hpp"

namespace nu {

// Independent oracles used by the self-test and acceptance suites. These
// deliberately avoid the main implementation paths: the automorphism count
// enumerates all v! permutations, the SRG measurement walks adjacency lists,
// and the eigenvalue multiplicities come from exact integer rank.

// Number of automorphisms by filtering every permutation of the vertices.
// Capped at 10 vertices.
long long brute_force_aut_order(const Graph& g);

// Common-neighbour counting with plain adjacency lists and no bitsets.
SrgMeasurement naive_measure_srg(const Graph& g);

// Multiplicity of `eigenvalue` in the adjacency spectrum, computed as
// v - rank(A - eigenvalue*I) with fraction-free (Bareiss) elimination over
// arbitrary-precision integers.
long long exact_eigen_multiplicity(const Graph& g, long long eigenvalue);

// Erdos-Renyi style random graph; edge_permille out of 1000.
Graph random_graph(std::mt19937_64& rng, int v, int edge_permille);

// Uniformly random relabeling of g drawn from rng.
Graph random_relabeling(std::mt19937_64& rng, const Graph& g);

}  // namespace nu
