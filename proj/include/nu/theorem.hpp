#pragma once

#include <string>
#include <vector>

#include "nu/perm.hpp"

namespace nu {

// Result of the full pipeline for one q: build NU(3, q^2), compute its
// automorphism group, and confirm the expected group identification —
// PGammaU(3, q) by order equality and generator containment for q > 2,
// or the wreath group of the four complement triangles (order 31104) at
// q = 2. Group orders are decimal strings (they are exact big integers).
struct Theorem1Report {
  int q = 0, p = 0, e = 0;
  long long vertices = 0;
  std::string field_modulus;

  std::string aut_order;
  std::string expected_aut_order;
  bool aut_order_matches = false;

  // q = 2 branch
  int complement_component_count = 0;
  bool complement_components_are_k3 = false;
  std::string wreath_order;
  bool wreath_generators_in_aut = false;

  // q > 2 branch
  std::string pgu_order;
  std::string pgammau_order;
  bool pgammau_generators_are_automorphisms = false;
  bool contained_in_aut = false;
  bool orders_equal = false;

  bool confirmed = false;
};

Theorem1Report run_theorem1(int q, int max_aut_vertices = 600);

// Generators of the wreath product S_m wr S_k acting on k disjoint
// equal-size blocks inside {0..degree-1}: a transposition and a full cycle
// inside the first block, an elementwise swap of the first two blocks, and
// an elementwise cycle of all blocks. Blocks must be sorted.
std::vector<Permutation> wreath_generators(int degree,
                                           const std::vector<std::vector<int>>& blocks);

}  // namespace nu
