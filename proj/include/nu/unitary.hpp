#pragma once

#include <array>
#include <vector>

#include "nu/geometry.hpp"
#include "nu/perm.hpp"
#include "nu/perm_group.hpp"
#include "nu/tangent_graphs.hpp"

namespace nu {

// Semilinear collineation of PG(2, q^2): first apply the field automorphism
// x -> x^(p^frob) coordinate-wise, then multiply by the matrix, then
// renormalize. Matrix entries are field element codes, row-major.
struct SemilinearMap {
  std::array<std::array<int, 3>, 3> m{};
  int frob = 0;

  static SemilinearMap identity();
};

// True iff the map stabilizes the Hermitian variety of sum_i X_i^(q+1):
// conj-transpose(M) * M must be c*I with c a nonzero element of GF(q).
// The field-automorphism part never matters since the form has prime-field
// coefficients. Throws std::invalid_argument on a singular matrix.
bool unitary_check(const Field& f, const SemilinearMap& m);

// Image of a point under the map.
int apply_semilinear(const HermitianSpace& space, const SemilinearMap& m, int point_idx);

// Point permutation of PG(2, q^2) induced by the map.
Permutation point_permutation(const HermitianSpace& space, const SemilinearMap& m);

struct UnitaryGroup {
  std::vector<SemilinearMap> generators;  // certified generating maps
  PermGroup group;                        // action on all points of PG(2, q^2)
};

// |PGU(3,q)| = q^3 (q^2-1)(q^3+1); |PGammaU(3,q)| = 2e * |PGU(3,q)|.
long long pgu3_order(int q);
long long pgammau3_order(int p, int e);

// PGU(3,q) as an explicit permutation group on the points of PG(2, q^2).
// Candidate generators (coordinate permutations, norm-one diagonals, and the
// exhaustively enumerated GU(2,q) embedded on the first two coordinates) are
// inserted only when they grow the group; the result is certified against
// the order formula and the construction throws if the certificate fails.
UnitaryGroup pgu3(const HermitianSpace& space);

// PGammaU(3,q): PGU(3,q) extended by the Frobenius collineation x -> x^p.
UnitaryGroup pgammau3(const HermitianSpace& space);

// Restriction of the map to the vertices of a NU graph built on the same
// space. Throws if the map is not unitary; a unitary map can never send a
// vertex to an isotropic point.
Permutation induced_vertex_permutation(const SemilinearMap& m, const TangentGraph& t);

// Action on the isotropic points (indexed by position in
// space.isotropic_points()); used for the 2-transitivity checks.
Permutation induced_isotropic_permutation(const SemilinearMap& m, const HermitianSpace& space);

}  // namespace nu
