#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <vector>

#include "nu/perm.hpp"

namespace nu {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group represented by a base and strong generating set,
// maintained with the deterministic Schreier-Sims procedure. Supports
// incremental generator insertion, exact order, membership testing,
// orbits and k-transitivity checks. Immutable operations are safe for
// concurrent reads; add_generator is not.
class PermGroup {
public:
  // seed_base points are installed as the leading base points before any
  // generator is processed (useful to force stabilizer-chain structure,
  // e.g. base 0,1,2 for transitivity checks).
  explicit PermGroup(int degree, std::vector<int> seed_base = {});
  PermGroup(int degree, const std::vector<Permutation>& generators,
            std::vector<int> seed_base = {});

  int degree() const { return degree_; }

  // Returns true if the group grew. Identity and existing members are
  // ignored.
  bool add_generator(const Permutation& g);

  const std::vector<Permutation>& generators() const { return input_gens_; }
  const std::deque<Permutation>& strong_generators() const { return strong_gens_; }
  std::vector<int> base() const;

  BigInt order() const;
  bool contains(const Permutation& g) const;
  std::vector<long long> fundamental_orbit_sizes() const;

  // Orbit partition of {0..degree-1} under the group, cells sorted and
  // ordered by smallest element.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  // Exact k-transitivity via the stabilizer chain: the group is
  // k-transitive iff the first k fundamental orbits relative to base
  // 0,1,...,k-1 have sizes d, d-1, ..., d-k+1.
  bool is_k_transitive(int k) const;

private:
  struct Level {
    int base_point = -1;
    std::vector<int> gen_idx;           // strong generators fixing the prefix
    std::vector<int> orbit;             // discovery order, orbit[0] = base_point
    std::vector<int> orbit_pos;         // point -> 1 + position, 0 if absent
    std::vector<std::vector<int>> transversal;  // by position: t with t(base)=pt
  };

  void ensure_level_for(const std::vector<int>& moved_hint);
  void recompute_orbit(int level);
  void close_level(int level);
  // Applies transversal inverses along the chain; returns the level where
  // sifting stopped (== levels_.size() on success) and leaves the residue
  // in `buf`.
  int strip(std::vector<int>& buf, int from_level) const;

  int degree_;
  std::vector<int> seed_base_;
  std::vector<Permutation> input_gens_;
  std::deque<Permutation> strong_gens_;  // deque: stable references under growth
  std::deque<Level> levels_;
};

// Free-function spellings used throughout the verification code.
inline PermGroup schreier_sims(int degree, const std::vector<Permutation>& gens,
                               std::vector<int> seed_base = {}) {
  return PermGroup(degree, gens, std::move(seed_base));
}

// Action of the group's generators on a list of vertex sets (e.g. maximal
// cliques): each generator must permute the list setwise, otherwise
// std::invalid_argument is thrown. Returns the homomorphic image as a
// permutation group of degree cliques.size().
PermGroup induced_action_on_sets(const PermGroup& g,
                                 const std::vector<std::vector<int>>& sets);

}  // namespace nu
