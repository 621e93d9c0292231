#include "nu/unitary.hpp"

#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

SemilinearMap SemilinearMap::identity() {
  SemilinearMap s;
  for (int i = 0; i < 3; ++i) s.m[i][i] = 1;
  return s;
}

namespace {

int det3(const Field& F, const std::array<std::array<int, 3>, 3>& m) {
  auto mul3 = [&](int a, int b, int c) { return F.mul(F.mul(a, b), c); };
  int pos = F.add(F.add(mul3(m[0][0], m[1][1], m[2][2]), mul3(m[0][1], m[1][2], m[2][0])),
                  mul3(m[0][2], m[1][0], m[2][1]));
  int neg = F.add(F.add(mul3(m[0][2], m[1][1], m[2][0]), mul3(m[0][0], m[1][2], m[2][1])),
                  mul3(m[0][1], m[1][0], m[2][2]));
  return F.sub(pos, neg);
}

}  // namespace

bool unitary_check(const Field& F, const SemilinearMap& s) {
  if (det3(F, s.m) == 0) throw std::invalid_argument("unitary_check: singular matrix");
  // P = conj-transpose(M) * M; require P = c I with c in GF(q)*.
  int c = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int p = 0;
      for (int k = 0; k < 3; ++k) p = F.add(p, F.mul(F.conj(s.m[k][i]), s.m[k][j]));
      if (i != j) {
        if (p != 0) return false;
      } else if (c < 0) {
        c = p;
      } else if (p != c) {
        return false;
      }
    }
  return c != 0 && F.in_base_subfield(c);
}

int apply_semilinear(const HermitianSpace& space, const SemilinearMap& s, int point_idx) {
  const Field& F = space.field();
  const auto& x = space.point(point_idx);
  std::vector<int> y(3, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      y[i] = F.add(y[i], F.mul(s.m[i][j], F.frobenius(x[j], s.frob)));
  return space.index_of(y);
}

Permutation point_permutation(const HermitianSpace& space, const SemilinearMap& s) {
  if (space.dim() != 2) throw std::invalid_argument("semilinear maps are defined on PG(2, q^2)");
  std::vector<int> img(space.point_count());
  for (int p = 0; p < space.point_count(); ++p) img[p] = apply_semilinear(space, s, p);
  return Permutation(std::move(img));
}

long long pgu3_order(int q) {
  long long q3 = (long long)q * q * q;
  return q3 * ((long long)q * q - 1) * (q3 + 1);
}

long long pgammau3_order(int p, int e) {
  int q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  return 2LL * e * pgu3_order(q);
}

namespace {

UnitaryGroup build_unitary(const HermitianSpace& space, bool with_frobenius) {
  if (space.dim() != 2) throw std::invalid_argument("unitary construction needs n = 2");
  const Field& F = space.field();
  int q = F.q();
  long long target = with_frobenius ? pgammau3_order(F.characteristic(), F.extension_exponent())
                                    : pgu3_order(q);

  UnitaryGroup ug{{}, PermGroup(space.point_count())};
  auto offer = [&](const SemilinearMap& s) {
    if (BigInt(target) == ug.group.order()) return;
    Permutation perm = point_permutation(space, s);
    if (perm.is_identity()) return;
    if (ug.group.contains(perm)) return;
    ug.group.add_generator(perm);
    ug.generators.push_back(s);
  };

  // coordinate transpositions and the 3-cycle
  {
    SemilinearMap swap01;
    swap01.m[0][1] = swap01.m[1][0] = swap01.m[2][2] = 1;
    offer(swap01);
    SemilinearMap cyc;
    cyc.m[1][0] = cyc.m[2][1] = cyc.m[0][2] = 1;
    offer(cyc);
  }
  // diag(a, 1, 1) for norm-one a
  for (int a : F.norm_one_elements()) {
    SemilinearMap d;
    d.m[0][0] = a;
    d.m[1][1] = d.m[2][2] = 1;
    offer(d);
  }
  // GU(2,q) embedded on the first two coordinates: [[a,b],[c,d]] with
  // conj-transpose * itself = I, i.e. norm(a)+norm(c) = norm(b)+norm(d) = 1
  // and conj(a)b + conj(c)d = 0. Exhaustive over all q^8 matrices; the
  // group has only q(q+1)(q^2-1) elements so the filter is cheap.
  int N = F.size();
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) {
      if (F.add(F.norm(a), F.norm(c)) != 1) continue;
      for (int b = 0; b < N; ++b)
        for (int d = 0; d < N; ++d) {
          if (F.add(F.norm(b), F.norm(d)) != 1) continue;
          if (F.add(F.mul(F.conj(a), b), F.mul(F.conj(c), d)) != 0) continue;
          SemilinearMap s;
          s.m[0][0] = a;
          s.m[0][1] = b;
          s.m[1][0] = c;
          s.m[1][1] = d;
          s.m[2][2] = 1;
          offer(s);
        }
    }
  if (with_frobenius) {
    SemilinearMap fr = SemilinearMap::identity();
    fr.frob = 1;
    offer(fr);
  }
  if (ug.group.order() != BigInt(target))
    throw std::logic_error("unitary group certification failed: order " +
                           ug.group.order().str() + " != " + std::to_string(target));
  return ug;
}

}  // namespace

UnitaryGroup pgu3(const HermitianSpace& space) { return build_unitary(space, false); }

UnitaryGroup pgammau3(const HermitianSpace& space) { return build_unitary(space, true); }

Permutation induced_vertex_permutation(const SemilinearMap& s, const TangentGraph& t) {
  if (!t.space || t.space->dim() != 2)
    throw std::invalid_argument("induced_vertex_permutation needs an NU(3, q^2) graph");
  const HermitianSpace& S = *t.space;
  if (!unitary_check(S.field(), s))
    throw std::invalid_argument("map does not stabilize the Hermitian variety");
  std::vector<int> img(t.vertex_point.size());
  for (size_t v = 0; v < t.vertex_point.size(); ++v) {
    int image_point = apply_semilinear(S, s, t.vertex_point[v]);
    int image_vertex = t.point_vertex[image_point];
    if (image_vertex < 0)
      throw std::logic_error("unitary map sent a vertex to an excluded point");
    img[v] = image_vertex;
  }
  return Permutation(std::move(img));
}

Permutation induced_isotropic_permutation(const SemilinearMap& s, const HermitianSpace& space) {
  const auto& iso = space.isotropic_points();
  std::vector<int> rank(space.point_count(), -1);
  for (int i = 0; i < int(iso.size()); ++i) rank[iso[i]] = i;
  std::vector<int> img(iso.size());
  for (int i = 0; i < int(iso.size()); ++i) {
    int image = apply_semilinear(space, s, iso[i]);
    if (rank[image] < 0) throw std::logic_error("map does not stabilize the isotropic set");
    img[i] = rank[image];
  }
  return Permutation(std::move(img));
}

}  // namespace nu
