#include "nu/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

long long pg_point_count(int n, long long s) {
  long long total = 0, power = 1;
  for (int i = 0; i <= n; ++i) {
    total += power;
    power *= s;
  }
  return total;
}

long long hermitian_point_count(int n, int q) {
  if (n < 1) throw std::invalid_argument("hermitian_point_count: n must be >= 1");
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long qn1 = qn * q;
  long long sn = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  long long num = (qn1 + sn) * (qn - sn);
  long long den = (long long)q * q - 1;
  if (num % den != 0) throw std::logic_error("hermitian point count not integral");
  return num / den;
}

HermitianSpace::HermitianSpace(std::shared_ptr<const Field> field, int n, long long max_points)
    : field_(std::move(field)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("projective dimension must be >= 1");
  if (n_ > 3) throw std::invalid_argument("projective dimension > 3 not supported");
  const Field& F = *field_;
  long long expected = pg_point_count(n_, F.size());
  if (expected > max_points)
    throw ResourceCapError("point count " + std::to_string(expected) + " exceeds cap " +
                           std::to_string(max_points));

  // Enumerate normalized points: for each leading position, the leading
  // coordinate is 1, earlier coordinates are 0, later ones run through all
  // field codes with the last coordinate moving fastest.
  int N = F.size();
  for (int lead = 0; lead <= n_; ++lead) {
    int free_coords = n_ - lead;
    long long combos = 1;
    for (int i = 0; i < free_coords; ++i) combos *= N;
    for (long long c = 0; c < combos; ++c) {
      std::vector<int> coords(n_ + 1, 0);
      coords[lead] = 1;
      long long rest = c;
      for (int i = n_; i > lead; --i) {
        coords[i] = int(rest % N);
        rest /= N;
      }
      points_.push_back(std::move(coords));
    }
  }
  if ((long long)points_.size() != expected) throw std::logic_error("point enumeration mismatch");

  lookup_.reserve(points_.size());
  for (int i = 0; i < int(points_.size()); ++i) lookup_.emplace_back(pack(points_[i]), i);
  std::sort(lookup_.begin(), lookup_.end());

  herm_value_.resize(points_.size());
  for (int i = 0; i < int(points_.size()); ++i) {
    int v = 0;
    for (int c : points_[i]) v = F.add(v, F.norm(c));
    herm_value_[i] = v;
    if (v == 0) {
      ++isotropic_count_;
      isotropic_points_.push_back(i);
    }
  }

  build_lines();
}

std::vector<int> HermitianSpace::normalized(std::vector<int> coords) const {
  const Field& F = *field_;
  for (int c : coords)
    if (c != 0) {
      if (c != 1) {
        int s = F.inv(c);
        for (int& x : coords) x = F.mul(x, s);
      }
      return coords;
    }
  throw std::invalid_argument("zero vector is not a projective point");
}

uint64_t HermitianSpace::pack(const std::vector<int>& coords) const {
  uint64_t key = 0;
  for (int c : coords) key = (key << 16) | uint64_t(c);
  return key;
}

int HermitianSpace::index_of(const std::vector<int>& coords) const {
  if (int(coords.size()) != n_ + 1) throw std::invalid_argument("coordinate length mismatch");
  uint64_t key = pack(normalized(coords));
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(key, 0));
  if (it == lookup_.end() || it->first != key) throw std::logic_error("point lookup failed");
  return it->second;
}

Line HermitianSpace::line_through(int a, int b) const {
  if (a == b) throw std::invalid_argument("line_through requires two distinct points");
  const Field& F = *field_;
  const auto& pa = points_[a];
  const auto& pb = points_[b];
  Line l;
  l.points.reserve(F.size() + 1);
  l.points.push_back(b);
  std::vector<int> tmp(n_ + 1);
  for (int t = 0; t < F.size(); ++t) {
    for (int i = 0; i <= n_; ++i) tmp[i] = F.add(pa[i], F.mul(t, pb[i]));
    l.points.push_back(index_of(tmp));
  }
  std::sort(l.points.begin(), l.points.end());
  l.points.erase(std::unique(l.points.begin(), l.points.end()), l.points.end());
  if (int(l.points.size()) != F.size() + 1) throw std::logic_error("line has wrong point count");
  for (int p : l.points)
    if (isotropic(p)) ++l.isotropic_count;
  l.cls = classify_line(l);
  return l;
}

LineClass HermitianSpace::classify_line(const Line& l) const {
  int q = field_->q();
  if (l.isotropic_count == 1) return LineClass::tangent;
  if (l.isotropic_count == q + 1) return LineClass::secant;
  if (l.isotropic_count == q * q + 1) return LineClass::generator;
  throw std::logic_error("impossible isotropic count on a line: " +
                         std::to_string(l.isotropic_count));
}

void HermitianSpace::build_lines() {
  int P = point_count();
  lines_through_.assign(P, {});
  // Pair-coverage sweep: the line through the lexicographically smallest
  // uncovered pair is built once; all its internal pairs are marked covered.
  auto pair_index = [P](int i, int j) {
    return (long long)i * P - (long long)i * (i + 1) / 2 + (j - i - 1);
  };
  std::vector<uint64_t> covered(((long long)P * (P - 1) / 2 + 63) / 64, 0);
  auto is_covered = [&](long long idx) { return (covered[idx >> 6] >> (idx & 63)) & 1; };
  auto mark = [&](long long idx) { covered[idx >> 6] |= uint64_t(1) << (idx & 63); };

  for (int i = 0; i < P; ++i) {
    for (int j = i + 1; j < P; ++j) {
      if (is_covered(pair_index(i, j))) continue;
      Line l = line_through(i, j);
      int id = int(lines_.size());
      for (size_t s = 0; s < l.points.size(); ++s) {
        lines_through_[l.points[s]].push_back(id);
        for (size_t t = s + 1; t < l.points.size(); ++t)
          mark(pair_index(l.points[s], l.points[t]));
      }
      lines_.push_back(std::move(l));
    }
  }
}

std::vector<int> HermitianSpace::tangent_lines_through(int point_idx) const {
  std::vector<int> out;
  for (int id : lines_through_[point_idx])
    if (lines_[id].cls == LineClass::tangent) out.push_back(id);
  return out;
}

}  // namespace nu
