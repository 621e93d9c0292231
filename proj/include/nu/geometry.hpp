#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nu/field.hpp"

namespace nu {

enum class LineClass { tangent, secant, generator };

// A projective line, stored as its sorted point-index set (q^2 + 1 points).
struct Line {
  std::vector<int> points;
  int isotropic_count = 0;
  LineClass cls = LineClass::secant;
};

// Number of points of PG(n, s) where s is the field size.
long long pg_point_count(int n, long long s);

// Closed-form point count of the non-degenerate Hermitian variety H(n, q^2):
// (q^(n+1) + (-1)^n)(q^n - (-1)^n) / (q^2 - 1), evaluated exactly.
long long hermitian_point_count(int n, int q);

// Points and lines of PG(n, q^2) together with the Hermitian variety
// sum_i X_i^(q+1) = 0 (identity Gram matrix; all non-degenerate Hermitian
// forms over GF(q^2) are projectively equivalent, so this canonical choice
// loses no generality).
//
// Points are normalized so the first nonzero coordinate is 1 and enumerated
// deterministically: leading-one position ascending, then the remaining
// coordinates in odometer order with the last coordinate fastest. Everything
// is immutable after construction.
class HermitianSpace {
public:
  // Throws ResourceCapError if the point count exceeds max_points.
  HermitianSpace(std::shared_ptr<const Field> field, int n, long long max_points = 20000);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  int dim() const { return n_; }
  int q() const { return field_->q(); }

  int point_count() const { return int(points_.size()); }
  const std::vector<int>& point(int idx) const { return points_[idx]; }

  // Index of the point with the given homogeneous coordinates (any nonzero
  // scalar multiple). Throws on the zero vector or wrong length.
  int index_of(const std::vector<int>& coords) const;

  // Value of the Hermitian form sum_i norm(X_i) at the normalized
  // representative; lies in the subfield GF(q). Zero iff isotropic.
  int hermitian_value(int point_idx) const { return herm_value_[point_idx]; }
  bool isotropic(int point_idx) const { return herm_value_[point_idx] == 0; }
  int isotropic_count() const { return isotropic_count_; }
  const std::vector<int>& isotropic_points() const { return isotropic_points_; }

  // The line through two distinct points, built from scratch. Throws on a == b.
  Line line_through(int a, int b) const;
  // Classification by isotropic-point count: 1 tangent, q+1 secant,
  // q^2+1 generator. Any other count signals a bug upstream.
  LineClass classify_line(const Line& l) const;

  // Global line census (every line of the space, deduplicated, in
  // first-discovery order by smallest spanning pair).
  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<int>& lines_through(int point_idx) const { return lines_through_[point_idx]; }
  std::vector<int> tangent_lines_through(int point_idx) const;  // indices into lines()

private:
  std::vector<int> normalized(std::vector<int> coords) const;
  uint64_t pack(const std::vector<int>& coords) const;
  void build_lines();

  std::shared_ptr<const Field> field_;
  int n_;
  std::vector<std::vector<int>> points_;
  std::vector<std::pair<uint64_t, int>> lookup_;  // sorted (packed coords, index)
  std::vector<int> herm_value_;
  std::vector<int> isotropic_points_;
  int isotropic_count_ = 0;
  std::vector<Line> lines_;
  std::vector<std::vector<int>> lines_through_;
};

}  // namespace nu
