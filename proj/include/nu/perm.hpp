#pragma once

#include <string>
#include <vector>

namespace nu {

// A permutation of {0..d-1}, stored as its image array.
class Permutation {
public:
  Permutation() = default;
  // Validates that images is a bijection; throws std::invalid_argument.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return int(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  // Function composition: (a.compose(b))(x) = a(b(x)).
  Permutation compose(const Permutation& b) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  // Disjoint-cycle form, e.g. "(0 2 1)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

private:
  std::vector<int> img_;
};

}  // namespace nu
