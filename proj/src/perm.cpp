#include "nu/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace nu {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= int(img_.size()) || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < int(img_.size()); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& b) const {
  if (degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (int x = 0; x < int(img_.size()); ++x) r.img_[x] = img_[b.img_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int x = 0; x < int(img_.size()); ++x) r.img_[img_[x]] = x;
  return r;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (int s = 0; s < int(img_.size()); ++s) {
    if (seen[s] || img_[s] == s) continue;
    out += "(";
    int x = s;
    bool first = true;
    do {
      if (!first) out += " ";
      out += std::to_string(x);
      seen[x] = 1;
      x = img_[x];
      first = false;
    } while (x != s);
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace nu
