#pragma once

#include <memory>
#include <string>
#include <vector>

namespace nu {

// Exact arithmetic in GF(p^(2e)), the quadratic extension of GF(q) with
// q = p^e. Elements are encoded as integers 0..p^(2e)-1: the element
// sum_i c_i * x^i (x a root of the modulus polynomial) has code
// sum_i c_i * p^i. Code 0 is the additive identity, code 1 the
// multiplicative identity. The encoding and the modulus are deterministic,
// so element codes are reproducible across runs.
//
// Multiplication and inversion go through exp/log tables for a fixed
// multiplicative generator; addition is carry-free base-p digit addition
// on the codes. All tables are immutable after construction, so a Field
// can be shared freely across threads.
class Field {
public:
  // Builds GF(p^(2e)). Throws std::invalid_argument on non-prime p,
  // e < 1, or p^(2e) > 2^16.
  Field(int p, int e);

  int characteristic() const { return p_; }
  int extension_exponent() const { return e_; }    // e in q = p^e
  int q() const { return q_; }                     // p^e
  int size() const { return n_; }                  // p^(2e)

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[mod_ord(log_[a] + log_[b])];
  }
  int inv(int a) const;  // throws std::domain_error on a == 0
  int pow(int a, long long k) const;

  // The involutory conjugation a -> a^q; fixes exactly the subfield GF(q).
  int conj(int a) const { return conj_[a]; }
  // norm(a) = a^(q+1) = a * conj(a); lands in GF(q).
  int norm(int a) const { return norm_[a]; }
  // a -> a^(p^i); i taken mod 2e. i = 0 is the identity.
  int frobenius(int a, int i) const;

  bool in_base_subfield(int a) const { return conj_[a] == a; }  // GF(q)
  std::vector<int> base_subfield_elements() const;              // ascending codes
  std::vector<int> norm_one_elements() const;                   // ascending codes

  int generator() const { return gen_; }
  int log(int a) const;  // throws std::domain_error on a == 0
  int exp(long long k) const { return exp_[mod_ord(k)]; }

  // Modulus polynomial coefficients over GF(p), constant term first,
  // leading coefficient (= 1) last; degree 2e.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;  // e.g. "x^2 + x + 1 over GF(2)"

private:
  int mod_ord(long long k) const {
    long long m = n_ - 1;
    k %= m;
    if (k < 0) k += m;
    return int(k);
  }

  int p_ = 0, e_ = 0, q_ = 0, n_ = 0;
  int gen_ = 0;
  std::vector<int> modulus_;
  std::vector<int> exp_, log_, conj_, norm_, neg_;
};

std::shared_ptr<const Field> make_field(int p, int e);

}  // namespace nu
