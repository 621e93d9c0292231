#include "nu/field.hpp"

#include <sstream>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
// Only used during field construction; runtime arithmetic is table-driven.

std::vector<int> poly_from_code(long long code, int p) {
  std::vector<int> c;
  while (code) {
    c.push_back(int(code % p));
    code /= p;
  }
  return c;
}

void poly_trim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m, in place; m monic.
void poly_mod(std::vector<int>& a, const std::vector<int>& m, int p) {
  int dm = int(m.size()) - 1;
  while (int(a.size()) - 1 >= dm) {
    int da = int(a.size()) - 1;
    int c = a[da];
    if (c != 0) {
      int shift = da - dm;
      for (int i = 0; i <= dm; ++i) {
        int v = a[shift + i] - c * m[i];
        v %= p;
        if (v < 0) v += p;
        a[shift + i] = v;
      }
    }
    a.pop_back();
    poly_trim(a);
    if (a.empty()) return;
  }
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = int((r[i + j] + (long long)a[i] * b[j]) % p);
  }
  poly_trim(r);
  poly_mod(r, m, p);
  return r;
}

// Remainder of a by monic divisor d (non-destructive).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& d, int p) {
  poly_mod(a, d, p);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2. Fine for the
// tabulated sizes (p^(2e) <= 2^16).
bool is_irreducible(const std::vector<int>& m, int p) {
  int deg = int(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div = poly_from_code(code, p);
      div.resize(d + 1, 0);
      div[d] = 1;
      if (poly_is_zero(poly_rem(m, div, p))) return false;
    }
  }
  return true;
}

long long code_of_poly(const std::vector<int>& a, int p) {
  long long code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("extension exponent must be >= 1");
  long long n = 1;
  for (int i = 0; i < 2 * e; ++i) {
    n *= p;
    if (n > 65536) throw std::invalid_argument("field size cap exceeded: p^(2e) must be <= 2^16");
  }
  n_ = int(n);
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;

  int d = 2 * e;
  // Deterministic modulus: smallest code over the non-leading coefficients
  // that yields an irreducible monic polynomial of degree 2e.
  long long lowcount = 1;
  for (int i = 0; i < d; ++i) lowcount *= p;
  for (long long code = 0; code < lowcount; ++code) {
    std::vector<int> cand = poly_from_code(code, p);
    cand.resize(d + 1, 0);
    cand[d] = 1;
    if (is_irreducible(cand, p)) {
      modulus_ = cand;
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("no irreducible polynomial found");

  // Find the smallest multiplicative generator using polynomial arithmetic,
  // then freeze everything into exp/log tables.
  long long ord = n_ - 1;
  auto factors = prime_factors(ord);
  auto pow_poly = [&](const std::vector<int>& base, long long k) {
    std::vector<int> result{1};
    std::vector<int> b = base;
    while (k) {
      if (k & 1) result = poly_mul_mod(result, b, modulus_, p_);
      b = poly_mul_mod(b, b, modulus_, p_);
      k >>= 1;
    }
    return result;
  };
  for (int g = 2; g < n_; ++g) {
    std::vector<int> gp = poly_from_code(g, p_);
    bool primitive = true;
    for (long long f : factors) {
      auto t = pow_poly(gp, ord / f);
      if (code_of_poly(t, p_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_ = g;
      break;
    }
  }
  if (gen_ == 0) throw std::logic_error("no multiplicative generator found");

  exp_.assign(ord, 0);
  log_.assign(n_, -1);
  std::vector<int> acc{1};
  std::vector<int> gp = poly_from_code(gen_, p_);
  for (long long i = 0; i < ord; ++i) {
    int code = int(code_of_poly(acc, p_));
    exp_[i] = code;
    log_[code] = int(i);
    acc = poly_mul_mod(acc, gp, modulus_, p_);
  }
  if (code_of_poly(acc, p_) != 1) throw std::logic_error("generator order mismatch");

  neg_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int r = 0, mult = 1, x = a;
    while (x) {
      int digit = x % p_;
      r += ((p_ - digit) % p_) * mult;
      mult *= p_;
      x /= p_;
    }
    neg_[a] = r;
  }

  conj_.assign(n_, 0);
  norm_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    conj_[a] = pow(a, q_);
    norm_[a] = mul(a, conj_[a]);
  }
}

int Field::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, mult = 1;
  while (a || b) {
    int s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

int Field::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return exp_[mod_ord(-(long long)log_[a])];
}

int Field::pow(int a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  return exp_[mod_ord((long long)log_[a] * (k % (n_ - 1) + (n_ - 1)))];
}

int Field::frobenius(int a, int i) const {
  i %= 2 * e_;
  if (i < 0) i += 2 * e_;
  long long pk = 1;
  for (int t = 0; t < i; ++t) pk *= p_;
  return pow(a, pk);
}

int Field::log(int a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

std::vector<int> Field::base_subfield_elements() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (conj_[a] == a) out.push_back(a);
  return out;
}

std::vector<int> Field::norm_one_elements() const {
  std::vector<int> out;
  for (int a = 1; a < n_; ++a)
    if (norm_[a] == 1) out.push_back(a);
  return out;
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = int(modulus_.size()) - 1; i >= 0; --i) {
    int c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  os << " over GF(" << p_ << ")";
  return os.str();
}

std::shared_ptr<const Field> make_field(int p, int e) {
  return std::make_shared<const Field>(p, e);
}

}  // namespace nu
