#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace nu {

inline int popcount64(uint64_t x) { return __builtin_popcountll(x); }

// Dense bitset over a fixed universe, used for adjacency rows and
// candidate sets in the clique and refinement code.
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void clear(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void reset() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += popcount64(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  // Lowest set bit, -1 if none.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i) * 64 + __builtin_ctzll(w_[i]);
    return -1;
  }
  // Lowest set bit strictly above i, -1 if none.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t word = size_t(i) >> 6;
    uint64_t cur = w_[word] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (cur) return int(word) * 64 + __builtin_ctzll(cur);
      if (++word >= w_.size()) return -1;
      cur = w_[word];
    }
  }

  const std::vector<uint64_t>& words() const { return w_; }
  std::vector<uint64_t>& words() { return w_; }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

inline int and_popcount(const uint64_t* a, const uint64_t* b, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += popcount64(a[i] & b[i]);
  return c;
}

// splitmix64 step; used for refinement trace hashing.
inline uint64_t mix64(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  return h;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// q = p^e with p prime, e >= 1; returns {p, e} or throws.
inline std::pair<int, int> prime_power_decompose(int q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  int p = q;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int e = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++e;
  }
  if (t != 1) throw std::invalid_argument("q must be a prime power");
  return {p, e};
}

inline long long isqrt_exact(long long n) {
  // floor sqrt; caller checks squaring for exactness
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Chunked parallel loop over [0, n). threads == 0 means hardware default,
// threads == 1 runs inline. The worker receives [begin, end) ranges; callers
// are responsible for making the merge order-independent.
inline void parallel_ranges(long long n, int threads,
                            const std::function<void(long long, long long, int)>& fn) {
  if (threads <= 0) threads = int(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads == 1 || n < 4096) {
    fn(0, n, 0);
    return;
  }
  int k = threads;
  if ((long long)k > n) k = int(n);
  std::vector<std::thread> pool;
  pool.reserve(k);
  long long chunk = (n + k - 1) / k;
  for (int t = 0; t < k; ++t) {
    long long b = t * chunk;
    long long e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e, t] { fn(b, e, t); });
  }
  for (auto& th : pool) th.join();
}

// Raised when a computation exceeds the configured size cap; the CLI maps
// this to its resource-cap exit code.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nu
