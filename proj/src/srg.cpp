#include "nu/srg.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

std::string SrgParams::to_string() const {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

namespace {
long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

SrgParams expected_params(int n, int q) {
  if (n < 2) throw std::invalid_argument("expected_params: n must be >= 2");
  long long eps = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
  SrgParams p;
  p.v = ipow(q, n) * (ipow(q, n + 1) - eps) / (q + 1);
  p.k = (ipow(q, n) + eps) * (ipow(q, n - 1) - eps);
  p.lambda = ipow(q, 2 * n - 3) * (q + 1) - eps * ipow(q, n - 1) * (q - 1) - 2;
  p.mu = ipow(q, n - 2) * (q + 1) * (ipow(q, n - 1) - eps);
  return p;
}

SrgParams expected_complement_params(int n, int q) {
  if (n < 2) throw std::invalid_argument("expected_complement_params: n must be >= 2");
  long long eps = (n % 2 == 0) ? -1 : 1;
  long long r = (long long)q * q - q - 1;
  SrgParams p;
  p.v = ipow(q, n) * (ipow(q, n + 1) - eps) / (q + 1);
  p.k = ipow(q, n - 1) * r * (ipow(q, n) + eps) / (q + 1);
  p.mu = ipow(q, n - 1) * r * (ipow(q, n - 2) * r + eps) / (q + 1);
  p.lambda = p.mu + eps * ipow(q, n - 2) * r - eps * ipow(q, n - 1);
  return p;
}

SrgMeasurement measure_srg(const Graph& g, int threads) {
  SrgMeasurement m;
  int v = g.vertex_count();
  if (v == 0) {
    m.status = SrgStatus::degenerate_empty;
    return m;
  }
  int k = g.degree(0);
  for (int u = 1; u < v; ++u)
    if (g.degree(u) != k) {
      m.status = SrgStatus::not_regular;
      m.witness_u = 0;
      m.witness_w = u;
      return m;
    }

  // Candidate lambda/mu from the first pair of each class, then a full
  // deterministic sweep. Each worker reports the lexicographically smallest
  // violating pair in its range; the global minimum is the witness.
  long long lambda = -1, mu = -1;
  for (int u = 0; u < v && (lambda < 0 || mu < 0); ++u)
    for (int w = u + 1; w < v && (lambda < 0 || mu < 0); ++w) {
      if (g.adjacent(u, w)) {
        if (lambda < 0) lambda = g.common_neighbors(u, w);
      } else if (mu < 0) {
        mu = g.common_neighbors(u, w);
      }
    }
  if (lambda < 0 && mu < 0) {
    // single vertex
    m.status = SrgStatus::degenerate_empty;
    return m;
  }
  if (lambda < 0) {
    m.status = SrgStatus::degenerate_empty;
    return m;
  }
  if (mu < 0) {
    m.status = SrgStatus::degenerate_complete;
    return m;
  }

  struct Violation {
    long long u = -1, w = -1;
    bool lambda_side = false;
  };
  std::mutex mtx;
  Violation best;
  parallel_ranges(v, threads, [&](long long ub, long long ue, int) {
    Violation local;
    for (long long u = ub; u < ue; ++u) {
      for (long long w = u + 1; w < v; ++w) {
        long long c = and_popcount(g.row(int(u)), g.row(int(w)), g.words_per_row());
        bool adj = g.adjacent(int(u), int(w));
        if ((adj && c != lambda) || (!adj && c != mu)) {
          local = {u, w, adj};
          break;
        }
      }
      if (local.u >= 0) break;
    }
    if (local.u >= 0) {
      std::lock_guard<std::mutex> lk(mtx);
      if (best.u < 0 || local.u < best.u || (local.u == best.u && local.w < best.w)) best = local;
    }
  });
  if (best.u >= 0) {
    m.status = best.lambda_side ? SrgStatus::lambda_not_constant : SrgStatus::mu_not_constant;
    m.witness_u = int(best.u);
    m.witness_w = int(best.w);
    return m;
  }
  m.status = SrgStatus::srg;
  m.params = {v, k, lambda, mu};
  return m;
}

bool verify_srg_identity(const Graph& g, const SrgParams& p, int threads) {
  int v = g.vertex_count();
  if (p.v != v) throw std::invalid_argument("verify_srg_identity: dimension mismatch");
  // (A^2)_{uw} = common neighbours for u != w, degree on the diagonal.
  std::atomic<bool> ok{true};
  parallel_ranges(v, threads, [&](long long ub, long long ue, int) {
    for (long long u = ub; u < ue && ok.load(std::memory_order_relaxed); ++u) {
      if (g.degree(int(u)) != p.k) {
        ok.store(false);
        return;
      }
      for (long long w = u + 1; w < v; ++w) {
        long long c = and_popcount(g.row(int(u)), g.row(int(w)), g.words_per_row());
        long long rhs = g.adjacent(int(u), int(w)) ? p.lambda : p.mu;
        if (c != rhs) {
          ok.store(false);
          return;
        }
      }
    }
  });
  return ok.load();
}

Spectrum spectrum_from_params(const SrgParams& p) {
  long long disc = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu);
  if (disc < 0) throw std::domain_error("infeasible parameters: negative discriminant");
  long long s = isqrt_exact(disc);
  if (s * s != disc)
    throw std::domain_error("infeasible parameters: discriminant is not a perfect square");
  long long t1num = (p.lambda - p.mu) + s;
  long long t2num = (p.lambda - p.mu) - s;
  if (t1num % 2 != 0 || t2num % 2 != 0)
    throw std::domain_error("infeasible parameters: non-integral eigenvalue");
  Spectrum sp;
  sp.k = p.k;
  sp.theta1 = t1num / 2;
  sp.theta2 = t2num / 2;
  if (sp.theta1 == sp.theta2) throw std::domain_error("infeasible parameters: equal eigenvalues");
  // m1 + m2 = v - 1 and k + m1*theta1 + m2*theta2 = 0
  long long num = -(p.k + (p.v - 1) * sp.theta2);
  long long den = sp.theta1 - sp.theta2;
  if (num % den != 0) throw std::domain_error("infeasible parameters: non-integral multiplicity");
  sp.m1 = num / den;
  sp.m2 = p.v - 1 - sp.m1;
  if (sp.m1 <= 0 || sp.m2 <= 0)
    throw std::domain_error("infeasible parameters: non-positive multiplicity");
  return sp;
}

}  // namespace nu
