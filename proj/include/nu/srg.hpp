#pragma once

#include <string>

#include "nu/graph.hpp"

namespace nu {

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;

  // k(k - lambda - 1) = (v - k - 1) mu, the basic feasibility identity.
  bool feasible() const { return k * (k - lambda - 1) == (v - k - 1) * mu; }
  bool operator==(const SrgParams&) const = default;
  std::string to_string() const;
};

// Integral spectrum of a strongly regular graph: eigenvalues k, theta1,
// theta2 with multiplicities 1, m1, m2.
struct Spectrum {
  long long k = 0;
  long long theta1 = 0, theta2 = 0;
  long long m1 = 0, m2 = 0;
};

enum class SrgStatus {
  srg,
  not_regular,
  lambda_not_constant,
  mu_not_constant,
  degenerate_complete,  // no non-adjacent pairs: mu undefined
  degenerate_empty,     // no adjacent pairs: lambda undefined
};

struct SrgMeasurement {
  SrgStatus status = SrgStatus::srg;
  SrgParams params;                    // populated for status == srg
  int witness_u = -1, witness_w = -1;  // offending pair on failure
  bool is_srg() const { return status == SrgStatus::srg; }
};

// Parameters of NU(n+1, q^2) and of its complement, from the closed
// formulas with eps = (-1)^(n+1) and r = q^2 - q - 1.
SrgParams expected_params(int n, int q);
SrgParams expected_complement_params(int n, int q);

// Exact measurement: regularity, then common-neighbour counts over every
// adjacent and non-adjacent pair. Deterministic regardless of thread count.
SrgMeasurement measure_srg(const Graph& g, int threads = 1);

// Entry-wise check of A^2 = kI + lambda*A + mu*(J - I - A), exactly, via
// bitset row intersections.
bool verify_srg_identity(const Graph& g, const SrgParams& p, int threads = 1);

// Eigenvalues from the quadratic in (lambda - mu), (k - mu); multiplicities
// from the exact linear system m1 + m2 = v - 1, k + m1*theta1 + m2*theta2 = 0.
// (The closed-form multiplicity expressions found in parts of the literature
// differ by a sign in the numerator; the linear system is unambiguous and is
// what this function validates.) Only integral spectra are supported:
// a non-square discriminant or non-integral multiplicity throws
// std::domain_error.
Spectrum spectrum_from_params(const SrgParams& p);

}  // namespace nu
