#include "nu/brute_force.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace nu {

long long brute_force_aut_order(const Graph& g) {
  int v = g.vertex_count();
  if (v > 10) throw std::invalid_argument("brute force oracle capped at 10 vertices");
  if (v == 0) return 1;
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  for (int u = 0; u < v; ++u)
    for (int w = 0; w < v; ++w) adj[u][w] = g.adjacent(u, w);
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      for (int w = u + 1; w < v; ++w)
        if (adj[u][w] != adj[perm[u]][perm[w]]) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

SrgMeasurement naive_measure_srg(const Graph& g) {
  int v = g.vertex_count();
  SrgMeasurement m;
  if (v == 0) {
    m.status = SrgStatus::degenerate_empty;
    return m;
  }
  std::vector<std::vector<int>> nbr(v);
  for (int u = 0; u < v; ++u) nbr[u] = g.neighbors(u);
  size_t k = nbr[0].size();
  for (int u = 1; u < v; ++u)
    if (nbr[u].size() != k) {
      m.status = SrgStatus::not_regular;
      m.witness_u = 0;
      m.witness_w = u;
      return m;
    }
  auto common = [&](int u, int w) {
    long long c = 0;
    for (int x : nbr[u])
      for (int y : nbr[w])
        if (x == y) ++c;
    return c;
  };
  long long lambda = -1, mu = -1;
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w) {
      long long c = common(u, w);
      if (g.adjacent(u, w)) {
        if (lambda < 0) lambda = c;
        if (c != lambda) {
          m.status = SrgStatus::lambda_not_constant;
          m.witness_u = u;
          m.witness_w = w;
          return m;
        }
      } else {
        if (mu < 0) mu = c;
        if (c != mu) {
          m.status = SrgStatus::mu_not_constant;
          m.witness_u = u;
          m.witness_w = w;
          return m;
        }
      }
    }
  if (lambda < 0) {
    m.status = SrgStatus::degenerate_empty;
    return m;
  }
  if (mu < 0) {
    m.status = SrgStatus::degenerate_complete;
    return m;
  }
  m.status = SrgStatus::srg;
  m.params = {v, (long long)k, lambda, mu};
  return m;
}

long long exact_eigen_multiplicity(const Graph& g, long long eigenvalue) {
  using boost::multiprecision::cpp_int;
  int v = g.vertex_count();
  std::vector<std::vector<cpp_int>> a(v, std::vector<cpp_int>(v));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j) {
      a[i][j] = g.adjacent(i, j) ? 1 : 0;
      if (i == j) a[i][j] -= eigenvalue;
    }
  // fraction-free Gaussian elimination (Bareiss); rank = pivot count
  int rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < v && rank < v; ++col) {
    int pivot = -1;
    for (int r = rank; r < v; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < v; ++r) {
      for (int c = col + 1; c < v; ++c)
        a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return v - rank;
}

Graph random_graph(std::mt19937_64& rng, int v, int edge_permille) {
  Graph g(v);
  std::uniform_int_distribution<int> dist(0, 999);
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w)
      if (dist(rng) < edge_permille) g.add_edge(u, w);
  return g;
}

Graph random_relabeling(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> label(g.vertex_count());
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return g.relabeled(label);
}

}  // namespace nu
