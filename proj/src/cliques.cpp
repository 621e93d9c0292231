#include "nu/cliques.hpp"

#include <algorithm>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

namespace {

struct BronKerbosch {
  const Graph& g;
  int v;
  std::vector<Bits> nbr;
  std::vector<std::vector<int>>& out;
  std::vector<int> stack;

  BronKerbosch(const Graph& graph, std::vector<std::vector<int>>& sink)
      : g(graph), v(graph.vertex_count()), out(sink) {
    nbr.reserve(v);
    for (int u = 0; u < v; ++u) {
      Bits b(v);
      for (int w : g.neighbors(u)) b.set(w);
      nbr.push_back(std::move(b));
    }
  }

  void expand(Bits cand, Bits excl) {
    if (cand.empty() && excl.empty()) {
      out.push_back(stack);
      return;
    }
    // pivot: vertex of cand|excl with most neighbours inside cand
    int pivot = -1, best = -1;
    for (const Bits* side : {&cand, &excl}) {
      for (int u = side->first(); u >= 0; u = side->next(u)) {
        int c = and_popcount(nbr[u].words().data(), cand.words().data(), int(cand.words().size()));
        if (c > best) {
          best = c;
          pivot = u;
        }
      }
    }
    Bits branch = cand;
    for (int w = branch.first(); w >= 0; w = branch.next(w)) {
      if (nbr[pivot].test(w)) continue;
      Bits nc = cand, ne = excl;
      nc &= nbr[w];
      ne &= nbr[w];
      stack.push_back(w);
      expand(std::move(nc), std::move(ne));
      stack.pop_back();
      cand.clear(w);
      excl.set(w);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int max_vertices) {
  int v = g.vertex_count();
  if (v > max_vertices)
    throw ResourceCapError("clique enumeration capped at " + std::to_string(max_vertices) +
                           " vertices, graph has " + std::to_string(v));
  std::vector<std::vector<int>> cliques;
  if (v == 0) return cliques;

  // degeneracy order: repeatedly remove a minimum-degree vertex
  std::vector<int> order, rank(v, -1), deg(v);
  std::vector<char> removed(v, 0);
  for (int u = 0; u < v; ++u) deg[u] = g.degree(u);
  for (int step = 0; step < v; ++step) {
    int pick = -1;
    for (int u = 0; u < v; ++u)
      if (!removed[u] && (pick < 0 || deg[u] < deg[pick])) pick = u;
    removed[pick] = 1;
    rank[pick] = step;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }

  BronKerbosch bk(g, cliques);
  for (int u : order) {
    Bits cand(v), excl(v);
    for (int w : g.neighbors(u)) {
      if (rank[w] > rank[u])
        cand.set(w);
      else
        excl.set(w);
    }
    bk.stack.assign(1, u);
    bk.expand(std::move(cand), std::move(excl));
  }
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

CliqueCensus classify_cliques(const TangentGraph& t,
                              const std::vector<std::vector<int>>& cliques) {
  if (!t.space) throw std::invalid_argument("classify_cliques needs a geometry-labeled graph");
  if (t.includes_isotropic)
    throw std::invalid_argument("classify_cliques expects the NU graph, not Gamma");
  if (t.n != 2) throw std::invalid_argument("classify_cliques is defined for n = 2");
  const HermitianSpace& S = *t.space;
  CliqueCensus census;
  for (int i = 0; i < int(cliques.size()); ++i) {
    const auto& c = cliques[i];
    ++census.by_size[int(c.size())];
    bool collinear = false;
    if (c.size() >= 2) {
      Line l = S.line_through(t.vertex_point[c[0]], t.vertex_point[c[1]]);
      collinear = true;
      for (int vtx : c)
        if (!std::binary_search(l.points.begin(), l.points.end(), t.vertex_point[vtx])) {
          collinear = false;
          break;
        }
      if (collinear && l.cls != LineClass::tangent)
        throw std::logic_error("collinear maximal clique on a non-tangent line");
    }
    if (collinear) {
      ++census.tangent_type;
      census.tangent_clique_ids.push_back(i);
    } else {
      ++census.two_line_type;
    }
  }
  return census;
}

namespace {

// intersection of two sorted vectors; bails out above 1 element
int single_meet(const std::vector<int>& a, const std::vector<int>& b, bool& overflow) {
  int meet = -1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      if (meet >= 0) {
        overflow = true;
        return -1;
      }
      meet = a[i];
      ++i;
      ++j;
    }
  }
  return meet;
}

}  // namespace

TripleType tangent_triple_type(const std::vector<int>& c1, const std::vector<int>& c2,
                               const std::vector<int>& c3) {
  if (c1 == c2 || c1 == c3 || c2 == c3)
    throw std::invalid_argument("tangent_triple_type requires three distinct cliques");
  bool overflow = false;
  int m12 = single_meet(c1, c2, overflow);
  int m13 = single_meet(c1, c3, overflow);
  int m23 = single_meet(c2, c3, overflow);
  if (overflow)
    throw std::invalid_argument("pairwise intersection exceeds one vertex; not line cliques");
  if (m12 < 0 || m13 < 0 || m23 < 0) return TripleType::other;
  if (m12 == m13 && m13 == m23) return TripleType::concurrent;
  if (m12 != m13 && m13 != m23 && m12 != m23) return TripleType::triangle;
  return TripleType::other;
}

}  // namespace nu
