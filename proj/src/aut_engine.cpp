#include "nu/aut_engine.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

OrderedPartition::OrderedPartition(int v) : v_(v) {
  if (v < 1) throw std::invalid_argument("partition needs at least one vertex");
  std::vector<int> all(v);
  std::iota(all.begin(), all.end(), 0);
  cells_.push_back(std::move(all));
}

OrderedPartition::OrderedPartition(int v, std::vector<std::vector<int>> cells)
    : v_(v), cells_(std::move(cells)) {
  std::vector<char> seen(v, 0);
  int total = 0;
  for (const auto& c : cells_) {
    if (c.empty()) throw std::invalid_argument("empty cell");
    for (int x : c) {
      if (x < 0 || x >= v || seen[x])
        throw std::invalid_argument("cells must partition the vertex set");
      seen[x] = 1;
      ++total;
    }
  }
  if (total != v) throw std::invalid_argument("cells must cover the vertex set");
}

bool OrderedPartition::discrete() const {
  for (const auto& c : cells_)
    if (c.size() > 1) return false;
  return true;
}

namespace {

// Working partition: lab holds the vertices in partition order, pos is its
// inverse, cstart[p] is the start position of the cell containing position p,
// and clen[s] is the cell length (valid at start positions).
struct Part {
  int v = 0;
  std::vector<int> lab, pos, cstart, clen;

  void init(const OrderedPartition& p) {
    v = p.vertex_count();
    lab.clear();
    pos.assign(v, 0);
    cstart.assign(v, 0);
    clen.assign(v, 0);
    int at = 0;
    for (const auto& cell : p.cells()) {
      int s = at;
      for (int x : cell) {
        lab.push_back(x);
        pos[x] = at;
        cstart[at] = s;
        ++at;
      }
      clen[s] = int(cell.size());
    }
  }

  bool discrete() const {
    for (int s = 0; s < v; s += clen[s])
      if (clen[s] > 1) return false;
    return true;
  }
};

// Coarsest equitable refinement with a worklist of splitter cells; mixes the
// refinement events (splitter position, affected cell, fragment counts and
// sizes) and the final cell structure into the returned trace hash. All
// hashed quantities are positions, sizes and counts, never vertex ids, so
// the trace is invariant under relabeling.
uint64_t refine_part(const Graph& g, Part& p, std::vector<int> initial_queue, uint64_t h) {
  const int v = p.v;
  const int words = g.words_per_row();
  std::deque<int> queue;
  std::vector<char> in_queue(v, 0);
  for (int s : initial_queue)
    if (!in_queue[s]) {
      in_queue[s] = 1;
      queue.push_back(s);
    }
  std::vector<uint64_t> mask(words);
  std::vector<std::pair<int, int>> slice;  // (count, vertex)
  std::vector<int> starts;

  while (!queue.empty()) {
    int ws = queue.front();
    queue.pop_front();
    in_queue[ws] = 0;
    int wlen = p.clen[ws];
    h = mix64(h, 0xA1);
    h = mix64(h, uint64_t(ws));
    h = mix64(h, uint64_t(wlen));

    std::fill(mask.begin(), mask.end(), 0);
    for (int i = ws; i < ws + wlen; ++i) {
      int u = p.lab[i];
      mask[u >> 6] |= uint64_t(1) << (u & 63);
    }

    starts.clear();
    for (int s = 0; s < v; s += p.clen[s])
      if (p.clen[s] > 1) starts.push_back(s);

    for (int cs : starts) {
      int cl = p.clen[cs];
      slice.clear();
      int first_count = -1;
      bool uniform = true;
      for (int i = cs; i < cs + cl; ++i) {
        int u = p.lab[i];
        int c = and_popcount(g.row(u), mask.data(), words);
        if (first_count < 0)
          first_count = c;
        else if (c != first_count)
          uniform = false;
        slice.emplace_back(c, u);
      }
      if (uniform) continue;

      std::stable_sort(slice.begin(), slice.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      h = mix64(h, 0xB7);
      h = mix64(h, uint64_t(cs));
      int frag_start = cs;
      for (int i = 0; i < cl; ++i) {
        p.lab[cs + i] = slice[i].second;
        p.pos[slice[i].second] = cs + i;
      }
      for (int i = 0; i < cl;) {
        int j = i;
        while (j < cl && slice[j].first == slice[i].first) ++j;
        int fs = cs + i, fl = j - i;
        for (int t = fs; t < fs + fl; ++t) p.cstart[t] = fs;
        p.clen[fs] = fl;
        h = mix64(h, uint64_t(slice[i].first));
        h = mix64(h, uint64_t(fl));
        if (!in_queue[fs]) {
          in_queue[fs] = 1;
          queue.push_back(fs);
        }
        i = j;
        frag_start = fs + fl;
      }
      (void)frag_start;
    }
  }

  for (int s = 0; s < v; s += p.clen[s]) {
    h = mix64(h, uint64_t(s));
    h = mix64(h, uint64_t(p.clen[s]));
  }
  return h;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class AutSearch {
public:
  explicit AutSearch(const Graph& g) : group_(g.vertex_count()), g_(g), v_(g.vertex_count()) {
    path_trace_.resize(v_ + 2, 0);
  }

  void run() {
    part_.init(OrderedPartition(v_));
    std::vector<int> q0{0};
    path_trace_[0] = refine_part(g_, part_, q0, mix64(0, 0x5EED));
    search(0);
  }

  std::vector<Permutation> gens_;
  PermGroup group_;
  std::vector<int> best_lab_;

private:
  static constexpr int kNoUnwind = INT_MAX;

  std::vector<uint64_t> leaf_adjacency() const {
    const int words = (v_ + 63) / 64;
    std::vector<uint64_t> adjm(size_t(v_) * words, 0);
    for (int i = 0; i < v_; ++i) {
      int u = part_.lab[i];
      for (int w : g_.neighbors(u)) {
        int j = part_.pos[w];
        adjm[size_t(i) * words + (j >> 6)] |= uint64_t(1) << (j & 63);
      }
    }
    return adjm;
  }

  void record_automorphism(const std::vector<int>& to_lab) {
    std::vector<int> img(v_);
    for (int i = 0; i < v_; ++i) img[part_.lab[i]] = to_lab[i];
    Permutation gamma(std::move(img));
    if (gamma.is_identity()) return;
    if (group_.contains(gamma)) return;
    group_.add_generator(gamma);
    gens_.push_back(std::move(gamma));
  }

  UnionFind prefix_orbits() const {
    UnionFind uf(v_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int x : prefix_)
        if (g(x) != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < v_; ++x) uf.unite(x, g(x));
    }
    return uf;
  }

  int process_leaf(int depth, bool cmpf_eq, int cmpb) {
    std::vector<uint64_t> adjm = leaf_adjacency();
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = part_.lab;
      first_prefix_ = prefix_;
      first_adj_ = adjm;
      first_trace_.assign(path_trace_.begin(), path_trace_.begin() + depth + 1);
      best_lab_ = first_lab_;
      best_adj_ = first_adj_;
      best_trace_ = first_trace_;
      return kNoUnwind;
    }
    int unwind = kNoUnwind;
    if (cmpf_eq && adjm == first_adj_) {
      record_automorphism(first_lab_);
      int L = 0;
      while (L < depth && L < int(first_prefix_.size()) && prefix_[L] == first_prefix_[L]) ++L;
      unwind = L;
    }
    if (cmpb > 0) {
      best_lab_ = part_.lab;
      best_adj_ = std::move(adjm);
      best_trace_.assign(path_trace_.begin(), path_trace_.begin() + depth + 1);
    } else if (cmpb == 0) {
      if (adjm > best_adj_) {
        best_lab_ = part_.lab;
        best_adj_ = std::move(adjm);
        best_trace_.assign(path_trace_.begin(), path_trace_.begin() + depth + 1);
      } else if (adjm == best_adj_ && part_.lab != best_lab_) {
        record_automorphism(best_lab_);
      }
    }
    return unwind;
  }

  int search(int depth) {
    bool cmpf_eq = true;
    int cmpb = 0;
    if (have_first_) {
      if (depth + 1 > int(first_trace_.size()))
        cmpf_eq = false;
      else
        for (int i = 0; i <= depth; ++i)
          if (path_trace_[i] != first_trace_[i]) {
            cmpf_eq = false;
            break;
          }
      int common = std::min(depth + 1, int(best_trace_.size()));
      for (int i = 0; i < common; ++i)
        if (path_trace_[i] != best_trace_[i]) {
          cmpb = path_trace_[i] > best_trace_[i] ? 1 : -1;
          break;
        }
      if (cmpb == 0 && depth + 1 > int(best_trace_.size())) cmpb = 1;
      if (!cmpf_eq && cmpb < 0) return kNoUnwind;
    }

    if (part_.discrete()) return process_leaf(depth, cmpf_eq, cmpb);

    // target cell: first largest non-singleton
    int tc = -1, tlen = 0;
    for (int s = 0; s < v_; s += part_.clen[s])
      if (part_.clen[s] > 1 && part_.clen[s] > tlen) {
        tc = s;
        tlen = part_.clen[s];
      }

    std::vector<int> candidates(part_.lab.begin() + tc, part_.lab.begin() + tc + tlen);
    std::sort(candidates.begin(), candidates.end());

    UnionFind uf = prefix_orbits();
    size_t gens_seen = gens_.size();
    std::vector<int> explored;
    std::vector<char> explored_root(v_, 0);

    Part saved;
    for (int u : candidates) {
      if (explored_root[uf.find(u)]) continue;
      saved = part_;
      // individualize u in its cell, then re-refine
      {
        int s = part_.cstart[part_.pos[u]];
        int pu = part_.pos[u];
        int w = part_.lab[s];
        part_.lab[s] = u;
        part_.lab[pu] = w;
        part_.pos[w] = pu;
        part_.pos[u] = s;
        int len = part_.clen[s];
        part_.clen[s] = 1;
        part_.cstart[s] = s;
        for (int t = s + 1; t < s + len; ++t) part_.cstart[t] = s + 1;
        part_.clen[s + 1] = len - 1;
        uint64_t h = mix64(mix64(0, 0xC4A1), uint64_t(tc));
        std::vector<int> q{s, s + 1};
        path_trace_[depth + 1] = refine_part(g_, part_, q, h);
      }
      prefix_.push_back(u);
      int r = search(depth + 1);
      prefix_.pop_back();
      part_ = saved;

      if (r != kNoUnwind && r < depth) return r;

      explored.push_back(u);
      if (gens_.size() != gens_seen) {
        uf = prefix_orbits();
        gens_seen = gens_.size();
        std::fill(explored_root.begin(), explored_root.end(), 0);
        for (int e : explored) explored_root[uf.find(e)] = 1;
      } else {
        explored_root[uf.find(u)] = 1;
      }
    }
    return kNoUnwind;
  }

  const Graph& g_;
  int v_;
  Part part_;
  std::vector<uint64_t> path_trace_;
  std::vector<int> prefix_;

  bool have_first_ = false;
  std::vector<int> first_lab_, first_prefix_;
  std::vector<uint64_t> first_adj_, first_trace_;
  std::vector<uint64_t> best_adj_, best_trace_;
};

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& p) {
  if (g.vertex_count() != p.vertex_count())
    throw std::invalid_argument("refine: partition/graph size mismatch");
  Part part;
  part.init(p);
  std::vector<int> queue;
  for (int s = 0; s < part.v; s += part.clen[s]) queue.push_back(s);
  refine_part(g, part, queue, 0);
  std::vector<std::vector<int>> cells;
  for (int s = 0; s < part.v; s += part.clen[s])
    cells.emplace_back(part.lab.begin() + s, part.lab.begin() + s + part.clen[s]);
  return OrderedPartition(part.v, std::move(cells));
}

AutResult automorphism_group(const Graph& g, int max_vertices) {
  int v = g.vertex_count();
  if (v > max_vertices)
    throw ResourceCapError("automorphism search capped at " + std::to_string(max_vertices) +
                           " vertices, graph has " + std::to_string(v));
  if (v == 0) {
    return AutResult{{}, PermGroup(0), Permutation(std::vector<int>{}), {}};
  }
  AutSearch s(g);
  s.run();

  // Every generator must preserve adjacency exactly; a violation here means
  // the search itself is broken.
  for (const auto& gen : s.gens_)
    for (int u = 0; u < v; ++u)
      for (int w = u + 1; w < v; ++w)
        if (g.adjacent(u, w) != g.adjacent(gen(u), gen(w)))
          throw std::logic_error("generated permutation is not an automorphism");

  std::vector<int> kappa(v);
  for (int i = 0; i < v; ++i) kappa[s.best_lab_[i]] = i;
  AutResult res{s.gens_, std::move(s.group_), Permutation(std::move(kappa)), {}};
  res.orbit_partition = res.group.orbits();
  return res;
}

Graph canonical_form(const Graph& g, int max_vertices) {
  AutResult r = automorphism_group(g, max_vertices);
  return g.relabeled(r.canonical_labeling.images());
}

bool is_isomorphic(const Graph& a, const Graph& b, int max_vertices) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
}

}  // namespace nu
