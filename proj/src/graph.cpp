#include "nu/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "nu/util.hpp"

namespace nu {

Graph::Graph(int v) : v_(v), words_((v + 63) / 64), rows_(size_t(v) * ((v + 63) / 64), 0) {
  if (v < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int u, int w) {
  if (u == w) throw std::invalid_argument("loops are not allowed");
  rows_[size_t(u) * words_ + (w >> 6)] |= uint64_t(1) << (w & 63);
  rows_[size_t(w) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
}

int Graph::degree(int u) const {
  int d = 0;
  const uint64_t* r = row(u);
  for (int i = 0; i < words_; ++i) d += popcount64(r[i]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int u = 0; u < v_; ++u) total += degree(u);
  return total / 2;
}

int Graph::common_neighbors(int u, int w) const {
  return and_popcount(row(u), row(w), words_);
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  const uint64_t* r = row(u);
  for (int i = 0; i < words_; ++i) {
    uint64_t x = r[i];
    while (x) {
      out.push_back(i * 64 + __builtin_ctzll(x));
      x &= x - 1;
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(v_);
  for (int u = 0; u < v_; ++u)
    for (int w = u + 1; w < v_; ++w)
      if (!adjacent(u, w)) c.add_edge(u, w);
  return c;
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  if (int(new_label.size()) != v_) throw std::invalid_argument("relabeling degree mismatch");
  Graph r(v_);
  for (int u = 0; u < v_; ++u)
    for (int w = u + 1; w < v_; ++w)
      if (adjacent(u, w)) r.add_edge(new_label[u], new_label[w]);
  return r;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<int> comp(v_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < v_; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int w : neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool Graph::is_clique(const std::vector<int>& vs) const {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!adjacent(vs[i], vs[j])) return false;
  return true;
}

std::string to_graph6(const Graph& g) {
  int v = g.vertex_count();
  std::string s;
  if (v <= 62) {
    s.push_back(char(63 + v));
  } else if (v <= 258047) {
    s.push_back(126);
    s.push_back(char(63 + ((v >> 12) & 63)));
    s.push_back(char(63 + ((v >> 6) & 63)));
    s.push_back(char(63 + (v & 63)));
  } else {
    throw std::invalid_argument("graph too large for the supported graph6 range");
  }
  int bit = 5;
  int cur = 0;
  for (int j = 1; j < v; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.adjacent(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        s.push_back(char(63 + cur));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) s.push_back(char(63 + cur));
  return s;
}

Graph from_graph6(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  size_t pos = 0;
  long long v;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126) throw std::invalid_argument("graph6 >2^18 vertices unsupported");
    if (s.size() < 4) throw std::invalid_argument("truncated graph6 header");
    v = ((long long)(s[1] - 63) << 12) | ((long long)(s[2] - 63) << 6) | (long long)(s[3] - 63);
    pos = 4;
  } else {
    v = s[0] - 63;
    pos = 1;
  }
  if (v < 0) throw std::invalid_argument("invalid graph6 header");
  Graph g{int(v)};
  long long needed = v * (v - 1) / 2;
  long long bitpos = 0;
  for (; pos < s.size() && bitpos < needed; ++pos) {
    int c = s[pos] - 63;
    if (c < 0 || c > 63) throw std::invalid_argument("invalid graph6 character");
    for (int b = 5; b >= 0 && bitpos < needed; --b, ++bitpos) {
      if ((c >> b) & 1) {
        // invert the column-major upper-triangle position
        long long k = bitpos;
        int j = 1;
        while (k >= j) k -= j++;
        g.add_edge(int(k), j);
      }
    }
  }
  if (bitpos < needed) throw std::invalid_argument("truncated graph6 body");
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  int v = g.vertex_count();
  for (int u = 0; u < v; ++u)
    for (int w = u + 1; w < v; ++w)
      if (g.adjacent(u, w))
        out += "e " + std::to_string(u + 1) + " " + std::to_string(w + 1) + "\n";
  return out;
}

}  // namespace nu
