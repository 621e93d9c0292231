#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nu {

// Immutable-after-construction undirected graph with bitset adjacency rows.
// Vertices are 0..v-1; loops are rejected.
class Graph {
public:
  Graph() = default;
  explicit Graph(int v);

  int vertex_count() const { return v_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int w);
  bool adjacent(int u, int w) const {
    return (rows_[size_t(u) * words_ + (w >> 6)] >> (w & 63)) & 1;
  }
  const uint64_t* row(int u) const { return rows_.data() + size_t(u) * words_; }

  int degree(int u) const;
  long long edge_count() const;
  int common_neighbors(int u, int w) const;
  std::vector<int> neighbors(int u) const;

  Graph complement() const;
  // Image graph under a relabeling: vertex x becomes new_label[x].
  Graph relabeled(const std::vector<int>& new_label) const;
  std::vector<std::vector<int>> connected_components() const;  // sorted by min vertex
  bool is_clique(const std::vector<int>& vs) const;

  bool operator==(const Graph& o) const { return v_ == o.v_ && rows_ == o.rows_; }

private:
  int v_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;
};

// graph6 encoding per the public format specification (no header line).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// DIMACS edge format: "p edge <v> <m>" followed by 1-based "e u w" lines.
std::string to_dimacs(const Graph& g);

}  // namespace nu
