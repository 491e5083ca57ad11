#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "graphframes/matrix.hpp"

namespace graphframes {

// Simple undirected graph: 0-indexed vertices, no loops, no parallel edges.
// Immutable after construction. Edges are stored as (min, max) pairs in
// lexicographic order with duplicates removed.
class Graph {
 public:
  // Validates vertex_count >= 1 and every endpoint; rejects loops. Duplicate
  // edges (in either orientation) collapse to one.
  static Graph from_edge_list(int vertex_count,
                              std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int vertex_count,
                              std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph(int vertex_count, std::vector<std::pair<int, int>> sorted_edges)
      : vertex_count_(vertex_count), edges_(std::move(sorted_edges)) {}

  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);
Graph star(int n);  // vertex 0 is the center, vertices 1..n-1 the leaves

// Vertices of b are shifted up by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Erdos-Renyi G(n, p): every unordered pair gets one splitmix64 draw, pairs
// visited in lexicographic order, edge kept when draw < p. A fixed seed
// yields the identical graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix degree_matrix(const Graph& g);
// Laplacian D - A: positive semidefinite, row sums zero.
SymmetricMatrix laplacian_matrix(const Graph& g);

struct ComponentPartition {
  std::size_t count = 0;
  // label[v] in [0, count); components are numbered in increasing order of
  // their smallest member vertex.
  std::vector<int> label;
};
ComponentPartition connected_components(const Graph& g);

struct DegreeInfo {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
};
DegreeInfo degree_info(const Graph& g);

struct Regularity {
  bool regular = false;
  int degree = 0;  // the common degree when regular
};
Regularity is_regular(const Graph& g);

// True when some vertex has degree zero.
bool has_null_vertex(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace graphframes
