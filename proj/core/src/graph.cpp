#include "graphframes/graph.hpp"

#include <algorithm>
#include <string>

#include "graphframes/errors.hpp"
#include "graphframes/rng.hpp"

namespace graphframes {

Graph Graph::from_edge_list(int vertex_count,
                            std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 1) {
    throw InputError("graph needs at least one vertex, got " +
                     std::to_string(vertex_count));
  }
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for " + std::to_string(vertex_count) +
                       " vertices");
    }
    if (u == v) {
      throw InputError("loop at vertex " + std::to_string(u) + " is not allowed");
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  return Graph(vertex_count, std::move(normalized));
}

Graph Graph::from_edge_list(int vertex_count,
                            std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(vertex_count,
                        std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  if (n < 3) {
    throw InputError("cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edge_list(n, edges);
}

Graph star(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  const int offset = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) {
    throw InputError("random graph needs at least one vertex, got " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1], got " + std::to_string(p));
  }
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [u, v] : g.edges()) {
    a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1.0);
  }
  return a;
}

SymmetricMatrix degree_matrix(const Graph& g) {
  SymmetricMatrix d(static_cast<std::size_t>(g.vertex_count()));
  const DegreeInfo info = degree_info(g);
  for (std::size_t i = 0; i < info.degrees.size(); ++i) {
    d.set(i, i, static_cast<double>(info.degrees[i]));
  }
  return d;
}

SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix l(static_cast<std::size_t>(g.vertex_count()));
  const DegreeInfo info = degree_info(g);
  for (std::size_t i = 0; i < info.degrees.size(); ++i) {
    l.set(i, i, static_cast<double>(info.degrees[i]));
  }
  for (const auto& [u, v] : g.edges()) {
    l.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), -1.0);
  }
  return l;
}

ComponentPartition connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    neighbors[static_cast<std::size_t>(u)].push_back(v);
    neighbors[static_cast<std::size_t>(v)].push_back(u);
  }

  ComponentPartition parts;
  parts.label.assign(static_cast<std::size_t>(n), -1);
  // Scanning vertices in increasing order makes each component's label equal
  // to the rank of its smallest member.
  for (int start = 0; start < n; ++start) {
    if (parts.label[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(parts.count++);
    std::vector<int> stack{start};
    parts.label[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : neighbors[static_cast<std::size_t>(v)]) {
        if (parts.label[static_cast<std::size_t>(w)] == -1) {
          parts.label[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return parts;
}

DegreeInfo degree_info(const Graph& g) {
  DegreeInfo info;
  info.degrees.assign(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& [u, v] : g.edges()) {
    ++info.degrees[static_cast<std::size_t>(u)];
    ++info.degrees[static_cast<std::size_t>(v)];
  }
  const auto [lo, hi] = std::minmax_element(info.degrees.begin(), info.degrees.end());
  info.min_degree = *lo;
  info.max_degree = *hi;
  return info;
}

Regularity is_regular(const Graph& g) {
  const DegreeInfo info = degree_info(g);
  if (info.min_degree != info.max_degree) return {false, 0};
  return {true, info.min_degree};
}

bool has_null_vertex(const Graph& g) { return degree_info(g).min_degree == 0; }

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace graphframes
