#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgpmh {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const noexcept { return x == u || x == v; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order; the position of an edge in that
/// order is its dense id, which stays stable for a given labeled graph.
/// Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(parameter) on self-loops, duplicate edges or out-of-range
  /// endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_regular(int r) const noexcept;

  bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }
  bool adjacent(Vertex u, Vertex v) const noexcept;

  /// Dense id of edge uv, or nullopt when absent.
  std::optional<int> find_edge(Vertex u, Vertex v) const noexcept;
  /// Dense id of edge uv; throws Error(lookup) when absent.
  int edge_id(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  // n*n table of dense edge ids, -1 where no edge.
  std::vector<int> edge_index_;
};

}  // namespace lgpmh
