#include "lgpmh/graph.hpp"

#include <algorithm>

#include "lgpmh/error.hpp"

namespace lgpmh {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::format: return "format";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::structure: return "structure";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parity: return "parity";
    case ErrorKind::lookup: return "lookup";
    case ErrorKind::shape: return "shape";
    case ErrorKind::construction: return "construction";
  }
  return "unknown";
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) fail(ErrorKind::parameter, "negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) fail(ErrorKind::parameter, "self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      fail(ErrorKind::parameter, "edge " + to_string(e) + " out of range for order " +
                                     std::to_string(n));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) fail(ErrorKind::parameter, "duplicate edge " + to_string(*dup));

  const auto un = static_cast<std::size_t>(n);
  adjacency_.assign(un, {});
  edge_index_.assign(un * un, -1);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    edge_index_[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] =
        static_cast<int>(id);
    edge_index_[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] =
        static_cast<int>(id);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& nb : adjacency_) best = std::min(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::is_regular(int r) const noexcept {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [r](const auto& nb) { return static_cast<int>(nb.size()) == r; });
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept { return find_edge(u, v).has_value(); }

std::optional<int> Graph::find_edge(Vertex u, Vertex v) const noexcept {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  const int id = edge_index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                             static_cast<std::size_t>(v)];
  if (id < 0) return std::nullopt;
  return id;
}

int Graph::edge_id(Vertex u, Vertex v) const {
  auto id = find_edge(u, v);
  if (!id) fail(ErrorKind::lookup, "no edge " + to_string(Edge(u, v)));
  return *id;
}

}  // namespace lgpmh
