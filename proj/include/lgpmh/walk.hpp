#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lgpmh/graph.hpp"

namespace lgpmh {

enum class WalkKind : std::uint8_t {
  cycle = 1,
  tour = 2,
  euler = 4,
  hamiltonian = 8,
  dominating = 16,
};

using WalkFlags = std::uint8_t;

constexpr WalkFlags operator|(WalkKind a, WalkKind b) {
  return static_cast<WalkFlags>(static_cast<WalkFlags>(a) | static_cast<WalkFlags>(b));
}
constexpr WalkFlags operator|(WalkFlags a, WalkKind b) {
  return static_cast<WalkFlags>(a | static_cast<WalkFlags>(b));
}
constexpr bool has(WalkFlags f, WalkKind k) { return (f & static_cast<WalkFlags>(k)) != 0; }

std::vector<std::string> flag_names(WalkFlags f);

/// Closed walk stored with its first vertex repeated at the end. A single
/// vertex {v} is the trivial (length-0) tour.
struct CycleWalk {
  std::vector<Vertex> vertices;
  WalkFlags kinds = 0;

  /// Number of edges traversed.
  std::size_t length() const noexcept {
    return vertices.size() <= 1 ? 0 : vertices.size() - 1;
  }
  /// Traversed edges in walk order.
  std::vector<Edge> edge_sequence() const;
  /// Sorted distinct vertices on the walk.
  std::vector<Vertex> touched() const;
  bool uses_edge(const Edge& e) const;
};

/// Builds a closed walk from an open vertex sequence by repeating the front.
CycleWalk close_walk(std::vector<Vertex> open, WalkFlags kinds);

// Independent checkers. They recompute everything from the host graph.
bool is_closed_walk(const Graph& g, std::span<const Vertex> seq);
bool is_cycle(const Graph& g, std::span<const Vertex> seq);
bool is_tour(const Graph& g, std::span<const Vertex> seq);
bool is_euler_tour(const Graph& g, std::span<const Vertex> seq);
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> seq);
bool is_dominating(const Graph& g, std::span<const Vertex> seq);
bool walk_contains_edges(std::span<const Vertex> seq, std::span<const Edge> edges);

/// Flags that actually hold for `w` in g.
WalkFlags actual_flags(const Graph& g, const CycleWalk& w);

/// True when every flag claimed by w holds.
bool claims_hold(const Graph& g, const CycleWalk& w);

}  // namespace lgpmh
