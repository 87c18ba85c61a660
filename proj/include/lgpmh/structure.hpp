#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lgpmh/graph.hpp"

namespace lgpmh {

bool is_connected(const Graph& g);

/// Throws Error(structure) naming `what` when g is disconnected.
void require_connected(const Graph& g, const char* what);

/// Number of connected components (isolated vertices count).
int component_count(const Graph& g);

/// True when g contains no cycle.
bool is_acyclic(const Graph& g);

bool all_degrees_even(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Cut edges of a connected graph, sorted. Throws Error(structure) when
/// g is disconnected.
std::vector<Edge> bridges(const Graph& g);

/// Side (0/1) of every vertex in a proper 2-colouring, with the lowest
/// vertex of each component on side 0; nullopt when g is not bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Subgraph induced by `keep` (any order); vertex i of the result is
/// `keep_sorted[i]`.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Same vertex set, the listed edges removed.
Graph remove_edges(const Graph& g, std::span<const Edge> drop);

}  // namespace lgpmh
