#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgpmh/graph.hpp"

namespace lgpmh {

inline constexpr int kDefaultIsomorphismBound = 64;

/// Vertex bijection `map` with g1.adjacent(u,v) <=> g2.adjacent(map[u],map[v]),
/// or nullopt when none exists. Backtracking over colour-refinement classes.
/// Throws Error(capacity) when either graph exceeds `max_order` vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                     int max_order = kDefaultIsomorphismBound);

inline bool are_isomorphic(const Graph& g1, const Graph& g2,
                           int max_order = kDefaultIsomorphismBound) {
  return find_isomorphism(g1, g2, max_order).has_value();
}

/// Upper-triangle adjacency bits of the canonically relabeled graph.
/// Two graphs have equal codes iff they are isomorphic. Orders up to 11.
std::uint64_t canonical_code(const Graph& g);

/// The canonically relabeled copy of g (order <= 11).
Graph canonical_form(const Graph& g);

/// One representative (in canonical form) of every isomorphism class of
/// graphs on exactly n vertices with maximum degree <= max_degree, sorted
/// by canonical code. Generated by vertex extension, so it is exhaustive
/// because bounded degree is closed under vertex deletion.
std::vector<Graph> all_graphs(int n, int max_degree = -1);

/// Connected members of all_graphs(n, max_degree) for n = min_order..max_order.
std::vector<Graph> connected_graphs(int min_order, int max_order, int max_degree = -1);

}  // namespace lgpmh
