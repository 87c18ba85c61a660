#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgpmh/graph.hpp"
#include "lgpmh/search.hpp"
#include "lgpmh/walk.hpp"

namespace lgpmh {

/// Constraints for the Hamiltonian cycle engine.
struct HamiltonQuery {
  /// Edges every reported cycle must contain. At most two per vertex.
  std::vector<Edge> forced;
  /// Optional colour per dense edge id; when non-empty, consecutive edges
  /// of a reported cycle (including the closing pair) differ in colour.
  std::vector<int> edge_colour;
};

/// Exhaustive backtracking: forced edges are followed as soon as one of
/// their endpoints is reached, and vertices left with two usable
/// neighbours force the next step. Each undirected cycle is visited once.
/// `visit` returns false to stop. Throws Error(precondition) when a forced
/// edge is missing or a vertex carries more than two forced edges.
SearchResult<CycleWalk> search_hamiltonian(
    const Graph& g, const HamiltonQuery& query, SearchMeter& meter,
    const std::function<bool(const CycleWalk&)>& visit = {});

SearchResult<CycleWalk> find_hamiltonian_cycle(const Graph& g, const std::vector<Edge>& forced = {},
                                               SearchBudget budget = {});

struct CycleCount {
  std::uint64_t count = 0;
  Outcome outcome = Outcome::found;  // inconclusive when the budget ran out
  std::uint64_t nodes = 0;
};

/// Number of distinct Hamiltonian cycles satisfying `query`.
CycleCount count_hamiltonian_cycles(const Graph& g, const HamiltonQuery& query = {},
                                    SearchBudget budget = {});

/// nullopt when the budget ran out.
std::optional<bool> is_hamiltonian(const Graph& g, SearchBudget budget = {});

/// Dominating cycle whose untouched vertices all lie in `allowed_untouched`.
/// Untouched sets are tried from smallest to largest, lexicographically.
SearchResult<CycleWalk> find_dominating_cycle(const Graph& g,
                                              const std::vector<Vertex>& allowed_untouched,
                                              SearchBudget budget = {});

/// Closed trail (possibly a single vertex) touching an endpoint of every
/// edge. Requires g connected (Error(structure)).
SearchResult<CycleWalk> find_dominating_tour(const Graph& g, SearchBudget budget = {});
bool has_dominating_tour(const Graph& g);

/// Hierholzer from vertex 0, smallest unused neighbour first; nullopt when
/// some degree is odd. Requires g connected (Error(structure)).
std::optional<CycleWalk> euler_tour(const Graph& g);

struct TraceabilityVerdict {
  bool traceable = false;
  /// "ok", "bad_vertex", "disconnected", "not_eulerian" or "cycle_avoids_vertex".
  std::string reason;
};

/// Ore's criterion: every cycle passes through v, i.e. g - v is a forest.
TraceabilityVerdict is_arbitrarily_traceable(const Graph& g, Vertex v);

/// nullopt when the budget ran out.
std::optional<bool> is_hypohamiltonian(const Graph& g, SearchBudget budget = {});

/// A longest cycle: Hamiltonian check, then deletion of one vertex, then
/// branch and bound with a reachability bound. Throws Error(structure) for
/// acyclic input.
SearchResult<CycleWalk> longest_cycle(const Graph& g, SearchBudget budget = {});
int circumference(const Graph& g);

}  // namespace lgpmh
