#pragma once

#include "lgpmh/line_graph.hpp"
#include "lgpmh/matching.hpp"
#include "lgpmh/search.hpp"
#include "lgpmh/walk.hpp"

namespace lgpmh {

/// Hamiltonian cycle of L(G) containing m, assembled clique by clique along
/// the dominating cycle d of G (max degree <= 3):
///  - clique meeting m: the path between the entry and exit vertices that
///    contains the matching edge inside the clique;
///  - clique missing m, centre on d: the single entry-exit edge;
///  - clique missing m, centre off d: skipped.
/// Throws Error(precondition) naming the violated condition, and
/// Error(construction) if the assembled walk fails validation.
CycleWalk extend_via_dominating_cycle(const LineGraphMap& lgm, const Matching& m,
                                      const CycleWalk& d);

/// Searches G for a dominating cycle whose untouched vertices all have
/// m-free cliques and extends m along it. `absent` certifies that m lies
/// on no Hamiltonian cycle of L(G). Throws Error(precondition) if max
/// degree > 3 or m is not a perfect matching.
SearchResult<CycleWalk> extend_matching_subcubic(const LineGraphMap& lgm, const Matching& m,
                                                 SearchBudget budget = {});

struct KotzigPartition {
  CycleWalk with_matching;
  CycleWalk complement;
};

/// Two edge-disjoint Hamiltonian cycles covering E(L(g)), the first
/// containing m. g must be cubic and Hamiltonian with an even edge count.
/// Throws BudgetExhausted if the Hamiltonian cycle search of g runs out.
KotzigPartition kotzig_partition(const Graph& g, const Matching& m, SearchBudget budget = {});

/// Euler tour of the base graph in which the two edges of every 3-path of
/// the decomposition induced by m are consecutive, read as a Hamiltonian
/// cycle of L(G). The base must be arbitrarily traceable from v and of even
/// size. When the 3-path ends split into several circuits no such tour
/// exists, and a forced Hamiltonian search of L(G) is used instead; a
/// construction error means m extends to no Hamiltonian cycle at all.
CycleWalk extend_matching_arb_traceable(const LineGraphMap& lgm, Vertex v, const Matching& m,
                                        SearchBudget budget = {});

}  // namespace lgpmh
