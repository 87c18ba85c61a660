#pragma once

#include <vector>

#include "lgpmh/cycles.hpp"
#include "lgpmh/line_graph.hpp"
#include "lgpmh/matching.hpp"
#include "lgpmh/search.hpp"
#include "lgpmh/walk.hpp"

namespace lgpmh {

/// Colour per dense base edge id (not necessarily proper).
struct EdgeColouring {
  std::vector<int> colour;
  int colour_count = 0;
};

/// Colour i goes to both base edges of the i-th matching edge (sorted
/// order), so every colour class is one 3-path. Throws
/// Error(precondition) if m is not a perfect matching of lgm.lg.
EdgeColouring colouring_from_matching(const LineGraphMap& lgm, const Matching& m);

/// No vertex meets three edges of one colour.
bool at_most_two_per_colour(const Graph& g, const EdgeColouring& c);

struct PcCycleResult {
  SearchResult<CycleWalk> search;
  /// Whether the colouring meets the per-vertex hypothesis of Daykin's
  /// existence theorem (which further needs a complete graph on >= 6
  /// vertices).
  bool daykin_hypothesis = false;
};

/// Hamiltonian cycle with no two consecutive edges of the same colour.
PcCycleResult find_pc_hamiltonian_cycle(const Graph& g, const EdgeColouring& c,
                                        SearchBudget budget = {});

CycleCount count_pc_hamiltonian_cycles(const Graph& g, const EdgeColouring& c,
                                       SearchBudget budget = {});

/// Path inside clique q from entry to exit through every edge of `inside`
/// (matching edges of q), alternating matching / non-matching edges. The
/// edge at entry goes first, the edge at exit last, the rest ascending.
/// Throws Error(precondition) if entry-exit is itself a matching edge.
std::vector<Vertex> stitch_clique_path(const Clique& q, Vertex entry, Vertex exit,
                                       const Matching& inside);

/// Colour the base by m, find a properly coloured Hamiltonian cycle of the
/// base, and concatenate one stitched path per clique in cycle order.
/// `absent` means no properly coloured Hamiltonian cycle exists.
SearchResult<CycleWalk> extend_via_pc_cycle(const LineGraphMap& lgm, const Matching& m,
                                            SearchBudget budget = {});

/// m is a perfect matching of L(K_n) (vertex ids = dense edge ids of K_n).
/// Throws Error(parity) unless n = 0,1 mod 4; n = 4 uses the subcubic
/// construction.
SearchResult<CycleWalk> extend_matching_complete(int n, const Matching& m,
                                                 SearchBudget budget = {});

/// m is a perfect matching of L(K_{s,s}). Throws Error(parity) for odd s.
/// Without a properly coloured cycle the outcome is `inconclusive`.
SearchResult<CycleWalk> extend_matching_bipartite(int side, const Matching& m,
                                                  SearchBudget budget = {});

}  // namespace lgpmh
