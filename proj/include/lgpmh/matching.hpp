#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "lgpmh/graph.hpp"
#include "lgpmh/line_graph.hpp"

namespace lgpmh {

/// Set of independent edges, kept sorted.
using Matching = std::vector<Edge>;

bool is_matching(const Graph& g, const Matching& m);
bool is_perfect_matching(const Graph& g, const Matching& m);

/// Calls `visit` for each perfect matching of g exactly once, in
/// lexicographic order of the sorted edge lists. Stops early when `visit`
/// returns false. Returns the number of matchings visited.
std::uint64_t enumerate_perfect_matchings(const Graph& g,
                                          const std::function<bool(const Matching&)>& visit);

std::vector<Matching> all_perfect_matchings(const Graph& g);
std::uint64_t count_perfect_matchings(const Graph& g);

/// Lexicographically first perfect matching containing every edge of
/// `forced`, or nullopt.
std::optional<Matching> find_perfect_matching(const Graph& g, const std::vector<Edge>& forced = {});

/// Perfect matching chosen by randomized backtracking, or nullopt.
std::optional<Matching> random_perfect_matching(const Graph& g, std::mt19937_64& rng);

/// One 3-path of a P3-decomposition: base edges first, second meet at center.
struct P3Path {
  Vertex center;
  int first;   // dense base edge id
  int second;  // dense base edge id, first < second

  Vertex end_a(const Graph& base) const { return base.edge(first).other(center); }
  Vertex end_b(const Graph& base) const { return base.edge(second).other(center); }
  friend bool operator==(const P3Path&, const P3Path&) = default;
};

struct P3Decomposition {
  std::vector<P3Path> paths;  // sorted by (first, second)
};

bool is_p3_decomposition(const Graph& base, const P3Decomposition& d);

/// Matching edge {e,f} of L(G) becomes the 3-path through the shared
/// endpoint of e and f. Throws Error(precondition) naming an uncovered lg
/// vertex when m is not a perfect matching of lgm.lg.
P3Decomposition matching_to_p3(const LineGraphMap& lgm, const Matching& m);

/// Inverse of matching_to_p3.
Matching p3_to_matching(const LineGraphMap& lgm, const P3Decomposition& d);

/// Leaves-first pairing over a DFS spanning tree. Requires g connected
/// (Error(structure)) with an even number of edges (Error(parity)).
P3Decomposition find_p3_decomposition(const Graph& g);

struct ExtendabilityVerdict {
  bool one_extendable = true;
  std::optional<Edge> witness;  // an edge lying in no perfect matching
};

/// Checks every edge for a containing perfect matching.
ExtendabilityVerdict one_extendability_check(const Graph& g);

}  // namespace lgpmh
