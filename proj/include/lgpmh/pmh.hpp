#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgpmh/graph.hpp"
#include "lgpmh/matching.hpp"
#include "lgpmh/search.hpp"
#include "lgpmh/walk.hpp"

namespace lgpmh {

enum class PmhStatus { pmh, not_pmh, inconclusive };

std::string_view to_string(PmhStatus s) noexcept;

struct PmhVerdict {
  PmhStatus status = PmhStatus::pmh;
  /// Set when the graph has no perfect matching at all.
  bool vacuous = false;
  /// First matching (in enumeration order) with no Hamiltonian extension.
  std::optional<Matching> witness;
  /// Extension of each tested matching, when requested.
  std::vector<CycleWalk> extensions;
  std::uint64_t matchings_tested = 0;
  std::uint64_t search_nodes = 0;

  bool is_pmh() const noexcept { return status == PmhStatus::pmh; }
};

/// Brute-force PMH oracle: every perfect matching is handed to the forced
/// Hamiltonian search. Stops at the first non-extendable matching.
PmhVerdict is_pmh(const Graph& h, SearchBudget budget = {}, bool keep_extensions = false);

/// Las Vergnas bound for balanced bipartite graphs: deg(u)+deg(v) >= n/2+1
/// for every non-adjacent pair across the sides. Throws Error(shape) unless
/// g is connected, bipartite, with sides of equal size >= 2.
bool lasvergnas_condition(const Graph& g);

/// Haggkvist bound: deg(u)+deg(v) >= n+1 for every non-adjacent pair.
/// Throws Error(shape) unless the order is even and at least 4.
bool haggkvist_condition(const Graph& g);

}  // namespace lgpmh
