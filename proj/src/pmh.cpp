#include "lgpmh/pmh.hpp"

#include "lgpmh/cycles.hpp"
#include "lgpmh/error.hpp"
#include "lgpmh/structure.hpp"

namespace lgpmh {

std::string_view to_string(PmhStatus s) noexcept {
  switch (s) {
    case PmhStatus::pmh: return "pmh";
    case PmhStatus::not_pmh: return "not_pmh";
    case PmhStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

PmhVerdict is_pmh(const Graph& h, SearchBudget budget, bool keep_extensions) {
  PmhVerdict v;
  SearchMeter meter(budget);
  enumerate_perfect_matchings(h, [&](const Matching& m) {
    ++v.matchings_tested;
    auto r = search_hamiltonian(h, HamiltonQuery{m, {}}, meter);
    if (r.found()) {
      if (keep_extensions) v.extensions.push_back(*r.witness);
      return true;
    }
    v.status = r.inconclusive() ? PmhStatus::inconclusive : PmhStatus::not_pmh;
    if (r.absent()) v.witness = m;
    return false;
  });
  v.vacuous = v.matchings_tested == 0;
  v.search_nodes = meter.nodes();
  return v;
}

bool lasvergnas_condition(const Graph& g) {
  auto side = bipartition(g);
  if (!side) fail(ErrorKind::shape, "Las Vergnas condition needs a bipartite graph");
  if (!is_connected(g)) fail(ErrorKind::shape, "Las Vergnas condition needs a connected graph");
  int ones = 0;
  for (int s : *side) ones += s;
  const int n = g.order();
  if (2 * ones != n || n / 2 < 2)
    fail(ErrorKind::shape, "Las Vergnas condition needs equal sides of size >= 2");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w) {
      if ((*side)[static_cast<std::size_t>(u)] == (*side)[static_cast<std::size_t>(w)]) continue;
      if (g.adjacent(u, w)) continue;
      if (g.degree(u) + g.degree(w) < n / 2 + 1) return false;
    }
  return true;
}

bool haggkvist_condition(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0) fail(ErrorKind::shape, "Haggkvist condition needs even order >= 4");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      if (!g.adjacent(u, w) && g.degree(u) + g.degree(w) < n + 1) return false;
  return true;
}

}  // namespace lgpmh
