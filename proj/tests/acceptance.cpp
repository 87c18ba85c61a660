// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "lgpmh/constructions.hpp"
#include "lgpmh/cycles.hpp"
#include "lgpmh/error.hpp"
#include "lgpmh/extension.hpp"
#include "lgpmh/generators.hpp"
#include "lgpmh/graph6.hpp"
#include "lgpmh/isomorphism.hpp"
#include "lgpmh/line_graph.hpp"
#include "lgpmh/matching.hpp"
#include "lgpmh/pc_cycle.hpp"
#include "lgpmh/pmh.hpp"
#include "lgpmh/structure.hpp"
#include "lgpmh/walk.hpp"
#include "oracles.hpp"

using namespace lgpmh;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed requirement; keeps the first few messages.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || failures < 3) detail << " [failed: " << what << "]";
    pass = false;
    ++failures;
  }
  int failures = 0;
};

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = no wall-clock limit
  std::function<void(Verdict&)> body;
};

Graph named(std::string_view tag, std::vector<int> p = {}) { return make_named_graph(tag, p); }

bool extends(const Graph& lg, const Matching& m, const CycleWalk& w) {
  return is_hamiltonian_cycle(lg, w.vertices) && walk_contains_edges(w.vertices, m);
}

bool oracle_extendable(const std::set<oracle::EdgeSet>& cycles, const Matching& m) {
  for (const auto& s : cycles)
    if (oracle::contains_all(s, m)) return true;
  return false;
}

void check_kotzig(Verdict& v, const Graph& g, const std::string& label) {
  const auto lgm = build_line_graph(g);
  std::uint64_t n = 0;
  for (const auto& m : all_perfect_matchings(lgm.lg)) {
    ++n;
    const auto p = kotzig_partition(g, m);
    v.require(extends(lgm.lg, m, p.with_matching), label + ": first cycle misses M");
    v.require(is_hamiltonian_cycle(lgm.lg, p.complement.vertices), label + ": second cycle not Hamiltonian");
    auto a = p.with_matching.edge_sequence();
    auto b = p.complement.edge_sequence();
    oracle::EdgeSet all(a.begin(), a.end());
    all.insert(b.begin(), b.end());
    v.require(all.size() == a.size() + b.size(), label + ": cycles share an edge");
    v.require(all == oracle::EdgeSet(lgm.lg.edges().begin(), lgm.lg.edges().end()),
              label + ": cycles do not cover E(L(G))");
    v.require(find_hamiltonian_cycle(lgm.lg, m).found(), label + ": forced search disagrees");
  }
  v.detail << " " << label << "=" << n << "pm";
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"line graph of a cycle is the cycle (n = 3..10)", 1.0,
       [](Verdict& v) {
         for (int n = 3; n <= 10; ++n) {
           const Graph c = named("cycle", {n});
           v.require(are_isomorphic(line_graph_of(c), c), "L(C" + std::to_string(n) + ")");
         }
         v.detail << " 8 cycles";
       }},

      {"L(K4) has 8 perfect matchings, all extendable", 1.0,
       [](Verdict& v) {
         const auto lgm = build_line_graph(named("complete", {4}));
         const auto lib = all_perfect_matchings(lgm.lg);
         const auto ora = oracle::perfect_matchings(lgm.lg);
         v.require(lib.size() == 8, "library count " + std::to_string(lib.size()));
         v.require(ora.size() == 8, "oracle count " + std::to_string(ora.size()));
         v.require(std::set<Matching>(lib.begin(), lib.end()) == ora, "matching sets differ");
         const auto verdict = is_pmh(lgm.lg, {}, true);
         v.require(verdict.status == PmhStatus::pmh, "is_pmh");
         v.require(verdict.extensions.size() == lib.size(), "extension count");
         for (std::size_t i = 0; i < lib.size() && i < verdict.extensions.size(); ++i) {
           v.require(extends(lgm.lg, lib[i], verdict.extensions[i]), "is_pmh extension invalid");
           const auto r = extend_matching_subcubic(lgm, lib[i]);
           v.require(r.found() && extends(lgm.lg, lib[i], *r.witness), "subcubic extension");
         }
         v.detail << " matchings=" << lib.size();
       }},

      {"K5: 12 Hamiltonian cycles, two properly coloured cycles per matching, L(K5) PMH", 30.0,
       [](Verdict& v) {
         const Graph k5 = named("complete", {5});
         const auto c = count_hamiltonian_cycles(k5);
         v.require(c.count == 12 && c.outcome == Outcome::found, "K5 cycle count " + std::to_string(c.count));
         v.require(oracle::hamiltonian_cycles(k5).size() == 12, "oracle K5 cycle count");
         const auto lgm = build_line_graph(k5);
         std::uint64_t min_pc = ~0ull, n = 0;
         for (const auto& m : all_perfect_matchings(lgm.lg)) {
           ++n;
           const auto col = colouring_from_matching(lgm, m);
           const auto pc = count_pc_hamiltonian_cycles(k5, col);
           v.require(pc.outcome == Outcome::found && pc.count >= 2, "fewer than two PC cycles");
           min_pc = std::min(min_pc, pc.count);
           v.require(find_pc_hamiltonian_cycle(k5, col).search.found(), "PC search");
           const auto r = extend_matching_complete(5, m);
           v.require(r.found() && extends(lgm.lg, m, *r.witness), "complete-graph extension");
         }
         v.require(is_pmh(lgm.lg).status == PmhStatus::pmh, "is_pmh(L(K5))");
         v.detail << " matchings=" << n << " min_pc_cycles=" << min_pc;
       }},

      {"dominating-cycle extension agrees with forced search (subcubic, <= 8 vertices)", 0.0,
       [](Verdict& v) {
         std::uint64_t graphs = 0, pairs = 0, extendable = 0;
         for (const auto& g : connected_graphs(2, 8, 3)) {
           if (g.size() % 2 != 0) continue;
           ++graphs;
           const auto lgm = build_line_graph(g);
           for (const auto& m : all_perfect_matchings(lgm.lg)) {
             ++pairs;
             const auto a = extend_matching_subcubic(lgm, m);
             const auto b = find_hamiltonian_cycle(lgm.lg, m);
             v.require(!a.inconclusive() && !b.inconclusive(), "inconclusive search");
             v.require(a.found() == b.found(), "mismatch on " + write_graph6(g));
             if (a.found()) {
               ++extendable;
               v.require(extends(lgm.lg, m, *a.witness), "invalid extension on " + write_graph6(g));
             }
           }
         }
         v.detail << " graphs=" << graphs << " matchings=" << pairs << " extendable=" << extendable;
       }},

      {"cubic Hamiltonian graphs: every matching extends, complement is a second Hamiltonian cycle", 0.0,
       [](Verdict& v) {
         for (const auto& [label, g] : {std::pair{"K4", named("complete", {4})}, std::pair{"cube", named("cube")}})
           check_kotzig(v, g, label);
         // The bipartite K33 and the triangular prism have 9 edges: L(G) has
         // 9 vertices, no perfect matching, and the statement holds vacuously.
         for (const auto& [label, g] : {std::pair{"K33", named("bipartite", {3})}, std::pair{"prism", named("prism")}}) {
           const auto lgm = build_line_graph(g);
           v.require(is_hamiltonian(g).value_or(false), std::string(label) + " not Hamiltonian");
           v.require(g.size() % 2 == 1 && count_perfect_matchings(lgm.lg) == 0,
                     std::string(label) + " expected odd size");
           v.detail << " " << label << "=odd(" << g.size() << "e,0pm)";
         }
         for (const auto& [label, g] : {std::pair{"prism6", named("prism", {6})}, std::pair{"moebius8", named("moebius", {8})},
                                        std::pair{"gp83", named("gpetersen", {8, 3})}})
           check_kotzig(v, g, label);
       }},

      {"dominating tour exists iff the line graph is Hamiltonian (<= 7 vertices, >= 3 edges)", 0.0,
       [](Verdict& v) {
         std::uint64_t tested = 0, skipped = 0, ham = 0;
         for (const auto& g : connected_graphs(1, 7)) {
           if (g.size() < 3) {
             ++skipped;
             continue;
           }
           ++tested;
           const auto h = is_hamiltonian(line_graph_of(g));
           v.require(h.has_value(), "inconclusive");
           ham += h.value_or(false);
           v.require(has_dominating_tour(g) == h.value_or(false), "mismatch on " + write_graph6(g));
         }
         v.detail << " graphs=" << tested << " hamiltonian_lg=" << ham << " excluded_below_3_edges=" << skipped;
       }},

      {"expanding all but one vertex of the Petersen graph gives a non-PMH line graph", 600.0,
       [](Verdict& v) {
         const Graph p = named("petersen");
         const Vertex keep = 0;
         const auto ex = expand_all_but_one(p, keep);
         const Graph& g = ex.graph;
         v.require(g.order() == 28 && g.size() == 42, "order/size");
         v.require(g.size() == p.size() + 3 * (p.order() - 1), "edge arithmetic");
         const int circ = circumference(g);
         v.require(circ == 27 && circ == g.order() - 1, "circumference " + std::to_string(circ));
         const auto longest = longest_cycle(g);
         v.require(longest.found() && is_cycle(g, longest.witness->vertices) && longest.witness->length() == 27,
                   "longest cycle witness");
         const auto lgm = build_line_graph(g);
         const auto partition = canonical_partition(lgm);
         const auto& q = partition.find(keep)->members;
         const auto m = find_perfect_matching(lgm.lg, {{q[0], q[1]}});
         v.require(m.has_value(), "no perfect matching meets the kept clique");
         if (!m) return;
         const auto r = find_hamiltonian_cycle(lgm.lg, *m, {0, 600});
         v.require(r.absent(), r.found() ? "matching extends" : "forced search inconclusive");
         v.detail << " order=28 size=42 circ=" << circ << " forced_search_nodes=" << r.nodes;
       }},

      {"hypohamiltonian cubic even-size graph (flower snark J5) has a PMH line graph", 0.0,
       [](Verdict& v) {
         const Graph j5 = named("flower", {5});
         v.require(j5.is_regular(3) && j5.size() % 2 == 0, "not cubic of even size");
         v.require(is_hypohamiltonian(j5) == true, "not hypohamiltonian");
         const auto verdict = is_pmh(line_graph_of(j5));
         v.require(verdict.status == PmhStatus::pmh, std::string(to_string(verdict.status)));
         v.detail << " order=" << j5.order() << " matchings=" << verdict.matchings_tested;
       }},

      {"arbitrarily traceable graphs (bowtie, two squares sharing a vertex): every matching extends", 10.0,
       [](Verdict& v) {
         for (const auto& [label, g] : {std::pair{"bowtie", named("bowtie")}, std::pair{"dsquare", named("dsquare")}}) {
           Vertex from = -1;
           for (Vertex x = 0; x < g.order() && from < 0; ++x)
             if (is_arbitrarily_traceable(g, x).traceable) from = x;
           v.require(from >= 0, std::string(label) + " not arbitrarily traceable");
           if (from < 0) continue;
           const auto lgm = build_line_graph(g);
           const auto cycles = oracle::hamiltonian_cycles(lgm.lg);
           int total = 0, built = 0, blocked = 0, disagree = 0;
           for (const auto& m : all_perfect_matchings(lgm.lg)) {
             ++total;
             const bool ora = oracle_extendable(cycles, m);
             blocked += !ora;
             bool ok = false;
             try {
               ok = extends(lgm.lg, m, extend_matching_arb_traceable(lgm, from, m));
             } catch (const Error&) {
             }
             built += ok;
             disagree += ok != ora;
           }
           v.require(disagree == 0, std::string(label) + ": construction disagrees with oracle");
           v.require(built == total, std::string(label) + ": " + std::to_string(blocked) + "/" +
                                         std::to_string(total) +
                                         " matchings lie on no Hamiltonian cycle of L(G) (oracle)");
           v.detail << " " << label << "=" << built << "/" << total;
         }
       }},

      {"contracting the matching-free triangles of L(G) - M recovers G", 0.0,
       [](Verdict& v) {
         for (const auto& [label, g] :
              {std::pair{"K4", named("complete", {4})}, std::pair{"prism", named("prism")}, std::pair{"cube", named("cube")},
               std::pair{"moebius8", named("moebius", {8})}, std::pair{"prism6", named("prism", {6})}}) {
           const auto lgm = build_line_graph(g);
           std::uint64_t n = 0;
           for (const auto& m : all_perfect_matchings(lgm.lg)) {
             ++n;
             const auto r = reduce_matching_complement(g, m);
             v.require(r.isomorphic, std::string(label) + ": not isomorphic");
           }
           if (g.size() % 2 == 1) {
             v.require(n == 0, std::string(label) + ": odd size with matchings");
             v.detail << " " << label << "=odd(" << g.size() << "e,0pm)";
           } else {
             v.detail << " " << label << "=" << n << "pm";
           }
         }
       }},

      {"degree-sum conditions imply PMH (all graphs on <= 8 vertices)", 0.0,
       [](Verdict& v) {
         std::uint64_t graphs = 0, hag = 0, lv = 0, hag_bad = 0, lv_bad = 0, lv2 = 0, lv2_bad = 0;
         for (int n = 4; n <= 8; n += 2)
           for (const auto& g : all_graphs(n)) {
             ++graphs;
             const bool h = haggkvist_condition(g);
             bool l = false, l2 = false;
             const auto sides = bipartition(g);
             if (sides && is_connected(g) && 2 * std::count(sides->begin(), sides->end(), 0) == n) {
               l = lasvergnas_condition(g);
               // Same test with the cross-pair bound raised by one.
               l2 = true;
               for (Vertex x = 0; x < n; ++x)
                 for (Vertex y = x + 1; y < n; ++y)
                   if ((*sides)[x] != (*sides)[y] && !g.adjacent(x, y) && g.degree(x) + g.degree(y) < n / 2 + 2)
                     l2 = false;
             }
             if (!h && !l && !l2) continue;
             const auto verdict = is_pmh(g);
             const bool ok = verdict.status == PmhStatus::pmh && !verdict.vacuous;
             hag += h;
             lv += l;
             lv2 += l2;
             hag_bad += h && !ok;
             lv_bad += l && !ok;
             lv2_bad += l2 && !ok;
             if ((h || l) && !ok) v.require(false, (h ? "haggkvist violation on " : "bipartite violation on ") + write_graph6(g));
           }
         v.detail << " even-order graphs=" << graphs << " haggkvist=" << hag << "(" << hag_bad << " bad)"
                  << " bipartite n/2+1=" << lv << "(" << lv_bad << " bad)"
                  << " bipartite n/2+2=" << lv2 << "(" << lv2_bad << " bad)";
       }},

      {"balanced complete bipartite construction validates at desk scale (side 2 all, side 4 sampled)", 0.0,
       [](Verdict& v) {
         v.detail << " (large-side guarantee not checkable here: L(K50,50) has 2500 vertices)";
         const auto k22 = build_line_graph(named("bipartite", {2}));
         int found = 0, inconclusive = 0, n = 0;
         for (const auto& m : all_perfect_matchings(k22.lg)) {
           ++n;
           const auto r = extend_matching_bipartite(2, m);
           v.require(!r.absent(), "side 2 absent");
           if (r.found()) {
             ++found;
             v.require(extends(k22.lg, m, *r.witness), "side 2 invalid output");
           }
         }
         v.detail << " side2=" << found << "/" << n;
         const auto k44 = build_line_graph(named("bipartite", {4}));
         std::mt19937_64 rng(20260101);
         found = 0;
         for (int i = 0; i < 100; ++i) {
           const auto m = random_perfect_matching(k44.lg, rng);
           v.require(m.has_value(), "no sample");
           if (!m) break;
           const auto r = extend_matching_bipartite(4, *m, {0, 30});
           v.require(!r.absent(), "side 4 absent");
           if (r.inconclusive()) ++inconclusive;
           if (r.found()) {
             ++found;
             v.require(extends(k44.lg, *m, *r.witness), "side 4 invalid output");
           }
         }
         v.detail << " side4=" << found << "/100 inconclusive=" << inconclusive;
       }},
  };
  return all;
}

}  // namespace

int main() {
  int failed = 0, index = 0;
  for (const auto& c : criteria()) {
    ++index;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) v.require(secs <= c.limit_seconds, "over time limit");
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << std::setw(2) << index << " " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << "s)" << v.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
