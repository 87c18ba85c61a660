#include <random>

#include "doctest.h"
#include "lgpmh/cycles.hpp"
#include "lgpmh/error.hpp"
#include "lgpmh/generators.hpp"
#include "lgpmh/isomorphism.hpp"
#include "lgpmh/line_graph.hpp"
#include "lgpmh/structure.hpp"
#include "lgpmh/walk.hpp"
#include "oracles.hpp"

using namespace lgpmh;

namespace {
Graph named(std::string_view tag, std::vector<int> p = {}) { return make_named_graph(tag, p); }

oracle::EdgeSet edge_set(const CycleWalk& w) {
  const auto seq = w.edge_sequence();
  return {seq.begin(), seq.end()};
}

std::set<oracle::EdgeSet> library_cycles(const Graph& g, const HamiltonQuery& q = {}) {
  std::set<oracle::EdgeSet> out;
  SearchMeter meter;
  search_hamiltonian(g, q, meter, [&](const CycleWalk& w) {
    CHECK(is_hamiltonian_cycle(g, w.vertices));
    CHECK(out.insert(edge_set(w)).second);
    return true;
  });
  return out;
}

// Consecutive edges of the cycle (including the closing pair) differ in colour.
bool properly_coloured(const Graph& g, const std::vector<int>& colour, const oracle::EdgeSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> at;
    for (const Edge& e : s)
      if (e.has(v)) at.push_back(colour[g.edge_id(e.u, e.v)]);
    if (at.size() == 2 && at[0] == at[1]) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("cycles") {
  TEST_CASE("walk validators") {
    const Graph c4 = named("cycle", {4});
    CHECK(is_cycle(c4, std::vector<Vertex>{0, 1, 2, 3, 0}));
    CHECK(is_hamiltonian_cycle(c4, std::vector<Vertex>{0, 1, 2, 3, 0}));
    CHECK_FALSE(is_cycle(c4, std::vector<Vertex>{0, 1, 0}));
    CHECK_FALSE(is_closed_walk(c4, std::vector<Vertex>{0, 2, 0}));
    const Graph bow = named("bowtie");
    const std::vector<Vertex> figure8{0, 1, 2, 0, 3, 4, 0};
    CHECK(is_tour(bow, figure8));
    CHECK(is_euler_tour(bow, figure8));
    CHECK_FALSE(is_cycle(bow, figure8));
    CHECK_FALSE(is_dominating(bow, std::vector<Vertex>{0}));
    CHECK(is_dominating(named("star", {3}), std::vector<Vertex>{0}));
    CHECK(is_tour(bow, std::vector<Vertex>{0}));
    CHECK_FALSE(is_tour(bow, std::vector<Vertex>{0, 1, 0}));
    CycleWalk w = close_walk({0, 1, 2}, WalkKind::cycle | WalkKind::tour);
    CHECK(w.vertices == std::vector<Vertex>{0, 1, 2, 0});
    CHECK(w.length() == 3);
    CHECK(claims_hold(bow, w));
    CHECK(has(actual_flags(bow, w), WalkKind::cycle));
    CHECK_FALSE(has(actual_flags(bow, w), WalkKind::dominating));
    CHECK(walk_contains_edges(w.vertices, std::vector<Edge>{{0, 2}}));
    CHECK_FALSE(walk_contains_edges(w.vertices, std::vector<Edge>{{0, 3}}));
  }

  TEST_CASE("Hamiltonian search examples") {
    const auto k4 = find_hamiltonian_cycle(named("complete", {4}));
    REQUIRE(k4.found());
    CHECK(k4.witness->length() == 4);
    const Graph c6 = named("cycle", {6});
    const auto c6f = find_hamiltonian_cycle(c6, {{0, 1}, {2, 3}, {4, 5}});
    REQUIRE(c6f.found());
    CHECK(edge_set(*c6f.witness) == oracle::EdgeSet(c6.edges().begin(), c6.edges().end()));
    const auto pet = find_hamiltonian_cycle(named("petersen"));
    CHECK(pet.absent());
    CHECK(pet.nodes > 0);
    CHECK(count_hamiltonian_cycles(named("complete", {5})).count == 12);
    CHECK(count_hamiltonian_cycles(named("complete", {6})).count == 60);
    CHECK(count_hamiltonian_cycles(named("cube")).count == 6);
  }

  TEST_CASE("forced edge preconditions") {
    const Graph k4 = named("complete", {4});
    CHECK_THROWS_AS(find_hamiltonian_cycle(k4, {{0, 1}, {0, 2}, {0, 3}}), Error);
    CHECK_THROWS_AS(find_hamiltonian_cycle(named("cycle", {5}), {{0, 2}}), Error);
  }

  TEST_CASE("budget exhaustion is inconclusive, never absent") {
    const auto r = find_hamiltonian_cycle(named("petersen"), {}, {5, 0});
    CHECK(r.inconclusive());
    CHECK_FALSE(is_hamiltonian(named("petersen"), {5, 0}).has_value());
    CHECK(count_hamiltonian_cycles(named("complete", {7}), {}, {10, 0}).outcome ==
          Outcome::inconclusive);
  }

  TEST_CASE("Hamiltonian cycles agree with permutation search") {
    for (const auto& g : connected_graphs(3, 7)) CHECK(library_cycles(g) == oracle::hamiltonian_cycles(g));
  }

  TEST_CASE("forced and coloured searches agree with filtered permutation search") {
    std::mt19937 rng(5);
    for (const auto& g : connected_graphs(4, 7)) {
      const auto all = oracle::hamiltonian_cycles(g);
      if (all.empty()) continue;
      std::vector<Edge> es = g.edges();
      std::shuffle(es.begin(), es.end(), rng);
      std::vector<Edge> forced;
      std::vector<int> deg(g.order(), 0);
      for (const Edge& e : es)
        if (forced.size() < 2 && deg[e.u] < 2 && deg[e.v] < 2) {
          forced.push_back(e);
          ++deg[e.u];
          ++deg[e.v];
        }
      std::set<oracle::EdgeSet> expect;
      for (const auto& s : all)
        if (oracle::contains_all(s, forced)) expect.insert(s);
      CHECK(library_cycles(g, {forced, {}}) == expect);

      std::vector<int> colour(g.size());
      for (auto& c : colour) c = int(rng() % 3);
      expect.clear();
      for (const auto& s : all)
        if (properly_coloured(g, colour, s)) expect.insert(s);
      CHECK(library_cycles(g, {{}, colour}) == expect);
    }
  }

  TEST_CASE("dominating cycles") {
    const auto cube = find_dominating_cycle(named("cube"), {});
    REQUIRE(cube.found());
    CHECK(is_hamiltonian_cycle(named("cube"), cube.witness->vertices));
    const Graph p = named("petersen");
    for (Vertex v = 0; v < 10; ++v) {
      const auto r = find_dominating_cycle(p, {v});
      REQUIRE(r.found());
      CHECK(r.witness->length() == 9);
      const auto t = r.witness->touched();
      CHECK(std::find(t.begin(), t.end(), v) == t.end());
      CHECK(is_dominating(p, r.witness->vertices));
    }
    CHECK(find_dominating_cycle(named("star", {3}), {0, 1, 2, 3}).absent());
    CHECK(find_dominating_cycle(p, {}).absent());
  }

  TEST_CASE("dominating tours") {
    CHECK(has_dominating_tour(named("star", {3})));
    CHECK_FALSE(has_dominating_tour(named("path", {5})));
    CHECK(has_dominating_tour(named("cycle", {6})));
    for (const auto& g : connected_graphs(3, 6)) {
      const auto r = find_dominating_tour(g);
      REQUIRE_FALSE(r.inconclusive());
      if (r.found()) {
        CHECK(is_tour(g, r.witness->vertices));
        CHECK(is_dominating(g, r.witness->vertices));
      }
      if (g.size() >= 3 && g.size() <= 9)
        CHECK(r.found() == !oracle::hamiltonian_cycles(line_graph_of(g)).empty());
    }
  }

  TEST_CASE("Euler tours") {
    const Graph c6 = named("cycle", {6});
    const auto t = euler_tour(c6);
    REQUIRE(t.has_value());
    CHECK(is_euler_tour(c6, t->vertices));
    const auto bow = euler_tour(named("bowtie"));
    REQUIRE(bow.has_value());
    CHECK(bow->length() == 6);
    CHECK(std::count(bow->vertices.begin(), bow->vertices.end(), 0) == 3);
    CHECK_FALSE(euler_tour(named("path", {3})).has_value());
    CHECK(euler_tour(named("bowtie"))->vertices == bow->vertices);
    for (const auto& g : connected_graphs(2, 6)) {
      const auto e = euler_tour(g);
      CHECK(e.has_value() == all_degrees_even(g));
      if (e) CHECK(is_euler_tour(g, e->vertices));
    }
  }

  TEST_CASE("arbitrary traceability") {
    const Graph bow = named("bowtie");
    CHECK(is_arbitrarily_traceable(bow, 0).traceable);
    const auto off = is_arbitrarily_traceable(bow, 1);
    CHECK_FALSE(off.traceable);
    CHECK(off.reason == "cycle_avoids_vertex");
    for (Vertex v = 0; v < 8; ++v) CHECK(is_arbitrarily_traceable(named("cycle", {8}), v).traceable);
    CHECK(is_arbitrarily_traceable(named("path", {3}), 1).reason == "not_eulerian");
    CHECK(is_arbitrarily_traceable(bow, 9).reason == "bad_vertex");
    CHECK(is_arbitrarily_traceable(named("dsquare"), 0).traceable);
  }

  TEST_CASE("hypohamiltonicity") {
    CHECK(is_hypohamiltonian(named("petersen")) == true);
    CHECK(is_hypohamiltonian(named("complete", {4})) == false);
    CHECK(is_hypohamiltonian(named("cycle", {5})) == false);
  }

  TEST_CASE("circumference") {
    CHECK(circumference(named("cycle", {7})) == 7);
    CHECK(circumference(named("petersen")) == 9);
    CHECK_THROWS_AS(circumference(named("star", {4})), Error);
    for (const auto& g : connected_graphs(3, 7)) {
      if (is_acyclic(g)) continue;
      CHECK(circumference(g) == oracle::circumference(g));
    }
  }
}
