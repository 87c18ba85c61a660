#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
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

namespace lgpmh::cli {

using json = nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  std::uint64_t max_nodes = 0;
  double timeout_seconds = 600;

  SearchBudget budget() const { return {max_nodes, timeout_seconds}; }
};

// Per-graph handler; sets `inconclusive` when a budget ran out.
using Handler = std::function<json(const Graph&, bool& inconclusive)>;

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json matching_json(const Matching& m) {
  json a = json::array();
  for (const Edge& e : m) a.push_back(edge_json(e));
  return a;
}

json walk_json(const CycleWalk& w) { return w.vertices; }

json outcome_json(Outcome o) { return std::string(to_string(o)); }

Matching parse_matching(const json& j) {
  if (!j.is_array()) fail(ErrorKind::format, "matching must be a list of vertex pairs");
  Matching m;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(ErrorKind::format, "matching entry must be a pair of vertex ids");
    m.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  std::sort(m.begin(), m.end());
  return m;
}

// Accepts a bare list of pairs, {"matching": [...]} or {"matchings": [[...], ...]}.
std::vector<Matching> load_matchings(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::format, "cannot open matching file " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::format, std::string("matching file is not valid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("matchings")) {
    std::vector<Matching> all;
    for (const auto& m : j.at("matchings")) all.push_back(parse_matching(m));
    return all;
  }
  if (j.is_object() && j.contains("matching")) return {parse_matching(j.at("matching"))};
  return {parse_matching(j)};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      fail(ErrorKind::format, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

// "0-1,2-3"
std::vector<Edge> parse_edge_list(const std::string& s) {
  std::vector<Edge> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) fail(ErrorKind::format, "edge must look like u-v: '" + tok + "'");
    const auto ends = parse_int_list(tok.substr(0, dash) + "," + tok.substr(dash + 1));
    if (ends.size() != 2) fail(ErrorKind::format, "edge must look like u-v: '" + tok + "'");
    out.emplace_back(ends[0], ends[1]);
  }
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void read_env_defaults(Options& o) {
  if (const char* s = std::getenv("LGPMH_MAX_NODES")) o.max_nodes = std::strtoull(s, nullptr, 10);
  if (const char* s = std::getenv("LGPMH_TIMEOUT_SECONDS")) o.timeout_seconds = std::strtod(s, nullptr);
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("-i,--input", o.input, "graph6 file, one graph per line (default: stdin)");
  app->add_option("--max-nodes", o.max_nodes, "search node budget, 0 = unlimited");
  app->add_option("--timeout-seconds", o.timeout_seconds, "search time budget, 0 = unlimited");
}

json base_report(const std::vector<std::string>& args, const std::string& g6) {
  return json{{"schema_version", kSchemaVersion}, {"command", args}, {"input", g6}};
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err)
      : args_(args), in_(in), out_(out), err_(err) {}

  std::vector<std::string> corpus(const Options& o) {
    if (o.input.empty() || o.input == "-") return read_lines(in_);
    std::ifstream f(o.input);
    if (!f) fail(ErrorKind::format, "cannot open input file " + o.input);
    return read_lines(f);
  }

  // Runs `h` on every input graph; returns the exit code.
  int per_graph(const Options& o, const Handler& h) {
    int code = kExitVerdict;
    for (const auto& line : corpus(o)) {
      try {
        const Graph g = parse_graph6(line);
        bool inconclusive = false;
        const auto t0 = std::chrono::steady_clock::now();
        json r = base_report(args_, line);
        r.update(h(g, inconclusive));
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
        r["stats"]["wall_ms"] = dt.count();
        out_ << r.dump() << '\n';
        if (inconclusive && code == kExitVerdict) code = kExitInconclusive;
      } catch (const BudgetExhausted& e) {
        err_ << "inconclusive: " << e.what() << '\n';
        if (code == kExitVerdict) code = kExitInconclusive;
      } catch (const Error& e) {
        err_ << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        code = kExitError;
      }
    }
    return code;
  }

  const std::vector<std::string>& args() const { return args_; }
  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  const std::vector<std::string>& args_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

// ---- survey ----

struct SurveyEntry {
  bool passed = false;
  std::string filter_note;
  PmhVerdict verdict;
};

std::optional<std::string> filter_reject(const Graph& g, const std::string& problem,
                                         SearchBudget budget) {
  if (g.order() < 3 || !is_connected(g)) return "disconnected or too small";
  if (g.size() % 2 != 0) return "odd size";
  if (problem == "p1") {
    if (g.min_degree() < 4 || !g.is_regular(g.min_degree())) return "not r-regular with r >= 4";
  } else if (problem == "p2") {
    if (!all_degrees_even(g)) return "not eulerian";
  } else if (problem == "maxdeg4") {
    if (g.max_degree() != 4) return "max degree is not 4";
  }
  const auto ham = is_hamiltonian(g, budget);
  if (!ham) throw BudgetExhausted("Hamiltonicity filter budget exhausted");
  if (!*ham) return "not Hamiltonian";
  return std::nullopt;
}

json entry_json(const std::string& problem, const std::string& g6, const SurveyEntry& e) {
  json j{{"problem", problem}, {"graph6", g6}, {"passed_filter", e.passed}};
  if (!e.passed) {
    j["filter_note"] = e.filter_note;
    return j;
  }
  j["status"] = std::string(to_string(e.verdict.status));
  j["vacuous"] = e.verdict.vacuous;
  j["matchings_tested"] = e.verdict.matchings_tested;
  j["search_nodes"] = e.verdict.search_nodes;
  if (e.verdict.witness) j["witness"] = matching_json(*e.verdict.witness);
  return j;
}

int run_survey(Runner& run, const Options& o, const std::string& problem,
               const std::string& journal_path, unsigned jobs) {
  const auto lines = run.corpus(o);
  int warnings = 0;
  std::vector<std::string> order;
  std::map<std::string, Graph> graphs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      Graph g = parse_graph6(lines[i]);
      if (graphs.emplace(lines[i], std::move(g)).second) order.push_back(lines[i]);
    } catch (const Error& e) {
      ++warnings;
      run.err() << "warning: corpus line " << i + 1 << " skipped: " << e.what() << '\n';
    }
  }

  std::map<std::string, json> done;
  if (!journal_path.empty()) {
    std::ifstream jf(journal_path);
    std::string line;
    while (jf && std::getline(jf, line)) {
      if (line.empty()) continue;
      try {
        json j = json::parse(line);
        if (j.value("problem", "") == problem) done[j.at("graph6").get<std::string>()] = j;
      } catch (const json::exception&) {
        run.err() << "warning: ignoring malformed journal line\n";
      }
    }
  }

  std::vector<std::string> todo;
  for (const auto& g6 : order)
    if (!done.contains(g6)) todo.push_back(g6);

  std::ofstream journal;
  if (!journal_path.empty()) {
    journal.open(journal_path, std::ios::app);
    if (!journal) fail(ErrorKind::format, "cannot open journal " + journal_path);
  }
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      const std::string& g6 = todo[k];
      const Graph& g = graphs.at(g6);
      SurveyEntry e;
      try {
        const auto reject = filter_reject(g, problem, o.budget());
        if (reject) {
          e.filter_note = *reject;
        } else {
          e.passed = true;
          e.verdict = is_pmh(line_graph_of(g), o.budget());
        }
      } catch (const BudgetExhausted&) {
        e.passed = true;
        e.verdict.status = PmhStatus::inconclusive;
      }
      json j = entry_json(problem, g6, e);
      std::lock_guard<std::mutex> guard(lock);
      if (journal.is_open()) journal << j.dump() << std::endl;
      done[g6] = std::move(j);
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json summary{{"schema_version", kSchemaVersion},
               {"command", run.args()},
               {"kind", "survey_summary"},
               {"problem", problem},
               {"corpus_lines", lines.size()},
               {"distinct_graphs", order.size()},
               {"warnings", warnings}};
  int tested = 0, pmh = 0, not_pmh = 0, inconclusive = 0, vacuous = 0;
  json candidates = json::array(), undecided = json::array();
  for (const auto& g6 : order) {
    const json& j = done.at(g6);
    if (!j.at("passed_filter").get<bool>()) continue;
    ++tested;
    run.out() << j.dump() << '\n';
    const auto status = j.at("status").get<std::string>();
    if (status == "pmh") ++pmh;
    if (status == "not_pmh") {
      ++not_pmh;
      candidates.push_back(g6);
    }
    if (status == "inconclusive") {
      ++inconclusive;
      undecided.push_back(g6);
    }
    if (j.value("vacuous", false)) ++vacuous;
  }
  summary["tested"] = tested;
  summary["pmh"] = pmh;
  summary["not_pmh"] = not_pmh;
  summary["inconclusive"] = inconclusive;
  summary["vacuous"] = vacuous;
  summary["counterexample_candidates"] = candidates;
  summary["inconclusive_graphs"] = undecided;
  summary["note"] = "evidence only; no claim about the open problems";
  run.out() << summary.dump() << '\n';
  run.err() << "survey: " << todo.size() << " graphs computed, "
            << order.size() - todo.size() << " taken from the journal\n";
  return inconclusive ? kExitInconclusive : kExitVerdict;
}

// ---- helpers shared by extend / kotzig ----

std::vector<Matching> matchings_for(const LineGraphMap& lgm, const std::string& path) {
  if (!path.empty()) return load_matchings(path);
  auto all = all_perfect_matchings(lgm.lg);
  // An empty list still runs once so the method's preconditions surface.
  if (all.empty()) all.emplace_back();
  return all;
}

bool extension_valid(const LineGraphMap& lgm, const Matching& m, const CycleWalk& w) {
  return is_hamiltonian_cycle(lgm.lg, w.vertices) && walk_contains_edges(w.vertices, m);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Perfect-matching Hamiltonicity toolkit for line graphs"};
  app.require_subcommand(1);
  Options o;
  read_env_defaults(o);
  Runner run(args, in, out, err);
  std::function<int()> action;

  // lg
  auto* lg = app.add_subcommand("lg", "line graph with its edge map and clique partition");
  add_common(lg, o);
  lg->callback([&] {
    action = [&] {
      return run.per_graph(o, [](const Graph& g, bool&) {
        const LineGraphMap lgm = build_line_graph(g);
        json edges = json::array();
        for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
        json cliques = json::array();
        for (const Clique& q : canonical_partition(lgm).cliques)
          cliques.push_back({{"center", q.center}, {"members", q.members}});
        return json{{"line_graph", write_graph6(lgm.lg)},
                    {"vertices", lgm.lg.order()},
                    {"edges", lgm.lg.size()},
                    {"vertex_edges", edges},
                    {"cliques", cliques}};
      });
    };
  });

  // pm-enum
  bool count_only = false, pm_on_lg = false;
  auto* pm = app.add_subcommand("pm-enum", "enumerate perfect matchings");
  add_common(pm, o);
  pm->add_flag("--count-only", count_only, "print only the number of matchings");
  pm->add_flag("--line-graph", pm_on_lg, "enumerate matchings of the line graph instead");
  pm->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) {
        const Graph target = pm_on_lg ? build_line_graph(g).lg : g;
        json r{{"target", pm_on_lg ? "line_graph" : "graph"}};
        if (count_only) {
          r["count"] = count_perfect_matchings(target);
          return r;
        }
        json ms = json::array();
        const auto n = enumerate_perfect_matchings(target, [&](const Matching& m) {
          ms.push_back(matching_json(m));
          return true;
        });
        r["count"] = n;
        r["matchings"] = ms;
        return r;
      });
    };
  });

  // cycles
  auto* cycles = app.add_subcommand("cycles", "cycle and tour queries on the input graph");
  cycles->require_subcommand(1);
  std::string forced_spec, allow_spec;
  bool count_cycles = false;
  int from_vertex = 0;

  auto* ham = cycles->add_subcommand("ham", "Hamiltonian cycle, optionally through forced edges");
  add_common(ham, o);
  ham->add_option("--forced", forced_spec, "edges the cycle must use, e.g. 0-1,2-3");
  ham->add_flag("--count", count_cycles, "also count all Hamiltonian cycles");
  ham->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        const auto forced = parse_edge_list(forced_spec);
        auto r = find_hamiltonian_cycle(g, forced, o.budget());
        json j{{"outcome", outcome_json(r.outcome)}, {"stats", {{"nodes", r.nodes}}}};
        j["hamiltonian"] = r.inconclusive() ? json(nullptr) : json(r.found());
        if (r.witness) j["cycle"] = walk_json(*r.witness);
        inconclusive = r.inconclusive();
        if (count_cycles) {
          const auto c = count_hamiltonian_cycles(g, HamiltonQuery{forced, {}}, o.budget());
          j["count"] = c.count;
          j["count_outcome"] = outcome_json(c.outcome);
          inconclusive = inconclusive || c.outcome == Outcome::inconclusive;
        }
        return j;
      });
    };
  });

  auto* dom = cycles->add_subcommand("domcycle", "dominating cycle");
  add_common(dom, o);
  dom->add_option("--allow", allow_spec,
                  "vertices allowed off the cycle, comma separated (default: all)");
  dom->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        std::vector<Vertex> allowed;
        if (allow_spec.empty()) {
          for (Vertex v = 0; v < g.order(); ++v) allowed.push_back(v);
        } else {
          allowed = parse_int_list(allow_spec);
        }
        auto r = find_dominating_cycle(g, allowed, o.budget());
        inconclusive = r.inconclusive();
        json j{{"outcome", outcome_json(r.outcome)}, {"stats", {{"nodes", r.nodes}}}};
        if (r.witness) j["cycle"] = walk_json(*r.witness);
        return j;
      });
    };
  });

  auto* domtour = cycles->add_subcommand("domtour", "dominating closed trail");
  add_common(domtour, o);
  domtour->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        auto r = find_dominating_tour(g, o.budget());
        inconclusive = r.inconclusive();
        json j{{"outcome", outcome_json(r.outcome)}, {"stats", {{"nodes", r.nodes}}}};
        if (r.witness) j["tour"] = walk_json(*r.witness);
        return j;
      });
    };
  });

  auto* euler = cycles->add_subcommand("euler", "Euler tour");
  add_common(euler, o);
  euler->callback([&] {
    action = [&] {
      return run.per_graph(o, [](const Graph& g, bool&) {
        const auto t = euler_tour(g);
        json j{{"eulerian", t.has_value()}};
        if (t) j["tour"] = walk_json(*t);
        return j;
      });
    };
  });

  auto* circ = cycles->add_subcommand("circ", "circumference and a longest cycle");
  add_common(circ, o);
  circ->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        auto r = longest_cycle(g, o.budget());
        inconclusive = r.inconclusive();
        json j{{"outcome", outcome_json(r.outcome)}, {"stats", {{"nodes", r.nodes}}}};
        if (r.witness) {
          j[r.inconclusive() ? "longest_found" : "circumference"] = r.witness->length();
          j["cycle"] = walk_json(*r.witness);
        }
        return j;
      });
    };
  });

  auto* hypo = cycles->add_subcommand("hypoham", "hypohamiltonicity");
  add_common(hypo, o);
  hypo->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        const auto h = is_hypohamiltonian(g, o.budget());
        inconclusive = !h.has_value();
        return json{{"hypohamiltonian", h ? json(*h) : json(nullptr)}};
      });
    };
  });

  auto* arb = cycles->add_subcommand("arbtrace", "arbitrary traceability from a vertex");
  add_common(arb, o);
  arb->add_option("--from", from_vertex, "start vertex")->required();
  arb->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) {
        const auto t = is_arbitrarily_traceable(g, from_vertex);
        return json{{"from", from_vertex}, {"traceable", t.traceable}, {"reason", t.reason}};
      });
    };
  });

  // pmh-check
  bool pmh_on_lg = false, keep_ext = false;
  auto* pmh = app.add_subcommand("pmh-check", "brute-force PMH verdict");
  add_common(pmh, o);
  pmh->add_flag("--line-graph", pmh_on_lg, "test the line graph of the input");
  pmh->add_flag("--extensions", keep_ext, "include the extension of every matching");
  pmh->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        const Graph target = pmh_on_lg ? build_line_graph(g).lg : g;
        const PmhVerdict v = is_pmh(target, o.budget(), keep_ext);
        inconclusive = v.status == PmhStatus::inconclusive;
        json j{{"target", pmh_on_lg ? "line_graph" : "graph"},
               {"status", std::string(to_string(v.status))},
               {"is_pmh", inconclusive ? json(nullptr) : json(v.is_pmh())},
               {"vacuous", v.vacuous},
               {"stats", {{"matchings_tested", v.matchings_tested}, {"nodes", v.search_nodes}}}};
        if (v.witness) j["witness"] = matching_json(*v.witness);
        if (keep_ext) {
          json ext = json::array();
          for (const auto& w : v.extensions) ext.push_back(walk_json(w));
          j["extensions"] = ext;
        }
        return j;
      });
    };
  });

  // extend
  std::string method = "subcubic", matching_path;
  int arb_from = -1;
  auto* ext = app.add_subcommand("extend", "extend perfect matchings of L(G) to Hamiltonian cycles");
  add_common(ext, o);
  ext->add_option("--method", method, "construction to use")
      ->check(CLI::IsMember({"subcubic", "complete", "bipartite", "arbtrace"}));
  ext->add_option("--matching", matching_path,
                  "JSON matching(s) of the line graph (default: every perfect matching)");
  ext->add_option("--from", arb_from, "start vertex for arbtrace (default: first that works)");
  ext->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool& inconclusive) {
        if (method == "complete" && g.size() != g.order() * (g.order() - 1) / 2)
          fail(ErrorKind::precondition, "extend --method complete needs a complete graph");
        if (method == "bipartite") {
          const int params[] = {g.order() / 2};
          if (g.order() % 2 != 0 || !(g == make_named_graph("bipartite", params)))
            fail(ErrorKind::precondition,
                 "extend --method bipartite needs K_{s,s} with sides 0..s-1 and s..2s-1");
        }
        const LineGraphMap lgm = build_line_graph(g);
        Vertex from = arb_from;
        if (method == "arbtrace" && from < 0) {
          for (Vertex v = 0; v < g.order() && from < 0; ++v)
            if (is_arbitrarily_traceable(g, v).traceable) from = v;
          if (from < 0) fail(ErrorKind::precondition, "graph is not arbitrarily traceable from any vertex");
        }
        json results = json::array();
        for (const Matching& m : matchings_for(lgm, matching_path)) {
          SearchResult<CycleWalk> r;
          if (method == "subcubic") r = extend_matching_subcubic(lgm, m, o.budget());
          if (method == "complete") r = extend_matching_complete(g.order(), m, o.budget());
          if (method == "bipartite") r = extend_matching_bipartite(g.order() / 2, m, o.budget());
          if (method == "arbtrace") {
            try {
              r.witness = extend_matching_arb_traceable(lgm, from, m, o.budget());
              r.outcome = Outcome::found;
            } catch (const BudgetExhausted&) {
              r.outcome = Outcome::inconclusive;
            } catch (const Error& err) {
              if (err.kind() != ErrorKind::construction) throw;
              r.outcome = Outcome::absent;
            }
          }
          inconclusive = inconclusive || r.inconclusive();
          json e{{"matching", matching_json(m)}, {"outcome", outcome_json(r.outcome)}};
          if (r.absent() && method != "complete") e["extendable"] = false;
          if (r.witness) {
            e["extendable"] = true;
            e["walk"] = walk_json(*r.witness);
            e["valid"] = extension_valid(lgm, m, *r.witness);
          }
          results.push_back(e);
        }
        json j{{"method", method}, {"results", results}};
        if (method == "arbtrace") j["from"] = from;
        return j;
      });
    };
  });

  // kotzig
  std::string kotzig_matching;
  auto* kot = app.add_subcommand("kotzig", "split L(G) into two Hamiltonian cycles, one through M");
  add_common(kot, o);
  kot->add_option("--matching", kotzig_matching,
                  "JSON matching(s) of the line graph (default: every perfect matching)");
  kot->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) {
        const LineGraphMap lgm = build_line_graph(g);
        json results = json::array();
        for (const Matching& m : matchings_for(lgm, kotzig_matching)) {
          const KotzigPartition p = kotzig_partition(g, m, o.budget());
          results.push_back({{"matching", matching_json(m)},
                             {"with_matching", walk_json(p.with_matching)},
                             {"complement", walk_json(p.complement)}});
        }
        return json{{"results", results}};
      });
    };
  });

  // construct
  auto* con = app.add_subcommand("construct", "Y-operations and triangle expansion");
  con->require_subcommand(1);
  int at = 0, keep = 0;
  std::string tri_spec;
  auto surgery_json = [](const SurgeryResult& s) {
    return json{{"graph6", write_graph6(s.graph)},
                {"vertices", s.graph.order()},
                {"edges", s.graph.size()},
                {"surgery",
                 {{"kind", s.surgery.kind == SurgeryKind::y_extension ? "y_extension" : "y_reduction"},
                  {"site", s.surgery.site},
                  {"old_to_new", s.surgery.old_to_new},
                  {"new_to_old", s.surgery.new_to_old}}}};
  };
  auto* yext = con->add_subcommand("yext", "expand a degree-3 vertex into a triangle");
  add_common(yext, o);
  yext->add_option("--at", at, "vertex to expand")->required();
  yext->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) { return surgery_json(y_extension(g, at)); });
    };
  });
  auto* yred = con->add_subcommand("yred", "contract a triangle into a vertex");
  add_common(yred, o);
  yred->add_option("--triangle", tri_spec, "three vertices a,b,c")->required();
  yred->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) {
        const auto t = parse_int_list(tri_spec);
        if (t.size() != 3) fail(ErrorKind::format, "--triangle needs exactly three vertices");
        return surgery_json(y_reduction(g, {t[0], t[1], t[2]}));
      });
    };
  });
  auto* expand = con->add_subcommand(
      "expand", "Y-extend every vertex but one of a cubic hypohamiltonian odd-size graph");
  add_common(expand, o);
  expand->add_option("--keep", keep, "vertex left unexpanded")->required();
  expand->callback([&] {
    action = [&] {
      return run.per_graph(o, [&](const Graph& g, bool&) {
        const ExpansionResult r = expand_all_but_one(g, keep, o.budget());
        json tris = json::array();
        for (const auto& t : r.triangles) tris.push_back(t);
        return json{{"graph6", write_graph6(r.graph)}, {"vertices", r.graph.order()},
                    {"edges", r.graph.size()},         {"kept", r.kept},
                    {"triangles", tris},               {"origin", r.origin}};
      });
    };
  });

  // survey
  std::string problem = "maxdeg4", journal_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* survey = app.add_subcommand("survey", "PMH evidence over a graph6 corpus");
  add_common(survey, o);
  survey->add_option("--problem", problem, "filter: p1, p2 or maxdeg4")
      ->check(CLI::IsMember({"p1", "p2", "maxdeg4"}));
  survey->add_option("--journal", journal_path, "append-only JSONL journal for resuming");
  survey->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  survey->callback([&] { action = [&] { return run_survey(run, o, problem, journal_path, jobs); }; });

  // gen / generate
  std::string tag;
  std::vector<int> params;
  auto* gen = app.add_subcommand("gen", "graph6 of a named graph");
  gen->add_option("tag", tag, "family tag")->required();
  gen->add_option("params", params, "family parameters");
  gen->callback([&] {
    action = [&] {
      out << write_graph6(make_named_graph(tag, params)) << '\n';
      return kExitVerdict;
    };
  });
  int min_order = 1, max_order = 6, max_degree = -1;
  bool connected_only = false;
  auto* generate = app.add_subcommand("generate", "all graphs up to isomorphism, as graph6");
  generate->add_option("--min-order", min_order)->check(CLI::Range(1, 11));
  generate->add_option("--max-order", max_order)->check(CLI::Range(1, 11));
  generate->add_option("--max-degree", max_degree);
  generate->add_flag("--connected", connected_only);
  generate->callback([&] {
    action = [&] {
      for (int n = min_order; n <= max_order; ++n)
        for (const Graph& g : all_graphs(n, max_degree))
          if (!connected_only || is_connected(g)) out << write_graph6(g) << '\n';
      return kExitVerdict;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitVerdict;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitVerdict;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }
  try {
    return action ? action() : kExitError;
  } catch (const BudgetExhausted& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace lgpmh::cli
