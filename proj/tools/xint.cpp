// Command-line front end. stdout (or --output) carries machine output only;
// diagnostics go to stderr.
//
// Exit codes: 0 ok/pass, 1 failed check, 2 bad input, 3 budget exceeded,
// 4 notable result (conjecture probe).

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xint/chordal.hpp"
#include "xint/compression.hpp"
#include "xint/error.hpp"
#include "xint/extremal.hpp"
#include "xint/families.hpp"
#include "xint/graph.hpp"
#include "xint/io.hpp"
#include "xint/theorems.hpp"

namespace {

using nlohmann::json;
using namespace xint;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotable = 4;

struct GraphSource {
  std::string spec;
  std::string file;

  void add(CLI::App* app) {
    auto* s = app->add_option("--graph", spec, "Builder spec, e.g. cycle:7, cliques:2,3,3");
    auto* f = app->add_option("--graph-file", file, "Graph JSON file {\"n\", \"edges\"} (1-based)");
    s->excludes(f);
  }

  Graph load() const {
    if (spec.empty() == file.empty()) throw std::invalid_argument("exactly one of --graph / --graph-file is required");
    if (!spec.empty()) return parse_graph_spec(spec);
    return graph_from_json(read_json(file));
  }

  static json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  }
};

// Inline JSON or @path.
json json_argument(const std::string& text) {
  if (!text.empty() && text.front() == '@') return GraphSource::read_json(text.substr(1));
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON argument: ") + e.what());
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

int report_exit(const TheoremReport& r) {
  if (!r.pass) return kExitFail;
  return r.notable ? kExitNotable : kExitOk;
}

// Shared theorem parameters for verify and grid.
struct TheoremArgs {
  std::string theorem;
  int n = 0;
  int r = 0;
  int k = 2;
  std::string sizes;
  int seeds = 0;
  std::uint64_t seed = 1;
  int n_max = 0;
  std::string r_rule = "all";
  std::size_t limit = 20000;
  std::uint64_t budget = SearchOptions{}.node_budget;
  GraphSource graph;

  SuiteOptions suite() const {
    if (budget == 0 || limit == 0) throw std::invalid_argument("budgets must be positive");
    SuiteOptions o;
    o.search.node_budget = budget;
    o.optima_limit = limit;
    return o;
  }
};

const std::vector<std::string> kTheorems = {"hilton", "borg-leader",     "union-cliques", "chordal",    "cycle",
                                            "hst",    "bollobas-leader", "mu-lemma",      "conjecture"};

void add_theorem_options(CLI::App* app, TheoremArgs& a) {
  app->add_option("theorem", a.theorem, "Theorem name")->required()->check(CLI::IsMember(kTheorems));
  app->add_option("--n", a.n, "Ground-set size / number of edges / cycle length");
  app->add_option("--r", a.r, "Set size");
  app->add_option("--k", a.k, "Number of families");
  app->add_option("--sizes", a.sizes, "Clique sizes, comma separated");
  app->add_option("--seeds", a.seeds, "Number of random instances");
  app->add_option("--seed", a.seed, "Base seed");
  app->add_option("--n-max", a.n_max, "Largest random graph order");
  app->add_option("--r-rule", a.r_rule, "Conjecture probe r choice: max|all|random");
  app->add_option("--limit", a.limit, "Cap on enumerated optima");
  app->add_option("--budget", a.budget, "Search node budget");
  a.graph.add(app);
}

void need(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

TheoremReport run_theorem(const TheoremArgs& a) {
  const SuiteOptions o = a.suite();
  const std::string& t = a.theorem;
  if (t == "hilton") return verify_hilton(a.n, a.r, a.k, o);
  if (t == "borg-leader") return verify_borg_leader(a.n, a.r, a.k, o);
  if (t == "union-cliques") {
    need(!a.sizes.empty(), "union-cliques needs --sizes");
    return verify_union_cliques(parse_int_list(a.sizes), a.r, a.k, o);
  }
  if (t == "hst") {
    need(!a.sizes.empty(), "hst needs --sizes");
    return verify_hst(parse_int_list(a.sizes), a.r, o);
  }
  if (t == "chordal") return verify_chordal(a.graph.load(), a.r, o);
  if (t == "cycle") return verify_cycle(a.n, a.r, o);
  if (t == "bollobas-leader") return verify_bollobas_leader(a.n, a.r, o);
  if (t == "mu-lemma") return verify_mu_lemma(a.seeds > 0 ? a.seeds : 300, a.seed, a.n_max > 0 ? a.n_max : 10);
  ProbeOptions p;
  p.n_max = a.n_max > 0 ? a.n_max : 8;
  p.seeds = a.seeds > 0 ? a.seeds : 500;
  p.seed = a.seed;
  p.rule = parse_r_rule(a.r_rule);
  p.suite = o;
  return probe_conjecture(p);
}

// Non-decreasing multisets over `parts` with between lo and hi elements.
void multisets(const std::vector<int>& parts, int lo, int hi, std::vector<int>& cur, std::size_t from,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) >= lo) out.push_back(cur);
  if (static_cast<int>(cur.size()) == hi) return;
  for (std::size_t i = from; i < parts.size(); ++i) {
    cur.push_back(parts[i]);
    multisets(parts, lo, hi, cur, i, out);
    cur.pop_back();
  }
}

struct GridArgs {
  TheoremArgs base;
  int k_max = 5;
  std::string parts = "2,3,4";
  int components_min = 2;
  int components_max = 3;
  int jobs = 0;
  bool stable = false;
  std::string output;
};

std::vector<TheoremArgs> grid_rows(const GridArgs& g) {
  const TheoremArgs& b = g.base;
  std::vector<TheoremArgs> rows;
  auto row = [&](auto&& edit) {
    TheoremArgs a = b;
    edit(a);
    rows.push_back(a);
  };
  const std::string& t = b.theorem;
  const int n_max = b.n_max > 0 ? b.n_max : 6;
  if (t == "hilton") {
    for (int n = 2; n <= n_max; ++n)
      for (int r = 1; 2 * r <= n; ++r)
        for (int k = 2; k <= g.k_max; ++k) row([&](TheoremArgs& a) { a.n = n, a.r = r, a.k = k; });
  } else if (t == "borg-leader") {
    for (int n = 1; n <= n_max; ++n)
      for (int r = 1; r <= n; ++r)
        for (int k = 2; k <= g.k_max; ++k) row([&](TheoremArgs& a) { a.n = n, a.r = r, a.k = k; });
  } else if (t == "bollobas-leader") {
    for (int n = 1; n <= n_max; ++n)
      for (int r = 1; r <= n; ++r) row([&](TheoremArgs& a) { a.n = n, a.r = r; });
  } else if (t == "cycle") {
    for (int n = 2; n <= n_max; ++n)
      for (int r = 1; 2 * r <= n || (n == 3 && r == 1); ++r) row([&](TheoremArgs& a) { a.n = n, a.r = r; });
  } else if (t == "union-cliques" || t == "hst") {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    multisets(parse_int_list(g.parts), g.components_min, g.components_max, cur, 0, all);
    for (const auto& sizes : all) {
      std::string spec;
      for (int s : sizes) spec += (spec.empty() ? "" : ",") + std::to_string(s);
      const int min_size = *std::min_element(sizes.begin(), sizes.end());
      for (int r = 1; r <= static_cast<int>(sizes.size()); ++r) {
        if (t == "hst") {
          row([&](TheoremArgs& a) { a.sizes = spec, a.r = r; });
          continue;
        }
        for (int k = 2; k <= min_size; ++k) row([&](TheoremArgs& a) { a.sizes = spec, a.r = r, a.k = k; });
      }
    }
  } else if (t == "mu-lemma" || t == "conjecture") {
    const int seeds = b.seeds > 0 ? b.seeds : (t == "mu-lemma" ? 300 : 500);
    for (int i = 0; i < seeds; ++i)
      row([&](TheoremArgs& a) { a.seeds = 1, a.seed = derive_seed(b.seed, static_cast<std::uint64_t>(i)); });
  } else {
    throw std::invalid_argument("no grid defined for '" + t + "'");
  }
  return rows;
}

int cmd_grid(const GridArgs& g) {
  const std::vector<TheoremArgs> rows = grid_rows(g);
  struct Slot {
    std::optional<TheoremReport> report;
    int error = kExitOk;
    std::string message;
  };
  std::vector<Slot> slots(rows.size());
  const int jobs = g.jobs > 0 ? g.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      slots[i].report = run_theorem(rows[i]);
    } catch (const BudgetExceeded& e) {
      slots[i] = {std::nullopt, kExitBudget, e.what()};
    } catch (const std::invalid_argument& e) {
      slots[i] = {std::nullopt, kExitBadInput, e.what()};
    } catch (const std::exception& e) {
      slots[i] = {std::nullopt, kExitFail, e.what()};
    }
  }
  Output out(g.output);
  std::ostream& os = out.stream();
  os << xint::report_csv_header() << '\n';
  int code = kExitOk;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i].report) {
      // Rows before the abort are already written.
      os.flush();
      std::cerr << "grid aborted at row " << i + 1 << ": " << slots[i].message << '\n';
      return slots[i].error;
    }
    const TheoremReport& r = *slots[i].report;
    os << report_csv_row(r, g.stable) << '\n';
    if (!r.pass)
      code = kExitFail;
    else if (r.notable && code == kExitOk)
      code = kExitNotable;
  }
  std::cerr << rows.size() << " rows\n";
  return code;
}

json compress_trace_chordal(const Graph& g, const SetFamily& a, const SetFamily& b, int v1, int vi) {
  const CompressedPair c = compress_pair_chordal(g, a, b, v1 - 1, vi - 1);
  return {{"mode", "chordal"},
          {"graph", graph_to_json(g)},
          {"v1", v1},
          {"vi", vi},
          {"input", {{"A", family_to_json(a)}, {"B", family_to_json(b)}}},
          {"shifted", {{"A", family_to_json(c.a_shifted)}, {"B", family_to_json(c.b_shifted)}}},
          {"minus_vi", {{"graph", graph_to_json(c.minus.graph)}, {"A", family_to_json(c.a_avoiding)}, {"B", family_to_json(c.b_avoiding)}}},
          {"down_vi", {{"graph", graph_to_json(c.down.graph)}, {"A", family_to_json(c.a_through)}, {"B", family_to_json(c.b_through)}}},
          {"lemma_holds", true}};
}

json split_json(const CycleSplit& s) {
  return {{"through_high", family_to_json(s.through_high)}, {"through_wrap", family_to_json(s.through_wrap)},
          {"remainder", family_to_json(s.remainder)},       {"shifted", family_to_json(s.shifted)},
          {"kept", family_to_json(s.kept)},                 {"shifted_tail", family_to_json(s.shifted_tail)},
          {"reduced", family_to_json(s.reduced)}};
}

json compress_trace_cycle(const Graph& g, const SetFamily& a, const SetFamily& b) {
  const CycleSplit sa = cycle_split(a);
  const CycleSplit sb = cycle_split(b);
  const ClaimCheck check = verify_cross_claims(sa, sb);
  json out = {{"mode", "cycle"},
              {"graph", graph_to_json(g)},
              {"input", {{"A", family_to_json(a)}, {"B", family_to_json(b)}}},
              {"A", split_json(sa)},
              {"B", split_json(sb)},
              {"claims_hold", check.passed}};
  if (!check.passed) {
    out["failed_claim"] = check.claim;
    if (check.counterexample)
      out["pair"] = {vertex_set_to_json(check.counterexample->first), vertex_set_to_json(check.counterexample->second)};
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Cross-intersecting families of independent sets"};
  app.require_subcommand(1);
  std::string output;
  bool stable = false;

  // enumerate
  GraphSource e_graph;
  int e_r = -1;
  int e_star = 0;
  bool e_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the independent r-sets of a graph");
  e_graph.add(enumerate);
  enumerate->add_option("--r", e_r, "Set size")->required();
  enumerate->add_option("--star", e_star, "Only sets containing this vertex (1-based)");
  enumerate->add_flag("--count-only", e_count, "Print only the count");
  enumerate->add_option("--output", output, "Output file");

  // mu
  GraphSource m_graph;
  auto* mu_cmd = app.add_subcommand("mu", "Minimum size of a maximal independent set");
  m_graph.add(mu_cmd);
  mu_cmd->add_option("--output", output, "Output file");

  // search
  GraphSource s_graph;
  int s_r = -1;
  int s_k = 2;
  std::string s_engine;
  bool s_optima = false;
  bool s_intersecting = false;
  std::size_t s_limit = 1000;
  std::uint64_t s_budget = SearchOptions{}.node_budget;
  auto* search = app.add_subcommand("search", "Maximum cross-intersecting sum (or intersecting family)");
  s_graph.add(search);
  search->add_option("--r", s_r, "Set size")->required();
  search->add_option("--k", s_k, "Number of families");
  search->add_option("--engine", s_engine, "reduced|naive|branch-and-bound|exhaustive");
  search->add_flag("--enumerate-optima", s_optima, "List every optimum up to --limit");
  search->add_flag("--intersecting", s_intersecting, "Maximum intersecting subfamily instead");
  search->add_option("--limit", s_limit, "Cap on listed optima");
  search->add_option("--budget", s_budget, "Search node budget");
  search->add_flag("--stable", stable, "Omit run-dependent fields");
  search->add_option("--output", output, "Output file");

  // verify
  TheoremArgs v_args;
  auto* verify = app.add_subcommand("verify", "Check one theorem instance and print a report");
  add_theorem_options(verify, v_args);
  verify->add_flag("--stable", stable, "Zero runtime fields");
  verify->add_option("--output", output, "Output file");

  // grid
  GridArgs g_args;
  auto* grid = app.add_subcommand("grid", "Sweep a theorem over a parameter range, CSV out");
  add_theorem_options(grid, g_args.base);
  grid->add_option("--k-max", g_args.k_max, "Largest k");
  grid->add_option("--parts", g_args.parts, "Clique sizes to combine");
  grid->add_option("--components-min", g_args.components_min, "Fewest cliques");
  grid->add_option("--components-max", g_args.components_max, "Most cliques");
  grid->add_option("--jobs", g_args.jobs, "Parallel rows (default: all cores)");
  grid->add_flag("--stable", g_args.stable, "Zero runtime fields");
  grid->add_option("--output", g_args.output, "CSV file");

  // chordal-check
  GraphSource c_graph;
  auto* chordal = app.add_subcommand("chordal-check", "Elimination ordering or an induced long cycle");
  c_graph.add(chordal);
  chordal->add_option("--output", output, "Output file");

  // compress-demo
  GraphSource d_graph;
  std::string d_a = "[]";
  std::string d_b = "[]";
  int d_r = -1;
  int d_v1 = 0;
  int d_vi = 0;
  std::string d_mode = "chordal";
  auto* demo = app.add_subcommand("compress-demo", "Trace a compression or cycle split as JSON");
  d_graph.add(demo);
  demo->add_option("--a", d_a, "First family: JSON list or @file");
  demo->add_option("--b", d_b, "Second family: JSON list or @file");
  demo->add_option("--r", d_r, "Set size (needed when both families are empty)");
  demo->add_option("--mode", d_mode, "chordal|cycle")->check(CLI::IsMember({"chordal", "cycle"}));
  demo->add_option("--v1", d_v1, "Simplicial vertex (1-based, chordal mode)");
  demo->add_option("--vi", d_vi, "Neighbour of v1 (1-based, chordal mode)");
  demo->add_option("--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*enumerate) {
      const Graph g = e_graph.load();
      if (e_r < 0) throw std::invalid_argument("--r must be non-negative");
      if (e_star < 0 || e_star > g.order()) throw std::invalid_argument("--star out of range");
      const SetFamily family = e_star > 0 ? star(g, e_r, e_star - 1) : enumerate_independent(g, e_r);
      Output out(output);
      if (e_count)
        out.stream() << family.size() << '\n';
      else
        out.stream() << json{{"r", e_r}, {"count", family.size()}, {"family", family_to_json(family)}}.dump() << '\n';
      return kExitOk;
    }
    if (*mu_cmd) {
      const MuResult m = mu(m_graph.load());
      Output out(output);
      out.stream() << json{{"mu", m.mu}, {"witness", vertex_set_to_json(m.witness)}}.dump() << '\n';
      return kExitOk;
    }
    if (*search) {
      const Graph g = s_graph.load();
      if (s_r < 0) throw std::invalid_argument("--r must be non-negative");
      if (s_budget == 0 || s_limit == 0) throw std::invalid_argument("budgets must be positive");
      const SetFamily family = enumerate_independent(g, s_r);
      const DisjointnessGraph meta = disjointness_graph(family);
      SearchOptions options;
      options.node_budget = s_budget;
      json result;
      if (s_intersecting) {
        const Engine engine = s_engine.empty() ? Engine::kBranchAndBound : parse_engine(s_engine);
        if (s_optima) {
          const IntersectingOptima optima = enumerate_max_intersecting(meta, s_limit, options);
          json list = json::array();
          for (const auto& idx : optima.families) {
            json members = json::array();
            for (std::size_t i : idx) members.push_back(vertex_set_to_json(family[i]));
            list.push_back(std::move(members));
          }
          result = {{"value", optima.value}, {"count", optima.families.size()}, {"truncated", optima.truncated},
                    {"optima", std::move(list)}};
        } else {
          result = intersecting_result_to_json(max_intersecting(meta, engine, options), family, stable);
        }
      } else {
        if (s_k < 1) throw std::invalid_argument("--k must be positive");
        const Engine engine = s_engine.empty() ? Engine::kReduced : parse_engine(s_engine);
        if (s_optima)
          result = optima_to_json(enumerate_optima(meta, s_k, s_limit, engine, options), family);
        else
          result = search_result_to_json(max_cross_sum(meta, s_k, engine, options), family, stable);
      }
      Output out(output);
      out.stream() << result.dump() << '\n';
      return kExitOk;
    }
    if (*verify) {
      const TheoremReport report = run_theorem(v_args);
      Output out(output);
      out.stream() << report_to_json(report, stable).dump(2) << '\n';
      return report_exit(report);
    }
    if (*grid) return cmd_grid(g_args);
    if (*chordal) {
      const Graph g = c_graph.load();
      json result;
      int code = kExitOk;
      if (const auto ordering = find_elimination_ordering(g)) {
        json order = json::array();
        for (Vertex v : ordering->order) order.push_back(v + 1);
        result = {{"chordal", true}, {"ordering", std::move(order)}};
      } else {
        code = kExitFail;
        result = {{"chordal", false}};
        if (g.order() <= 10) {
          json cycle = json::array();
          const auto found = find_induced_long_cycle(g);
          for (Vertex v : *found) cycle.push_back(v + 1);
          result["induced_cycle"] = std::move(cycle);
        }
      }
      Output out(output);
      out.stream() << result.dump() << '\n';
      return code;
    }
    if (*demo) {
      const Graph g = d_graph.load();
      std::optional<int> r;
      if (d_r >= 0) r = d_r;
      const json ja = json_argument(d_a);
      const json jb = json_argument(d_b);
      if (!r && !ja.empty()) r = static_cast<int>(ja[0].size());
      if (!r && !jb.empty()) r = static_cast<int>(jb[0].size());
      const SetFamily a = family_from_json(ja, g, r);
      const SetFamily b = family_from_json(jb, g, r);
      json trace;
      if (d_mode == "cycle") {
        trace = compress_trace_cycle(g, a, b);
      } else {
        if (d_v1 < 1 || d_vi < 1 || d_v1 > g.order() || d_vi > g.order())
          throw std::invalid_argument("chordal mode needs --v1 and --vi in range");
        trace = compress_trace_chordal(g, a, b, d_v1, d_vi);
      }
      Output out(output);
      out.stream() << trace.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
