#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "theorems_internal.hpp"
#include "xint/chordal.hpp"
#include "xint/compression.hpp"
#include "xint/error.hpp"
#include "xint/io.hpp"
#include "xint/theorems.hpp"

namespace xint {

using nlohmann::json;

namespace {

constexpr int kResampleLimit = 10000;

// Outcome of one seeded run; `error` is set when the run threw.
struct RunOutcome {
  int checked = 0;
  int held = 0;
  bool notable = false;
  std::vector<json> witnesses;
  std::optional<std::string> error;
};

template <typename Job>
std::vector<RunOutcome> run_seeds(int runs, const Job& job) {
  std::vector<RunOutcome> out(static_cast<std::size_t>(std::max(runs, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < runs; ++i) {
    RunOutcome& o = out[static_cast<std::size_t>(i)];
    try {
      job(i, o);
    } catch (const InvariantViolation& e) {
      o.error = e.what();
      o.witnesses.push_back({{"run", i}, {"error", e.what()}, {"detail", json::parse(e.witness(), nullptr, false)}});
    } catch (const std::exception& e) {
      o.error = e.what();
      o.witnesses.push_back({{"run", i}, {"error", e.what()}});
    }
  }
  return out;
}

// Folds outcomes in seed order. Errors count as failures.
void fold(const std::vector<RunOutcome>& outcomes, TheoremReport& report, const char* unit) {
  int errors = 0;
  for (const RunOutcome& o : outcomes) {
    report.bound += o.checked;
    report.achieved += o.held;
    report.notable = report.notable || o.notable;
    if (o.error) ++errors;
    for (const json& w : o.witnesses) report.witnesses.push_back(w);
  }
  report.findings.push_back(std::to_string(report.achieved) + " of " + std::to_string(report.bound) + " " + unit +
                            " held");
  if (errors > 0) report.findings.push_back(std::to_string(errors) + " runs aborted with an error");
  report.pass = errors == 0 && report.achieved == report.bound;
}

std::optional<Vertex> compression_head(const Graph& g) {
  const auto ordering = find_elimination_ordering(g);
  if (!ordering) return std::nullopt;
  for (Vertex v : ordering->order)
    if (g.degree(v) > 0 && is_simplicial(g, v)) return v;
  return std::nullopt;
}

}  // namespace

std::pair<SetFamily, SetFamily> random_cross_intersecting_pair(const SetFamily& universe, Rng& rng) {
  const double pa = rng.uniform();
  std::vector<VertexSet> a;
  for (VertexSet s : universe)
    if (rng.chance(pa)) a.push_back(s);
  const double pb = rng.uniform();
  std::vector<VertexSet> b;
  for (VertexSet s : universe) {
    const bool meets_all = std::all_of(a.begin(), a.end(), [&](VertexSet t) { return s.intersects(t); });
    if (meets_all && rng.chance(pb)) b.push_back(s);
  }
  return {SetFamily::adopt_canonical(universe.host(), universe.r(), std::move(a)),
          SetFamily::adopt_canonical(universe.host(), universe.r(), std::move(b))};
}

Graph random_dominated_graph(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("random_dominated_graph: needs n >= 2");
  const Graph base = random_graph(n, rng.uniform(), rng);
  std::vector<std::pair<Vertex, Vertex>> edges = base.edges();
  edges.emplace_back(0, 1);
  base.neighbors(0).for_each([&](Vertex u) {
    if (u != 1) edges.emplace_back(1, u);
  });
  return Graph::from_edges(n, edges);
}

RRule parse_r_rule(const std::string& name) {
  if (name == "max") return RRule::kMax;
  if (name == "all") return RRule::kAll;
  if (name == "random") return RRule::kRandom;
  throw std::invalid_argument("unknown r rule '" + name + "' (max|all|random)");
}

TheoremReport probe_conjecture(const ProbeOptions& options) {
  if (options.n_max < 2 || options.n_max > 12) throw std::invalid_argument("conjecture: needs 2 <= n-max <= 12");
  if (options.seeds < 0) throw std::invalid_argument("conjecture: seeds must be non-negative");
  const char* rule = options.rule == RRule::kMax ? "max" : options.rule == RRule::kAll ? "all" : "random";
  return detail::run_report(
      "conjecture", {{"n_max", options.n_max}, {"seeds", options.seeds}, {"seed", options.seed}, {"r_rule", rule}},
      [&](TheoremReport& report) {
        report.branch = "|A|+|B| <= |J^r(G)| for r <= mu/2";
        const auto outcomes = run_seeds(options.seeds, [&](int i, RunOutcome& o) {
          Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(i)));
          for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
            const int n = rng.between(2, options.n_max);
            const Graph g = random_graph(n, rng.uniform(), rng);
            const int half = mu(g).mu / 2;
            if (half < 1) continue;
            std::vector<int> rs;
            if (options.rule == RRule::kAll)
              for (int r = 1; r <= half; ++r) rs.push_back(r);
            else if (options.rule == RRule::kMax)
              rs.push_back(half);
            else
              rs.push_back(rng.between(1, half));
            for (int r : rs) {
              const SetFamily family = enumerate_independent(g, r);
              TheoremReport scratch;
              const detail::CrossRun run = detail::run_cross(family, 2, options.suite, scratch);
              ++o.checked;
              if (run.best.value <= static_cast<std::int64_t>(family.size())) {
                ++o.held;
              } else {
                o.notable = true;
                o.witnesses.push_back({{"role", "counterexample-candidate"},
                                       {"run", i},
                                       {"graph", graph_to_json(g)},
                                       {"r", r},
                                       {"achieved", run.best.value},
                                       {"bound", family.size()},
                                       {"families", detail::families_json(run.decoded)}});
              }
            }
            return;
          }
          throw std::runtime_error("no graph with mu >= 2 after resampling");
        });
        fold(outcomes, report, "instances");
        // Excesses are candidates against an open statement, not failures.
        if (report.notable) {
          report.findings.push_back("NOTABLE: bound exceeded; candidates serialized");
          report.pass = std::none_of(outcomes.begin(), outcomes.end(), [](const RunOutcome& o) { return o.error.has_value(); });
        }
      });
}

TheoremReport verify_mu_lemma(int seeds, std::uint64_t seed, int n_max) {
  if (n_max < 2 || n_max > 20) throw std::invalid_argument("mu-lemma: needs 2 <= n-max <= 20");
  if (seeds < 0) throw std::invalid_argument("mu-lemma: seeds must be non-negative");
  return detail::run_report("mu-lemma", {{"seeds", seeds}, {"seed", seed}, {"n_max", n_max}}, [&](TheoremReport& report) {
    report.branch = "mu(G-v2) >= mu(G) and mu(G|v2)+1 >= mu(G)";
    const auto outcomes = run_seeds(seeds, [&](int i, RunOutcome& o) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const Graph g = random_dominated_graph(rng.between(2, n_max), rng);
      const int base = mu(g).mu;
      for (Vertex v1 = 0; v1 < g.order(); ++v1)
        for (Vertex v2 = 0; v2 < g.order(); ++v2) {
          if (v1 == v2 || !is_dominated(g, v1, v2)) continue;
          const int minus = mu(delete_vertex(g, v2).graph).mu;
          const int down = mu(delete_closed_neighborhood(g, v2).graph).mu;
          ++o.checked;
          // r <= mu(G)/2 implies r <= mu(G-v2)/2 follows from the first inequality.
          if (minus >= base && down + 1 >= base) {
            ++o.held;
          } else {
            o.witnesses.push_back({{"role", "violation"}, {"run", i}, {"graph", graph_to_json(g)}, {"v1", v1 + 1},
                                   {"v2", v2 + 1}, {"mu", base}, {"mu_minus", minus}, {"mu_down", down}});
          }
        }
    });
    fold(outcomes, report, "dominated pairs");
  });
}

TheoremReport chordal_suite(int graphs, int n_max, std::uint64_t seed, const SuiteOptions& options) {
  if (n_max < 2 || n_max > 12) throw std::invalid_argument("chordal suite: needs 2 <= n-max <= 12");
  return detail::run_report("chordal-suite", {{"graphs", graphs}, {"n_max", n_max}, {"seed", seed}}, [&](TheoremReport& report) {
    report.branch = "optimum = |J^r(G)|, r = mu/2";
    const auto outcomes = run_seeds(graphs, [&](int i, RunOutcome& o) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
        const Graph g = random_chordal(rng.between(2, n_max), rng.uniform(), rng.next());
        const int r = mu(g).mu / 2;
        if (r < 1) continue;
        const TheoremReport sub = verify_chordal(g, r, options);
        ++o.checked;
        if (sub.pass)
          ++o.held;
        else
          o.witnesses.push_back({{"run", i}, {"report", report_to_json(sub, true)}});
        return;
      }
      throw std::runtime_error("no chordal graph with mu >= 2 after resampling");
    });
    fold(outcomes, report, "graphs");
  });
}

TheoremReport compression_harness(int runs, int n_max, std::uint64_t seed) {
  if (n_max < 2 || n_max > 12) throw std::invalid_argument("compression harness: needs 2 <= n-max <= 12");
  return detail::run_report("compression", {{"runs", runs}, {"n_max", n_max}, {"seed", seed}}, [&](TheoremReport& report) {
    report.branch = "compressed split pairs cross-intersecting";
    const auto outcomes = run_seeds(runs, [&](int i, RunOutcome& o) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
        const Graph g = random_chordal(rng.between(2, n_max), rng.uniform(), rng.next());
        const auto v1 = compression_head(g);
        if (!v1) continue;
        int r_max = 0;
        while (count_independent(g, r_max + 1) > 0) ++r_max;
        const int r = rng.between(1, r_max);
        const SetFamily universe = enumerate_independent(g, r);
        const auto [a, b] = random_cross_intersecting_pair(universe, rng);
        const std::vector<Vertex> nbrs = g.neighbors(*v1).elements();
        const Vertex vi = nbrs[rng.below(nbrs.size())];
        const CompressedPair c = compress_pair_chordal(g, a, b, *v1, vi);
        const bool held = is_cross_intersecting(c.a_through, c.b_through) &&
                          is_cross_intersecting(c.a_avoiding, c.b_avoiding) &&
                          c.a_shifted.size() == a.size() && c.b_shifted.size() == b.size() &&
                          shift_family(c.a_shifted, vi, *v1) == c.a_shifted &&
                          shift_family(c.b_shifted, vi, *v1) == c.b_shifted;
        ++o.checked;
        if (held)
          ++o.held;
        else
          o.witnesses.push_back({{"role", "violation"}, {"run", i}, {"graph", graph_to_json(g)}, {"A", family_to_json(a)},
                                 {"B", family_to_json(b)}, {"v1", *v1 + 1}, {"vi", vi + 1}});
        return;
      }
      throw std::runtime_error("no chordal graph with an edge after resampling");
    });
    fold(outcomes, report, "compressions");
  });
}

TheoremReport cycle_claims_harness(int runs, int n_max, std::uint64_t seed) {
  if (n_max < 4 || n_max > 16) throw std::invalid_argument("cycle claims harness: needs 4 <= n-max <= 16");
  return detail::run_report("cycle-claims", {{"runs", runs}, {"n_max", n_max}, {"seed", seed}}, [&](TheoremReport& report) {
    report.branch = "split pairs cross-intersecting over C_{n-1} and C_{n-2}";
    const auto outcomes = run_seeds(runs, [&](int i, RunOutcome& o) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const int n = rng.between(4, n_max);
      const int r = rng.between(1, n / 2);
      const SetFamily universe = enumerate_independent(Graph::cycle(n), r);
      const auto [a, b] = random_cross_intersecting_pair(universe, rng);
      const ClaimCheck check = verify_cross_claims(cycle_split(a), cycle_split(b));
      ++o.checked;
      if (check) {
        ++o.held;
      } else {
        json w = {{"role", "violation"}, {"run", i}, {"n", n}, {"A", family_to_json(a)}, {"B", family_to_json(b)},
                  {"claim", check.claim}};
        if (check.counterexample)
          w["pair"] = {vertex_set_to_json(check.counterexample->first), vertex_set_to_json(check.counterexample->second)};
        o.witnesses.push_back(std::move(w));
      }
    });
    fold(outcomes, report, "split pairs");
  });
}

}  // namespace xint
