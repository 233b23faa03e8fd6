#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "xint/extremal.hpp"
#include "xint/families.hpp"
#include "xint/graph.hpp"
#include "xint/random.hpp"

namespace xint {

struct TheoremReport {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  std::int64_t bound = 0;
  std::int64_t achieved = 0;
  std::string branch;
  bool pass = false;
  bool notable = false;
  std::vector<std::string> findings;
  nlohmann::json witnesses = nlohmann::json::array();
  std::int64_t runtime_ms = 0;
};

/// Suite refuses instances above these sizes instead of approximating.
inline constexpr std::size_t kSuiteMaxMembers = 200;

struct SuiteOptions {
  SearchOptions search;
  std::size_t optima_limit = 20000;
};

TheoremReport verify_hilton(int n, int r, int k, const SuiteOptions& options = {});
TheoremReport verify_borg_leader(int n, int r, int k, const SuiteOptions& options = {});
TheoremReport verify_union_cliques(const std::vector<int>& sizes, int r, int k, const SuiteOptions& options = {});
TheoremReport verify_chordal(const Graph& g, int r, const SuiteOptions& options = {});
TheoremReport verify_cycle(int n, int r, const SuiteOptions& options = {});
TheoremReport verify_hst(const std::vector<int>& sizes, int r, const SuiteOptions& options = {});
TheoremReport verify_bollobas_leader(int n, int r, const SuiteOptions& options = {});

enum class RRule { kMax, kAll, kRandom };
RRule parse_r_rule(const std::string& name);

struct ProbeOptions {
  int n_max = 8;
  int seeds = 500;
  std::uint64_t seed = 1;
  RRule rule = RRule::kAll;
  SuiteOptions suite;
};

/// Random graphs with mu >= 2; an excess is NOTABLE, never a failure.
TheoremReport probe_conjecture(const ProbeOptions& options);

/// Random graphs with at least one dominated pair; every ordered dominated
/// pair (v1, v2) is checked.
TheoremReport verify_mu_lemma(int seeds, std::uint64_t seed, int n_max = 10);

// Property harnesses. bound = runs, achieved = runs that held.

/// Random chordal graphs with mu >= 2, r = mu / 2, k = 2.
TheoremReport chordal_suite(int graphs, int n_max, std::uint64_t seed, const SuiteOptions& options = {});
/// compress_pair_chordal on random chordal graphs and random pairs.
TheoremReport compression_harness(int runs, int n_max, std::uint64_t seed);
/// cycle_split and verify_cross_claims on random pairs over C_n.
TheoremReport cycle_claims_harness(int runs, int n_max, std::uint64_t seed);

/// A is a random subfamily of `universe`; B is a random subfamily of the
/// members meeting every member of A.
std::pair<SetFamily, SetFamily> random_cross_intersecting_pair(const SetFamily& universe, Rng& rng);

/// Random graph on n vertices with v2 := 1 dominating v1 := 0.
Graph random_dominated_graph(int n, Rng& rng);

}  // namespace xint
