#include "xint/extremal.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "xint/error.hpp"

namespace xint {

bool label_pair_feasible(std::uint32_t a, std::uint32_t b) {
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      if (i != j && ((a >> i) & 1U) && ((b >> j) & 1U)) return false;
  return true;
}

Labeling::Labeling(int k, std::vector<Label> labels) : k_(k), labels_(std::move(labels)) {
  if (k < 1) throw std::invalid_argument("Labeling: k must be positive");
  for (const Label& l : labels_)
    if (l.kind == LabelKind::kSingle && (l.family < 1 || l.family > k))
      throw std::invalid_argument("Labeling: family index out of range");
}

std::int64_t Labeling::value() const {
  std::int64_t v = 0;
  for (const Label& l : labels_) v += l.weight(k_);
  return v;
}

bool Labeling::feasible(const DisjointnessGraph& meta) const {
  if (labels_.size() != meta.size()) return false;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].kind == LabelKind::kNone) continue;
    bool ok = true;
    meta.adjacency[i].for_each([&](std::size_t j) {
      const Label& a = labels_[i];
      const Label& b = labels_[j];
      if (b.kind == LabelKind::kNone) return;
      // disjoint members may only share one and the same single family
      if (a.kind == LabelKind::kAll || b.kind == LabelKind::kAll || a.family != b.family) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::vector<SetFamily> Labeling::decode(const SetFamily& family) const {
  if (labels_.size() != family.size()) throw std::invalid_argument("Labeling::decode: size mismatch");
  std::vector<SetFamily> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (int f = 1; f <= k_; ++f) {
    std::vector<VertexSet> members;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i].contains(f)) members.push_back(family[i]);
    out.push_back(SetFamily::adopt_canonical(family.host(), family.r(), std::move(members)));
  }
  return out;
}

bool operator<(const Labeling& a, const Labeling& b) {
  if (a.k_ != b.k_) return a.k_ < b.k_;
  return std::lexicographical_compare(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
                                      [&](const Label& x, const Label& y) { return x.rank(a.k_) < y.rank(a.k_); });
}

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::kReduced: return "reduced";
    case Engine::kNaive: return "naive";
    case Engine::kBranchAndBound: return "branch-and-bound";
    case Engine::kExhaustive: return "exhaustive";
  }
  return "unknown";
}

Engine parse_engine(const std::string& name) {
  if (name == "reduced") return Engine::kReduced;
  if (name == "naive") return Engine::kNaive;
  if (name == "branch-and-bound" || name == "bnb") return Engine::kBranchAndBound;
  if (name == "exhaustive") return Engine::kExhaustive;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

namespace {

void charge(std::uint64_t& nodes, const SearchOptions& options) {
  if (++nodes > options.node_budget)
    throw BudgetExceeded("search exceeded node budget of " + std::to_string(options.node_budget));
}

std::vector<std::size_t> to_indices(const Bitset& b) { return b.indices(); }

// ---------------------------------------------------------------------------
// Maximum intersecting subfamily: maximum independent set of the meta-graph.
// Candidates are greedily partitioned into cliques of pairwise disjoint
// members; an independent set takes at most one member per clique.

class IntersectingSearch {
 public:
  IntersectingSearch(const DisjointnessGraph& meta, const SearchOptions& options)
      : meta_(meta), options_(options), m_(meta.size()) {
    meet_.reserve(m_);
    for (std::size_t v = 0; v < m_; ++v) {
      Bitset row = Bitset::full(m_) - meta.adjacency[v];
      row.reset(v);
      meet_.push_back(std::move(row));
    }
  }

  void find_best() {
    collecting_ = false;
    best_ = 0;
    best_set_ = Bitset(m_);
    Bitset cur(m_);
    if (m_ > 0) expand(cur, 0, Bitset::full(m_));
  }

  void collect(std::int64_t target, std::size_t limit) {
    collecting_ = true;
    target_ = target;
    limit_ = limit;
    Bitset cur(m_);
    if (target == 0) {
      found_.push_back({});
      return;
    }
    expand(cur, 0, Bitset::full(m_));
  }

  std::int64_t best() const { return best_; }
  const Bitset& best_set() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<std::size_t>>& found() const { return found_; }
  bool truncated() const { return truncated_; }

 private:
  bool done() const { return collecting_ && found_.size() >= limit_ && truncated_; }

  void record(const Bitset& cur, std::int64_t size) {
    if (!collecting_) {
      if (size > best_) {
        best_ = size;
        best_set_ = cur;
      }
      return;
    }
    if (size != target_) return;
    if (found_.size() >= limit_) {
      truncated_ = true;
      return;
    }
    found_.push_back(to_indices(cur));
  }

  void expand(Bitset& cur, std::int64_t size, Bitset candidates) {
    charge(nodes_, options_);
    std::vector<std::pair<std::size_t, std::int64_t>> order;
    {
      Bitset uncoloured = candidates;
      std::int64_t colour = 0;
      while (uncoloured.any()) {
        ++colour;
        Bitset q = uncoloured;
        while (q.any()) {
          const std::size_t v = q.first();
          q.reset(v);
          uncoloured.reset(v);
          q &= meta_.adjacency[v];
          order.emplace_back(v, colour);
        }
      }
    }
    for (std::size_t t = order.size(); t-- > 0;) {
      if (done()) return;
      const auto [v, colour] = order[t];
      if (collecting_ ? size + colour < target_ : size + colour <= best_) return;
      cur.set(v);
      Bitset next = candidates & meet_[v];
      if (next.none())
        record(cur, size + 1);
      else
        expand(cur, size + 1, std::move(next));
      cur.reset(v);
      candidates.reset(v);
    }
  }

  const DisjointnessGraph& meta_;
  const SearchOptions& options_;
  std::size_t m_;
  std::vector<Bitset> meet_;
  std::uint64_t nodes_ = 0;
  bool collecting_ = false;
  std::int64_t best_ = 0;
  Bitset best_set_;
  std::int64_t target_ = 0;
  std::size_t limit_ = 0;
  bool truncated_ = false;
  std::vector<std::vector<std::size_t>> found_;
};

SearchResult exhaustive_intersecting(const DisjointnessGraph& meta, const SearchOptions& options) {
  const std::size_t m = meta.size();
  if (m > kExhaustiveMaxMembers)
    throw std::invalid_argument("exhaustive engine limited to " + std::to_string(kExhaustiveMaxMembers) + " members");
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i) meta.adjacency[i].for_each([&](std::size_t j) { adj[i] |= 1U << j; });
  SearchResult result;
  result.engine = Engine::kExhaustive;
  std::uint32_t best_mask = 0;
  const std::uint32_t subsets = 1U << m;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    charge(result.nodes, options);
    bool independent = true;
    for (std::uint32_t rest = mask; rest != 0 && independent; rest &= rest - 1)
      independent = (adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask) == 0;
    if (independent && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
  }
  result.value = std::popcount(best_mask);
  for (std::size_t i = 0; i < m; ++i)
    if ((best_mask >> i) & 1U) result.selected.push_back(i);
  return result;
}

// ---------------------------------------------------------------------------
// Reduced cross-sum engine. X is the set of members in every family. For a
// node with chosen X, candidates C (undecided, not disjoint from anything in
// X) and excluded E (decided out, not disjoint from X):
//   final gain = base + (k-1)|Y| - |N(Y) within C u E|,  Y subset of C.
// Partition C u E into cliques Q; Y meets each Q at most once, and a hit Q
// contributes k - |Q| while a missed Q contributes at most 0. Cliques are
// capped at k members since larger ones cannot lower the bound further.

class ReducedSearch {
 public:
  ReducedSearch(const DisjointnessGraph& meta, int k, const SearchOptions& options)
      : meta_(meta), k_(k), options_(options), m_(meta.size()) {}

  // First leaf in include-first order with the optimal gain is the
  // lexicographically least optimal X.
  void find_best() {
    collecting_ = false;
    have_best_ = false;
    Bitset x(m_);
    dfs(x, Bitset::full(m_), Bitset(m_), 0);
  }

  void collect(std::int64_t target, std::size_t limit) {
    collecting_ = true;
    target_ = target;
    limit_ = limit;
    Bitset x(m_);
    dfs(x, Bitset::full(m_), Bitset(m_), 0);
  }

  std::int64_t best_gain() const { return best_gain_; }
  const Bitset& best_x() const { return best_x_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Bitset>& found() const { return found_; }
  bool truncated() const { return truncated_; }

 private:
  bool prune_threshold_met(std::int64_t bound) const {
    if (collecting_) return bound < target_;
    return have_best_ && bound <= best_gain_;
  }

  // Upper bound on the final gain; returns early once the bound is known to
  // clear the pruning threshold.
  std::int64_t bound(const Bitset& candidates, const Bitset& excluded, std::int64_t base) const {
    const std::int64_t threshold = collecting_ ? target_ : (have_best_ ? best_gain_ + 1 : INT64_MIN);
    Bitset pool = candidates | excluded;
    Bitset open = candidates;
    std::int64_t total = base;
    while (open.any()) {
      const std::size_t v = open.first();
      open.reset(v);
      pool.reset(v);
      Bitset grow = pool & meta_.adjacency[v];
      int size = 1;
      while (size < k_ && grow.any()) {
        const std::size_t u = grow.first();
        grow.reset(u);
        grow &= meta_.adjacency[u];
        pool.reset(u);
        open.reset(u);
        ++size;
      }
      total += k_ - size;
      if (total >= threshold) return total;
    }
    return total;
  }

  // Drops independence of Y: max over Y subset of C of (k-1)|Y| - |N(Y)|
  // equals (k-1)|C| minus a maximum matching in which each member of C takes
  // up to k-1 partners from C u E (deficiency form of Hall's theorem).
  std::int64_t deficiency_bound(const Bitset& candidates, const Bitset& excluded, std::int64_t base) {
    const Bitset pool = candidates | excluded;
    matched_to_.assign(m_, npos_);
    std::int64_t matched = 0;
    candidates.for_each([&](std::size_t v) {
      for (int copy = 1; copy < k_; ++copy) {
        Bitset visited(m_);
        if (!augment(v, pool, visited)) break;
        ++matched;
      }
    });
    return base + static_cast<std::int64_t>(candidates.count()) * (k_ - 1) - matched;
  }

  bool augment(std::size_t v, const Bitset& pool, Bitset& visited) {
    Bitset options = (meta_.adjacency[v] & pool) - visited;
    for (std::size_t u = options.first(); u != Bitset::npos; u = options.first()) {
      options.reset(u);
      if (visited.test(u)) continue;
      visited.set(u);
      if (matched_to_[u] == npos_ || augment(matched_to_[u], pool, visited)) {
        matched_to_[u] = v;
        return true;
      }
    }
    return false;
  }

  void leaf(const Bitset& x, std::int64_t gain) {
    if (!collecting_) {
      if (!have_best_ || gain > best_gain_) {
        have_best_ = true;
        best_gain_ = gain;
        best_x_ = x;
      }
      return;
    }
    if (gain != target_) return;
    if (found_.size() >= limit_) {
      truncated_ = true;
      return;
    }
    found_.push_back(x);
  }

  void dfs(Bitset& x, Bitset candidates, Bitset excluded, std::int64_t base) {
    charge(nodes_, options_);
    if (collecting_ && truncated_) return;
    if (candidates.none()) {
      leaf(x, base);
      return;
    }
    if (prune_threshold_met(bound(candidates, excluded, base))) return;
    if (prune_threshold_met(deficiency_bound(candidates, excluded, base))) return;

    const std::size_t v = candidates.first();
    const Bitset& row = meta_.adjacency[v];
    {
      const std::int64_t newly_out =
          static_cast<std::int64_t>(candidates.count_and(row) + excluded.count_and(row));
      x.set(v);
      Bitset c = candidates - row;
      c.reset(v);
      dfs(x, std::move(c), excluded - row, base + (k_ - 1) - newly_out);
      x.reset(v);
    }
    candidates.reset(v);
    excluded.set(v);
    dfs(x, std::move(candidates), std::move(excluded), base);
  }

  const DisjointnessGraph& meta_;
  int k_;
  const SearchOptions& options_;
  std::size_t m_;
  std::uint64_t nodes_ = 0;
  bool collecting_ = false;
  bool have_best_ = false;
  std::int64_t best_gain_ = 0;
  Bitset best_x_;
  std::int64_t target_ = 0;
  std::size_t limit_ = 0;
  bool truncated_ = false;
  std::vector<Bitset> found_;
  static constexpr std::size_t npos_ = Bitset::npos;
  std::vector<std::size_t> matched_to_;
};

Labeling labeling_for(const DisjointnessGraph& meta, int k, const Bitset& x) {
  const std::size_t m = meta.size();
  Bitset out(m);
  x.for_each([&](std::size_t v) { out |= meta.adjacency[v]; });
  std::vector<Label> labels(m, Label::single(1));
  x.for_each([&](std::size_t v) { labels[v] = Label::all(); });
  out.for_each([&](std::size_t v) { labels[v] = Label::none(); });
  return Labeling(k, std::move(labels));
}

// Every optimal labeling with all-families set x: the remaining members
// split into connected components of the meta-graph, one family each.
void expand_labelings(const DisjointnessGraph& meta, int k, const Bitset& x, std::size_t limit,
                      std::vector<Labeling>& out, bool& truncated) {
  const std::size_t m = meta.size();
  Bitset out_set(m);
  x.for_each([&](std::size_t v) { out_set |= meta.adjacency[v]; });
  Bitset rest = Bitset::full(m) - x - out_set;

  std::vector<int> component(m, -1);
  int components = 0;
  rest.for_each([&](std::size_t start) {
    if (component[start] >= 0) return;
    std::vector<std::size_t> stack{start};
    component[start] = components;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      (meta.adjacency[v] & rest).for_each([&](std::size_t u) {
        if (component[u] < 0) {
          component[u] = components;
          stack.push_back(u);
        }
      });
    }
    ++components;
  });

  std::vector<int> assignment(static_cast<std::size_t>(components), 1);
  while (true) {
    if (out.size() >= limit) {
      truncated = true;
      return;
    }
    std::vector<Label> labels(m, Label::none());
    x.for_each([&](std::size_t v) { labels[v] = Label::all(); });
    rest.for_each([&](std::size_t v) { labels[v] = Label::single(assignment[static_cast<std::size_t>(component[v])]); });
    out.emplace_back(k, std::move(labels));
    // odometer, last component fastest
    int pos = components - 1;
    while (pos >= 0 && assignment[static_cast<std::size_t>(pos)] == k) assignment[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) return;
    ++assignment[static_cast<std::size_t>(pos)];
  }
}

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("cross-sum search needs k >= 2");
}

}  // namespace

SearchResult max_intersecting(const DisjointnessGraph& meta, Engine engine, const SearchOptions& options) {
  if (engine == Engine::kExhaustive) return exhaustive_intersecting(meta, options);
  if (engine != Engine::kBranchAndBound)
    throw std::invalid_argument("max_intersecting supports branch-and-bound and exhaustive engines");
  IntersectingSearch search(meta, options);
  search.find_best();
  SearchResult result;
  result.engine = Engine::kBranchAndBound;
  result.value = search.best();
  result.selected = meta.size() ? to_indices(search.best_set()) : std::vector<std::size_t>{};
  result.nodes = search.nodes();
  return result;
}

IntersectingOptima enumerate_max_intersecting(const DisjointnessGraph& meta, std::size_t limit,
                                              const SearchOptions& options) {
  if (limit == 0) throw std::invalid_argument("enumerate_max_intersecting: limit must be positive");
  IntersectingSearch best(meta, options);
  best.find_best();
  IntersectingSearch all(meta, options);
  all.collect(best.best(), limit);
  IntersectingOptima out{best.best(), all.found(), all.truncated()};
  std::sort(out.families.begin(), out.families.end());
  return out;
}

SearchResult max_cross_sum(const DisjointnessGraph& meta, int k, Engine engine, const SearchOptions& options) {
  check_k(k);
  if (engine == Engine::kNaive) return detail::naive_cross_sum(meta, k);
  if (engine != Engine::kReduced) throw std::invalid_argument("max_cross_sum supports reduced and naive engines");
  ReducedSearch search(meta, k, options);
  search.find_best();
  SearchResult result;
  result.engine = Engine::kReduced;
  result.value = static_cast<std::int64_t>(meta.size()) + search.best_gain();
  result.witness = labeling_for(meta, k, search.best_x());
  result.selected = to_indices(search.best_x());
  result.nodes = search.nodes();
  if (result.witness.value() != result.value || !result.witness.feasible(meta))
    throw InvariantViolation("reduced engine produced an inconsistent witness", "{}");
  return result;
}

OptimaList enumerate_optima(const DisjointnessGraph& meta, int k, std::size_t limit, Engine engine,
                            const SearchOptions& options) {
  check_k(k);
  if (limit == 0) throw std::invalid_argument("enumerate_optima: limit must be positive");
  if (engine == Engine::kNaive) return detail::naive_optima(meta, k, limit);
  if (engine != Engine::kReduced) throw std::invalid_argument("enumerate_optima supports reduced and naive engines");
  ReducedSearch best(meta, k, options);
  best.find_best();
  ReducedSearch all(meta, k, options);
  all.collect(best.best_gain(), limit);
  OptimaList out;
  out.engine = Engine::kReduced;
  out.value = static_cast<std::int64_t>(meta.size()) + best.best_gain();
  out.truncated = all.truncated();
  for (const Bitset& x : all.found()) {
    expand_labelings(meta, k, x, limit, out.labelings, out.truncated);
    if (out.labelings.size() >= limit && out.truncated) break;
  }
  std::sort(out.labelings.begin(), out.labelings.end());
  return out;
}

}  // namespace xint
