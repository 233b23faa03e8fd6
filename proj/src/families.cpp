#include "xint/families.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace xint {

SetFamily::SetFamily(Graph host, int r) : host_(std::move(host)), r_(r) {
  if (r < 0) throw std::invalid_argument("SetFamily: negative r");
}

SetFamily::SetFamily(Graph host, int r, std::vector<VertexSet> members)
    : host_(std::move(host)), r_(r), members_(std::move(members)) {}

SetFamily SetFamily::from_members(Graph host, int r, std::vector<VertexSet> members) {
  if (r < 0) throw std::invalid_argument("SetFamily: negative r");
  const VertexSet range = host.vertices();
  for (VertexSet s : members) {
    if (!s.is_subset_of(range)) throw std::invalid_argument("SetFamily: member outside host vertex range");
    if (s.size() != r) throw std::invalid_argument("SetFamily: member size differs from r");
    if (!host.is_independent(s)) throw std::invalid_argument("SetFamily: member is not independent");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily(std::move(host), r, std::move(members));
}

SetFamily SetFamily::adopt_canonical(Graph host, int r, std::vector<VertexSet> members) {
  return SetFamily(std::move(host), r, std::move(members));
}

bool SetFamily::contains(VertexSet s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::optional<std::size_t> SetFamily::index_of(VertexSet s) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

namespace {

// Emits, in ascending bitmask order, every independent set formed by `chosen`
// plus `need` vertices of `candidates`, where each added vertex lies below
// the previously added one. Ascending order falls out of picking the next
// highest element in increasing order.
template <class Sink>
void extend_below(const Graph& g, VertexSet chosen, VertexSet candidates, int need, Sink&& sink) {
  if (need == 0) {
    sink(chosen);
    return;
  }
  if (candidates.size() < need) return;
  candidates.for_each([&](Vertex e) {
    const VertexSet below = (candidates & VertexSet::range(e)) - g.neighbors(e);
    if (below.size() >= need - 1) extend_below(g, chosen.with(e), below, need - 1, sink);
  });
}

void check_r(const Graph&, int r) {
  if (r < 0) throw std::invalid_argument("negative r");
}

}  // namespace

SetFamily enumerate_independent(const Graph& g, int r) {
  check_r(g, r);
  const int n = g.order();
  if (r == 0) return SetFamily::adopt_canonical(g, 0, {VertexSet{}});
  if (r > n) return SetFamily(g, r);

  std::vector<std::vector<VertexSet>> chunks(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int top = 0; top < n; ++top) {
    auto& out = chunks[static_cast<std::size_t>(top)];
    const VertexSet below = VertexSet::range(top) - g.neighbors(top);
    extend_below(g, VertexSet::single(top), below, r - 1, [&](VertexSet s) { out.push_back(s); });
  }

  std::size_t total = 0;
  for (const auto& c : chunks) total += c.size();
  std::vector<VertexSet> members;
  members.reserve(total);
  for (const auto& c : chunks) members.insert(members.end(), c.begin(), c.end());
  return SetFamily::adopt_canonical(g, r, std::move(members));
}

std::uint64_t count_independent(const Graph& g, int r) {
  check_r(g, r);
  if (r == 0) return 1;
  std::uint64_t count = 0;
  extend_below(g, VertexSet{}, g.vertices(), r, [&](VertexSet) { ++count; });
  return count;
}

SetFamily star(const Graph& g, int r, Vertex x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("star: vertex out of range");
  if (r < 1) throw std::invalid_argument("star: r must be at least 1");
  const SetFamily all = enumerate_independent(g, r);
  std::vector<VertexSet> members;
  for (VertexSet s : all)
    if (s.contains(x)) members.push_back(s);
  return SetFamily::adopt_canonical(g, r, std::move(members));
}

namespace reference {

SetFamily enumerate_independent(const Graph& g, int r) {
  check_r(g, r);
  const int n = g.order();
  if (r > n) return SetFamily(g, r);
  if (r == 0) return SetFamily::adopt_canonical(g, 0, {VertexSet{}});
  std::vector<VertexSet> members;
  // Gosper's hack: next r-subset in increasing numeric order.
  std::uint64_t s = (r == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit_bit = n == 64 ? 0 : std::uint64_t{1} << n;
  while (true) {
    if (g.is_independent(VertexSet{s})) members.push_back(VertexSet{s});
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t ripple = s + c;
    if (ripple == 0) break;
    s = (((ripple ^ s) >> 2) / c) | ripple;
    if (limit_bit != 0 && s >= limit_bit) break;
  }
  return SetFamily::adopt_canonical(g, r, std::move(members));
}

}  // namespace reference

bool is_maximal_independent(const Graph& g, VertexSet s) {
  if (!g.is_independent(s)) return false;
  VertexSet dominated = s;
  s.for_each([&](Vertex v) { dominated = dominated | g.neighbors(v); });
  return dominated == g.vertices();
}

namespace {

struct MuSearch {
  const Graph& g;
  VertexSet all;
  int best;

  // A maximal independent set is an independent dominating set, so the
  // lowest undominated vertex forces one of its closed neighbours in.
  void run(VertexSet dominated, int size) {
    if (dominated == all) {
      best = std::min(best, size);
      return;
    }
    if (size + 1 >= best) return;
    const Vertex u = (all - dominated).min();
    (g.closed_neighborhood(u) - dominated).for_each([&](Vertex w) {
      run(dominated | g.closed_neighborhood(w), size + 1);
    });
  }
};

// Finds the lexicographically least sorted vertex list of size `target`
// that is maximal independent, adding vertices in increasing order.
struct LexLeastSearch {
  const Graph& g;
  VertexSet all;
  int target;
  std::optional<VertexSet> found;

  bool run(VertexSet chosen, VertexSet dominated, Vertex last, int size) {
    if (dominated == all) {
      if (size == target) {
        found = chosen;
        return true;
      }
      return false;
    }
    if (size == target) return false;
    const VertexSet later = all - VertexSet::range(last + 1);
    // every undominated vertex needs an available closed neighbour later on
    bool coverable = true;
    (all - dominated).for_each([&](Vertex u) {
      coverable = coverable && !((g.closed_neighborhood(u) - dominated) & later).empty();
    });
    if (!coverable) return false;
    const VertexSet options = later - dominated;
    for (VertexSet rest = options; !rest.empty(); rest = rest.without(rest.min())) {
      const Vertex v = rest.min();
      if (run(chosen.with(v), dominated | g.closed_neighborhood(v), v, size + 1)) return true;
    }
    return false;
  }
};

}  // namespace

MuResult mu(const Graph& g) {
  if (g.order() == 0) return {0, VertexSet{}};
  MuSearch search{g, g.vertices(), g.order() + 1};
  search.run(VertexSet{}, 0);
  LexLeastSearch lex{g, g.vertices(), search.best, std::nullopt};
  lex.run(VertexSet{}, VertexSet{}, -1, 0);
  if (!lex.found) throw std::logic_error("mu: no witness of the minimum size");
  return {search.best, *lex.found};
}

bool is_intersecting(const SetFamily& family) {
  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!members[i].intersects(members[j])) return false;
  return true;
}

std::optional<CrossViolation> find_cross_violation(std::span<const SetFamily> families) {
  for (std::size_t i = 1; i < families.size(); ++i) {
    if (families[i].r() != families[0].r()) throw std::invalid_argument("cross-intersection: families differ in r");
    if (families[i].host() != families[0].host())
      throw std::invalid_argument("cross-intersection: families have different hosts");
  }
  for (std::size_t i = 0; i < families.size(); ++i)
    for (std::size_t j = i + 1; j < families.size(); ++j)
      for (VertexSet a : families[i])
        for (VertexSet b : families[j])
          if (!a.intersects(b)) return CrossViolation{i, a, j, b};
  return std::nullopt;
}

bool is_cross_intersecting(std::span<const SetFamily> families) { return !find_cross_violation(families); }

bool is_cross_intersecting(const SetFamily& a, const SetFamily& b) {
  if (a.r() != b.r()) throw std::invalid_argument("cross-intersection: families differ in r");
  if (a.host() != b.host()) throw std::invalid_argument("cross-intersection: families have different hosts");
  for (VertexSet x : a)
    for (VertexSet y : b)
      if (!x.intersects(y)) return false;
  return true;
}

}  // namespace xint
