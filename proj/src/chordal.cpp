#include "xint/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "xint/random.hpp"

namespace xint {

namespace {

bool is_clique_in(const Graph& g, VertexSet s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && (s.without(v)).is_subset_of(g.neighbors(v)); });
  return ok;
}

bool simplicial_within(const Graph& g, VertexSet alive, Vertex v) {
  return is_clique_in(g, g.neighbors(v) & alive);
}

}  // namespace

bool is_simplicial(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("is_simplicial: vertex out of range");
  return is_clique_in(g, g.neighbors(v));
}

std::optional<EliminationOrdering> find_elimination_ordering(const Graph& g) {
  EliminationOrdering result;
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    std::optional<Vertex> next;
    for (VertexSet rest = alive; !rest.empty() && !next; rest = rest.without(rest.min()))
      if (simplicial_within(g, alive, rest.min())) next = rest.min();
    if (!next) return std::nullopt;
    result.order.push_back(*next);
    alive = alive.without(*next);
  }
  return result;
}

bool is_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  VertexSet alive = g.vertices();
  for (Vertex v : order) {
    if (v < 0 || v >= g.order() || !alive.contains(v)) return false;
    if (!simplicial_within(g, alive, v)) return false;
    alive = alive.without(v);
  }
  return true;
}

bool is_chordal(const Graph& g) { return find_elimination_ordering(g).has_value(); }

std::optional<std::vector<Vertex>> find_induced_long_cycle(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw std::invalid_argument("find_induced_long_cycle: graph too large for brute force");
  // smallest cycles first, then by bitmask
  for (int len = 4; len <= n; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const VertexSet s{bits};
      if (s.size() != len) continue;
      bool two_regular = true;
      s.for_each([&](Vertex v) { two_regular = two_regular && (g.neighbors(v) & s).size() == 2; });
      if (!two_regular) continue;
      // walk the cycle; it must close only after visiting all of s
      std::vector<Vertex> walk{s.min()};
      Vertex prev = -1;
      Vertex cur = s.min();
      while (true) {
        const VertexSet next = (g.neighbors(cur) & s) - (prev >= 0 ? VertexSet::single(prev) : VertexSet{});
        const Vertex nxt = prev >= 0 ? next.min() : (g.neighbors(cur) & s).min();
        if (nxt == walk.front()) break;
        walk.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (static_cast<int>(walk.size()) == len) return walk;
    }
  }
  return std::nullopt;
}

Graph random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_chordal: n out of range");
  if (density < 0.0 || density > 1.0) throw std::invalid_argument("random_chordal: density outside [0, 1]");
  Rng rng(seed);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (Vertex v = 1; v < n; ++v) {
    std::vector<Vertex> earlier(static_cast<std::size_t>(v));
    std::iota(earlier.begin(), earlier.end(), 0);
    for (std::size_t i = earlier.size(); i > 1; --i) std::swap(earlier[i - 1], earlier[rng.below(i)]);
    VertexSet clique;
    for (Vertex u : earlier)
      if (clique.is_subset_of(rows[static_cast<std::size_t>(u)]) && rng.chance(density)) clique = clique.with(u);
    rows[static_cast<std::size_t>(v)] = clique;
    clique.for_each([&](Vertex u) { rows[static_cast<std::size_t>(u)] = rows[static_cast<std::size_t>(u)].with(v); });
  }
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = label.size(); i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  std::vector<VertexSet> shuffled(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row;
    rows[static_cast<std::size_t>(v)].for_each([&](Vertex u) { row = row.with(label[static_cast<std::size_t>(u)]); });
    shuffled[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_adjacency(std::move(shuffled));
}

}  // namespace xint
