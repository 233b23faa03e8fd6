#pragma once

// Brute-force references built from the definitions alone. They only read a
// graph through its edge list and never call library search code.

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "xint/graph.hpp"

namespace oracle {

struct Adjacency {
  int n = 0;
  std::vector<std::vector<bool>> a;
};

inline Adjacency adjacency(const xint::Graph& g) {
  Adjacency out{g.order(), std::vector<std::vector<bool>>(g.order(), std::vector<bool>(g.order(), false))};
  for (auto [u, v] : g.edges()) out.a[u][v] = out.a[v][u] = true;
  return out;
}

inline bool independent(const Adjacency& g, std::uint64_t mask) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((mask >> u & 1) && (mask >> v & 1) && g.a[u][v]) return false;
  return true;
}

/// Independent r-sets in ascending bitmask order.
inline std::vector<std::uint64_t> independent_sets(const xint::Graph& graph, int r) {
  const Adjacency g = adjacency(graph);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m)
    if (std::popcount(m) == r && independent(g, m)) out.push_back(m);
  return out;
}

inline int mu(const xint::Graph& graph) {
  const Adjacency g = adjacency(graph);
  int best = g.n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    if (!independent(g, m)) continue;
    bool maximal = true;
    for (int v = 0; v < g.n && maximal; ++v)
      if (!(m >> v & 1) && independent(g, m | std::uint64_t{1} << v)) maximal = false;
    if (maximal && std::popcount(m) < best) best = std::popcount(m);
  }
  return best;
}

/// Some vertex subset of size >= 4 induces a connected 2-regular graph.
inline bool has_induced_long_cycle(const xint::Graph& graph) {
  const Adjacency g = adjacency(graph);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.n); ++m) {
    if (std::popcount(m) < 4) continue;
    bool regular = true;
    int first = -1;
    for (int v = 0; v < g.n && regular; ++v) {
      if (!(m >> v & 1)) continue;
      if (first < 0) first = v;
      int d = 0;
      for (int u = 0; u < g.n; ++u)
        if ((m >> u & 1) && g.a[v][u]) ++d;
      regular = d == 2;
    }
    if (!regular) continue;
    std::uint64_t seen = std::uint64_t{1} << first;
    std::vector<int> stack{first};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < g.n; ++u)
        if ((m >> u & 1) && g.a[v][u] && !(seen >> u & 1)) {
          seen |= std::uint64_t{1} << u;
          stack.push_back(u);
        }
    }
    if (seen == m) return true;
  }
  return false;
}

struct CrossOptimum {
  std::int64_t value = 0;
  std::uint64_t count = 0;  // k-tuples of families attaining value
};

/// Every assignment of a subset of the k families to every member, pruned only
/// by the cross-intersection condition itself.
inline CrossOptimum max_cross_sum(const std::vector<std::uint64_t>& members, int k) {
  const std::size_t m = members.size();
  std::vector<unsigned> label(m, 0);
  CrossOptimum best{-1, 0};
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t value) {
    if (i == m) {
      if (value > best.value)
        best = {value, 1};
      else if (value == best.value)
        ++best.count;
      return;
    }
    for (unsigned l = 0; l < (1u << k); ++l) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (members[i] & members[j]) continue;
        // disjoint members may not sit in two different families
        for (int a = 0; a < k && ok; ++a)
          for (int b = 0; b < k && ok; ++b)
            if (a != b && (l >> a & 1) && (label[j] >> b & 1)) ok = false;
      }
      if (!ok) continue;
      label[i] = l;
      go(i + 1, value + std::popcount(l));
    }
    label[i] = 0;
  };
  go(0, 0);
  return best;
}

struct IntersectingOptimum {
  int value = 0;
  std::vector<std::uint64_t> optima;  // subsets of member indices
};

inline IntersectingOptimum max_intersecting(const std::vector<std::uint64_t>& members) {
  const std::size_t m = members.size();
  IntersectingOptimum best;
  best.optima.push_back(0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = i + 1; j < m && ok; ++j)
        if ((s >> i & 1) && (s >> j & 1) && !(members[i] & members[j])) ok = false;
    if (!ok) continue;
    const int size = std::popcount(s);
    if (size > best.value) {
      best.value = size;
      best.optima.clear();
    }
    if (size == best.value) best.optima.push_back(s);
  }
  return best;
}

}  // namespace oracle
