#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "xint/families.hpp"
#include "xint/random.hpp"

using namespace xint;

namespace {

std::vector<std::uint64_t> bits(const SetFamily& f) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : f) out.push_back(s.bits());
  return out;
}

VertexSet one_based(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s = s.with(v - 1);
  return s;
}

}  // namespace

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(enumerate_independent(Graph::empty(4), 2).size(), 6u);
  EXPECT_EQ(enumerate_independent(Graph::matching(3), 3).size(), 8u);
  const SetFamily c5 = enumerate_independent(Graph::cycle(5), 2);
  const std::vector<VertexSet> expected = {one_based({1, 3}), one_based({1, 4}), one_based({2, 4}), one_based({2, 5}),
                                           one_based({3, 5})};
  std::vector<VertexSet> got(c5.begin(), c5.end());
  std::sort(got.begin(), got.end(), [](VertexSet a, VertexSet b) { return a.elements() < b.elements(); });
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, EdgeCases) {
  const SetFamily zero = enumerate_independent(Graph::cycle(5), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());
  EXPECT_TRUE(enumerate_independent(Graph::empty(3), 4).empty());
  EXPECT_TRUE(enumerate_independent(Graph::clique(3), 2).empty());
  EXPECT_EQ(enumerate_independent(Graph::empty(0), 0).size(), 1u);
}

TEST(Enumerate, MatchesOracleAndReference) {
  Rng rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(rng.between(1, 11), rng.uniform(), rng);
    for (int r = 0; r <= g.order(); ++r) {
      const SetFamily parallel = enumerate_independent(g, r);
      EXPECT_EQ(bits(parallel), oracle::independent_sets(g, r));
      EXPECT_EQ(parallel, reference::enumerate_independent(g, r));
      EXPECT_EQ(count_independent(g, r), parallel.size());
    }
  }
}

TEST(Enumerate, CanonicalOrder) {
  const SetFamily f = enumerate_independent(Graph::path(9), 3);
  for (std::size_t i = 1; i < f.size(); ++i) EXPECT_LT(f[i - 1], f[i]);
}

TEST(Family, Validation) {
  const Graph g = Graph::path(3);
  EXPECT_THROW(SetFamily::from_members(g, 2, {VertexSet::of({0, 1})}), std::invalid_argument);
  EXPECT_THROW(SetFamily::from_members(g, 2, {VertexSet::of({0})}), std::invalid_argument);
  EXPECT_THROW(SetFamily::from_members(g, 1, {VertexSet::of({5})}), std::invalid_argument);
  const SetFamily f = SetFamily::from_members(g, 1, {VertexSet::of({2}), VertexSet::of({0}), VertexSet::of({2})});
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], VertexSet::of({0}));
  EXPECT_TRUE(f.contains(VertexSet::of({2})));
  EXPECT_EQ(f.index_of(VertexSet::of({2})), 1u);
  EXPECT_FALSE(f.index_of(VertexSet::of({1})).has_value());
}

TEST(Star, SpecExamples) {
  for (Vertex x = 0; x < 4; ++x) EXPECT_EQ(star(Graph::empty(4), 2, x).size(), 3u);
  for (Vertex x = 0; x < 6; ++x) EXPECT_EQ(star(Graph::matching(3), 2, x).size(), 4u);
  for (Vertex x = 0; x < 3; ++x) EXPECT_EQ(star(Graph::clique(3), 2, x).size(), 0u);
  EXPECT_THROW(star(Graph::empty(4), 2, 4), std::out_of_range);
}

TEST(Star, DoubleCounting) {
  Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(rng.between(1, 9), rng.uniform(), rng);
    for (int r = 1; r <= g.order(); ++r) {
      std::uint64_t total = 0;
      for (Vertex x = 0; x < g.order(); ++x) {
        const SetFamily s = star(g, r, x);
        total += s.size();
        for (VertexSet m : s) EXPECT_TRUE(m.contains(x));
      }
      EXPECT_EQ(total, static_cast<std::uint64_t>(r) * count_independent(g, r));
    }
  }
}

TEST(Mu, SpecExamples) {
  EXPECT_EQ(mu(Graph::clique(5)).mu, 1);
  EXPECT_EQ(mu(Graph::cycle(6)).mu, 2);
  EXPECT_EQ(mu(Graph::matching(3)).mu, 3);
  EXPECT_EQ(mu(Graph::path(3)).mu, 1);
  EXPECT_EQ(mu(Graph::path(3)).witness, VertexSet::of({1}));
  EXPECT_EQ(mu(Graph::empty(0)).mu, 0);
}

TEST(Mu, MatchesOracleWithLexLeastWitness) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng.between(1, 11), rng.uniform(), rng);
    const MuResult m = mu(g);
    EXPECT_EQ(m.mu, oracle::mu(g));
    EXPECT_EQ(m.witness.size(), m.mu);
    EXPECT_TRUE(is_maximal_independent(g, m.witness));
    // No lexicographically smaller minimum maximal independent set.
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.order()); ++b) {
      const VertexSet s{b};
      if (s.size() == m.mu && is_maximal_independent(g, s)) {
        EXPECT_FALSE(s.elements() < m.witness.elements());
      }
    }
  }
}

TEST(Intersecting, Examples) {
  const Graph g = Graph::empty(4);
  EXPECT_TRUE(is_intersecting(star(g, 2, 0)));
  EXPECT_FALSE(is_intersecting(SetFamily::from_members(g, 2, {VertexSet::of({0, 1}), VertexSet::of({2, 3})})));
  EXPECT_TRUE(is_intersecting(SetFamily(g, 2)));
}

TEST(CrossIntersecting, Examples) {
  const Graph g = Graph::empty(4);
  const SetFamily all = enumerate_independent(g, 2);
  const std::vector<SetFamily> full_empty{all, SetFamily(g, 2)};
  EXPECT_TRUE(is_cross_intersecting(full_empty));
  const std::vector<SetFamily> stars{star(g, 2, 1), star(g, 2, 1), star(g, 2, 1)};
  EXPECT_TRUE(is_cross_intersecting(stars));
  const SetFamily a = SetFamily::from_members(g, 2, {VertexSet::of({0, 1})});
  const SetFamily b = SetFamily::from_members(g, 2, {VertexSet::of({2, 3})});
  EXPECT_FALSE(is_cross_intersecting(a, b));
  const std::vector<SetFamily> ab{a, b};
  const auto violation = find_cross_violation(ab);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->member_a, VertexSet::of({0, 1}));
  // A family need not be intersecting on its own.
  const SetFamily split = SetFamily::from_members(g, 2, {VertexSet::of({0, 1}), VertexSet::of({2, 3})});
  EXPECT_TRUE(is_cross_intersecting(split, SetFamily(g, 2)));
}

TEST(CrossIntersecting, MismatchThrows) {
  const SetFamily a(Graph::empty(4), 2);
  const SetFamily b(Graph::empty(5), 2);
  const SetFamily c(Graph::empty(4), 1);
  EXPECT_THROW(is_cross_intersecting(a, b), std::invalid_argument);
  EXPECT_THROW(is_cross_intersecting(a, c), std::invalid_argument);
}

TEST(Counts, SpecExamples) {
  EXPECT_EQ(closed_count({CountKind::kMatching, 3, 2, {}}), 12u);
  EXPECT_EQ(cycle_count(5, 2), 5u);
  const std::vector<int> sizes{2, 3};
  EXPECT_EQ(clique_union_count(sizes, 2), 6u);
  EXPECT_EQ(closed_count({CountKind::kCliqueUnion, 0, 2, sizes}), 6u);
  EXPECT_EQ(closed_count({CountKind::kEmpty, 6, 2, {}}), 15u);
  EXPECT_EQ(closed_count({CountKind::kEmptyStar, 6, 2, {}}), 5u);
  EXPECT_EQ(closed_count({CountKind::kMatchingStar, 3, 2, {}}), 4u);
  EXPECT_EQ(parse_count_kind("cycle"), CountKind::kCycle);
  EXPECT_THROW(parse_count_kind("wheel"), std::invalid_argument);
}

TEST(Counts, MatchEnumeration) {
  for (int n = 1; n <= 10; ++n)
    for (int r = 0; r <= n + 1; ++r) {
      EXPECT_EQ(closed_count({CountKind::kEmpty, n, r, {}}), count_independent(Graph::empty(n), r));
      if (2 * n <= 10) EXPECT_EQ(closed_count({CountKind::kMatching, n, r, {}}), count_independent(Graph::matching(n), r));
      if (n >= 2) EXPECT_EQ(cycle_count(n, r), count_independent(Graph::cycle(n), r)) << n << ' ' << r;
      if (r >= 1) {
        EXPECT_EQ(closed_count({CountKind::kEmptyStar, n, r, {}}), star(Graph::empty(n), r, 0).size());
        if (2 * n <= 10)
          EXPECT_EQ(closed_count({CountKind::kMatchingStar, n, r, {}}), star(Graph::matching(n), r, 0).size());
      }
    }
  const std::vector<std::vector<int>> unions = {{2}, {2, 3}, {2, 2, 2}, {3, 3, 4}, {2, 3, 4}, {4, 4}, {1, 5}};
  for (const auto& sizes : unions)
    for (int r = 0; r <= 4; ++r) EXPECT_EQ(clique_union_count(sizes, r), count_independent(Graph::clique_union(sizes), r));
}

TEST(Counts, Overflow) {
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
  EXPECT_THROW(binomial(70, 35), std::overflow_error);
  EXPECT_THROW(checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 40), std::overflow_error);
  EXPECT_THROW(checked_add(~std::uint64_t{0}, 1), std::overflow_error);
  EXPECT_EQ(binomial(5, 7), 0u);
}

TEST(Counts, PartitionIdentity) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 9; ++n) {
    graphs.push_back(Graph::empty(n));
    graphs.push_back(Graph::path(n));
    graphs.push_back(Graph::clique(n));
    if (n >= 2) graphs.push_back(Graph::cycle(n));
  }
  for (int e = 1; e <= 4; ++e) graphs.push_back(Graph::matching(e));
  Rng rng(9);
  for (int i = 0; i < 40; ++i) graphs.push_back(random_graph(rng.between(1, 9), rng.uniform(), rng));
  for (const Graph& g : graphs)
    for (int r = 1; r <= g.order(); ++r)
      for (Vertex v = 0; v < g.order(); ++v)
        EXPECT_EQ(count_independent(g, r),
                  count_independent(delete_vertex(g, v).graph, r) + count_independent(delete_closed_neighborhood(g, v).graph, r - 1));
}
