#include <gtest/gtest.h>

#include <stdexcept>

#include "xint/chordal.hpp"
#include "xint/compression.hpp"
#include "xint/error.hpp"
#include "xint/theorems.hpp"

using namespace xint;

namespace {

// 1-based helpers to keep fixtures readable.
VertexSet s1(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s = s.with(v - 1);
  return s;
}

SetFamily fam(const Graph& g, int r, std::initializer_list<std::initializer_list<Vertex>> members) {
  std::vector<VertexSet> out;
  for (auto m : members) out.push_back(s1(m));
  return SetFamily::from_members(g, r, out);
}

}  // namespace

TEST(Shift, OtherwiseBranchKeepsMember) {
  const Graph g = Graph::path(3);
  // {2} would move to {1}, which is already present.
  const SetFamily f = fam(g, 1, {{1}, {2}});
  EXPECT_EQ(shift_family(f, 1, 0), f);
  const SetFamily moved = shift_family(fam(g, 1, {{2}, {3}}), 1, 0);
  EXPECT_EQ(moved, fam(g, 1, {{1}, {3}}));
}

TEST(Shift, UsesPreShiftSnapshot) {
  const Graph g = Graph::empty(4);
  // Both {2,3} and {2,4} move; neither blocks the other.
  const SetFamily f = fam(g, 2, {{2, 3}, {2, 4}, {1, 3}});
  EXPECT_EQ(shift_family(f, 1, 0), fam(g, 2, {{1, 3}, {2, 3}, {1, 4}}));
}

TEST(CompressPair, PathExample) {
  const Graph g = Graph::path(3);
  const SetFamily a = fam(g, 1, {{2}});
  const CompressedPair c = compress_pair_chordal(g, a, a, 0, 1);
  EXPECT_EQ(c.a_shifted, fam(g, 1, {{1}}));
  EXPECT_EQ(c.b_shifted, fam(g, 1, {{1}}));
  EXPECT_EQ(c.a_avoiding.size(), 1u);
  EXPECT_EQ(c.a_avoiding[0], VertexSet::of({0}));
  EXPECT_TRUE(c.a_through.empty());
  EXPECT_EQ(c.minus.graph.order(), 2);
}

TEST(CompressPair, Preconditions) {
  const Graph g = Graph::path(4);
  const SetFamily a = fam(g, 1, {{1}});
  EXPECT_THROW(compress_pair_chordal(g, a, a, 1, 2), std::invalid_argument);  // N[2] not inside N[3]
  const SetFamily b = fam(g, 1, {{4}});
  EXPECT_THROW(compress_pair_chordal(g, a, b, 0, 1), std::invalid_argument);  // not cross-intersecting
}

TEST(CompressPair, RandomRunsHoldAndAreIdempotent) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed);
    const Graph g = random_chordal(rng.between(2, 8), rng.uniform(), rng.next());
    const auto ordering = find_elimination_ordering(g);
    ASSERT_TRUE(ordering);
    Vertex v1 = -1;
    for (Vertex v : ordering->order)
      if (g.degree(v) > 0 && is_simplicial(g, v)) {
        v1 = v;
        break;
      }
    if (v1 < 0) continue;
    const int r = rng.between(1, 2);
    const SetFamily universe = enumerate_independent(g, r);
    if (universe.empty()) continue;
    const auto [a, b] = random_cross_intersecting_pair(universe, rng);
    g.neighbors(v1).for_each([&](Vertex vi) {
      const CompressedPair c = compress_pair_chordal(g, a, b, v1, vi);
      EXPECT_EQ(c.a_shifted.size(), a.size());
      EXPECT_EQ(c.a_shifted.size(), c.a_avoiding.size() + c.a_through.size());
      EXPECT_EQ(c.b_shifted.size(), c.b_avoiding.size() + c.b_through.size());
      EXPECT_TRUE(is_cross_intersecting(c.a_avoiding, c.b_avoiding));
      EXPECT_TRUE(is_cross_intersecting(c.a_through, c.b_through));
      EXPECT_EQ(shift_family(c.a_shifted, vi, v1), c.a_shifted);
      EXPECT_EQ(shift_family(c.b_shifted, vi, v1), c.b_shifted);
      for (VertexSet s : c.a_shifted) EXPECT_TRUE(g.is_independent(s));
    });
  }
}

TEST(Lift, Examples) {
  const Graph m2 = Graph::matching(2);
  const SetFamily a = fam(m2, 1, {{1}});
  const std::vector<SetFamily> pair{a, a};
  const LiftedFamily l = lift_to_auxiliary(m2, pair);
  EXPECT_EQ(l.graph.order(), 6);
  EXPECT_EQ(l.apex, (std::vector<Vertex>{4, 5}));
  EXPECT_TRUE(l.graph.adjacent(4, 5));
  EXPECT_EQ(l.family.size(), 2u);
  EXPECT_EQ(l.family.r(), 2);
  EXPECT_TRUE(is_intersecting(l.family));

  const std::vector<SetFamily> empties{SetFamily(m2, 1), SetFamily(m2, 1), SetFamily(m2, 1)};
  EXPECT_TRUE(lift_to_auxiliary(m2, empties).family.empty());

  const std::vector<int> sizes{2, 2};
  const Graph u = Graph::clique_union(sizes);
  const std::vector<SetFamily> lopsided{fam(u, 1, {{1}, {3}}), SetFamily(u, 1)};
  const LiftedFamily lu = lift_to_auxiliary(u, lopsided);
  EXPECT_EQ(lu.family.size(), 2u);
  EXPECT_TRUE(is_intersecting(lu.family));

  const std::vector<SetFamily> bad{fam(m2, 1, {{1}}), fam(m2, 1, {{3}})};
  EXPECT_THROW(lift_to_auxiliary(m2, bad), std::invalid_argument);
}

TEST(CycleSplit, DefinitionExample) {
  const Graph c5 = Graph::cycle(5);
  const CycleSplit s = cycle_split(fam(c5, 2, {{3, 5}, {1, 3}}));
  ASSERT_EQ(s.through_high.size(), 1u);
  EXPECT_EQ(s.through_high[0], VertexSet::of({2}));
  EXPECT_TRUE(s.through_wrap.empty());
  EXPECT_EQ(s.remainder, fam(c5, 2, {{1, 3}}));
  ASSERT_EQ(s.kept.size(), 1u);
  EXPECT_EQ(s.kept[0], VertexSet::of({0, 2}));
  EXPECT_TRUE(s.shifted_tail.empty());
  EXPECT_EQ(s.reduced.size(), 1u);
  EXPECT_EQ(s.kept.host(), Graph::cycle(4));
  EXPECT_EQ(s.reduced.host(), Graph::cycle(3));
}

TEST(CycleSplit, FullFamilySizes) {
  const CycleSplit s = cycle_split(enumerate_independent(Graph::cycle(5), 2));
  EXPECT_EQ(s.kept.size() + s.reduced.size(), 5u);
  EXPECT_EQ(s.kept.size(), count_independent(Graph::cycle(4), 2));
  EXPECT_EQ(s.reduced.size(), count_independent(Graph::cycle(3), 1));
  for (int n = 4; n <= 11; ++n)
    for (int r = 1; 2 * r <= n; ++r) {
      const CycleSplit t = cycle_split(enumerate_independent(Graph::cycle(n), r));
      EXPECT_EQ(t.kept.size(), count_independent(Graph::cycle(n - 1), r)) << n << ' ' << r;
      EXPECT_EQ(t.reduced.size(), count_independent(Graph::cycle(n - 2), r - 1)) << n << ' ' << r;
    }
}

TEST(CycleSplit, EmptyAndErrors) {
  const CycleSplit s = cycle_split(SetFamily(Graph::cycle(6), 2));
  EXPECT_TRUE(s.kept.empty());
  EXPECT_TRUE(s.reduced.empty());
  EXPECT_TRUE(s.remainder.empty());
  EXPECT_THROW(cycle_split(SetFamily(Graph::cycle(3), 1)), std::invalid_argument);
  EXPECT_THROW(cycle_split(SetFamily(Graph::path(5), 2)), std::invalid_argument);
}

TEST(CrossClaims, Examples) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_TRUE(verify_cross_claims(cycle_split(enumerate_independent(c5, 2)), cycle_split(SetFamily(c5, 2))));
  const SetFamily st = star(c5, 2, 0);
  EXPECT_TRUE(verify_cross_claims(cycle_split(st), cycle_split(st)));
}

TEST(CrossClaims, ReportsCounterexampleOnInvalidInput) {
  // Not a cross-intersecting pair, so the claims can fail; the check must say so.
  const Graph c6 = Graph::cycle(6);
  const SetFamily a = fam(c6, 2, {{1, 3}});
  const SetFamily b = fam(c6, 2, {{2, 4}});
  const ClaimCheck c = verify_cross_claims(cycle_split(a), cycle_split(b));
  EXPECT_FALSE(c);
  EXPECT_TRUE(c.counterexample.has_value());
}

TEST(CrossClaims, RandomPairs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int n = rng.between(4, 9);
    const SetFamily universe = enumerate_independent(Graph::cycle(n), rng.between(1, n / 2));
    const auto [a, b] = random_cross_intersecting_pair(universe, rng);
    EXPECT_TRUE(verify_cross_claims(cycle_split(a), cycle_split(b))) << seed;
  }
}
