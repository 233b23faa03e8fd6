#include <gtest/gtest.h>

#include <stdexcept>

#include "xint/graph.hpp"
#include "xint/random.hpp"

using namespace xint;

namespace {

bool two_regular(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::vector<Graph> fixtures(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(Graph::empty(n));
    out.push_back(Graph::path(n));
    out.push_back(Graph::clique(n));
    if (n >= 2) out.push_back(Graph::cycle(n));
    if (2 * n <= n_max) out.push_back(Graph::matching(n));
  }
  const std::vector<std::vector<int>> unions = {{2, 3}, {2, 2, 2}, {3, 3}, {2, 3, 4}, {4, 4}};
  for (const auto& sizes : unions) out.push_back(Graph::clique_union(sizes));
  return out;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  const VertexSet s = VertexSet::of({0, 3, 5});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.min(), 0);
  EXPECT_EQ(s.max(), 5);
  EXPECT_EQ(s.without(3).with(4), VertexSet::of({0, 4, 5}));
  EXPECT_EQ((s - VertexSet::of({0, 5})), VertexSet::single(3));
  EXPECT_EQ(s.elements(), (std::vector<Vertex>{0, 3, 5}));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_LT(VertexSet::of({0, 1}), VertexSet::of({2}));
}

TEST(Build, SpecExamples) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_EQ(c5.order(), 5);
  EXPECT_EQ(c5.edge_count(), 5u);
  EXPECT_TRUE(two_regular(c5));

  const Graph m3 = Graph::matching(3);
  EXPECT_EQ(m3.order(), 6);
  EXPECT_EQ(m3.edge_count(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(m3.adjacent(2 * i, 2 * i + 1));
    EXPECT_EQ(m3.degree(2 * i), 1);
  }

  const std::vector<int> sizes{2, 3};
  const Graph u = Graph::clique_union(sizes);
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.edge_count(), 4u);
}

TEST(Build, CycleTwoIsAnEdge) {
  const Graph c2 = Graph::cycle(2);
  EXPECT_EQ(c2.order(), 2);
  EXPECT_EQ(c2.edge_count(), 1u);
  EXPECT_EQ(Graph::cycle(3), Graph::clique(3));
}

TEST(Build, Errors) {
  EXPECT_THROW(Graph::cycle(1), std::invalid_argument);
  const std::vector<std::pair<Vertex, Vertex>> out_of_range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), std::out_of_range);
  const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(Graph::from_edges(2, dup).edge_count(), 1u);
  EXPECT_THROW(Graph::from_adjacency({VertexSet::single(1), VertexSet{}}), std::invalid_argument);
}

TEST(Build, Invariants) {
  for (const Graph& g : fixtures(10))
    for (Vertex v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.neighbors(v).contains(v));
      EXPECT_TRUE(g.neighbors(v).is_subset_of(g.vertices()));
      g.neighbors(v).for_each([&](Vertex u) { EXPECT_TRUE(g.adjacent(u, v)); });
    }
}

TEST(Transform, DeleteVertex) {
  for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(isomorphic(delete_vertex(Graph::cycle(4), v).graph, Graph::path(3)));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(delete_vertex(Graph::clique(3), v).graph, Graph::clique(2));
  const Transformed t = delete_vertex(Graph::matching(2), 0);
  EXPECT_EQ(t.graph.order(), 3);
  EXPECT_EQ(t.graph.edge_count(), 1u);
  EXPECT_TRUE(t.map.deleted(0));
  EXPECT_EQ(t.map(1), 0);
  EXPECT_EQ(t.map(3), 2);
  EXPECT_THROW(delete_vertex(Graph::clique(3), 3), std::out_of_range);
}

TEST(Transform, DeleteClosedNeighborhood) {
  for (Vertex v = 0; v < 5; ++v) {
    const Graph g = delete_closed_neighborhood(Graph::cycle(5), v).graph;
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.edge_count(), 1u);
  }
  EXPECT_EQ(delete_closed_neighborhood(Graph::clique(4), 2).graph.order(), 0);
  EXPECT_EQ(delete_closed_neighborhood(Graph::empty(5), 2).graph, Graph::empty(4));
}

TEST(Transform, ContractEdge) {
  EXPECT_EQ(contract_edge(Graph::cycle(5), 3, 4).graph, Graph::cycle(4));
  EXPECT_EQ(contract_edge(Graph::cycle(3), 0, 1).graph, Graph::cycle(2));
  const Transformed p = contract_edge(Graph::path(2), 0, 1);
  EXPECT_EQ(p.graph, Graph::empty(1));
  EXPECT_EQ(p.map(0), 0);
  EXPECT_EQ(p.map(1), 0);
  EXPECT_THROW(contract_edge(Graph::cycle(5), 0, 2), std::invalid_argument);
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(isomorphic(contract_edge(Graph::cycle(n), n - 2, n - 1).graph, Graph::cycle(n - 1))) << n;
}

TEST(Transform, MapApply) {
  const Transformed t = contract_edge(Graph::cycle(5), 3, 4);
  EXPECT_EQ(t.map.apply(VertexSet::of({0, 4})), VertexSet::of({0, 3}));
  EXPECT_THROW(t.map.apply(VertexSet::of({3, 4})), std::invalid_argument);
  const Transformed d = delete_vertex(Graph::cycle(5), 2);
  EXPECT_THROW(d.map.apply(VertexSet::of({2})), std::invalid_argument);
  const VertexMap both = t.map.then(contract_edge(t.graph, 2, 3).map);
  EXPECT_EQ(both(4), 2);
  EXPECT_EQ(both(3), 2);
  EXPECT_EQ(both(0), 0);
}

TEST(Transform, DeletionsCommute) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng.between(2, 9), rng.uniform(), rng);
    const Vertex a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
    Vertex b = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(g.order())));
    if (a == b) continue;
    const Transformed ta = delete_vertex(g, a);
    const Transformed tb = delete_vertex(g, b);
    const Graph ab = delete_vertex(ta.graph, ta.map(b)).graph;
    const Graph ba = delete_vertex(tb.graph, tb.map(a)).graph;
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(ab, delete_vertices(g, VertexSet::of({a, b})).graph);
  }
}

TEST(Neighborhood, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(Graph::cycle(5), 0), VertexSet::of({0, 1, 4}));
  EXPECT_EQ(closed_neighborhood(Graph::empty(3), 2), VertexSet::of({2}));
  EXPECT_EQ(closed_neighborhood(Graph::clique(3), 0), VertexSet::of({0, 1, 2}));
}

TEST(Neighborhood, Dominated) {
  EXPECT_TRUE(is_dominated(Graph::clique(3), 0, 1));
  EXPECT_TRUE(is_dominated(Graph::path(3), 0, 1));
  EXPECT_FALSE(is_dominated(Graph::path(3), 1, 0));
  EXPECT_FALSE(is_dominated(Graph::matching(2), 0, 2));
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng.between(2, 8), rng.uniform(), rng);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v)
        if (u != v && is_dominated(g, u, v)) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(Canonical, IsomorphismInvariance) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.between(1, 8);
    const Graph g = random_graph(n, rng.uniform(), rng);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    EXPECT_TRUE(isomorphic(g, Graph::from_edges(n, edges)));
  }
  EXPECT_FALSE(isomorphic(Graph::path(4), Graph::cycle(4)));
  EXPECT_FALSE(isomorphic(Graph::matching(2), Graph::path(4)));
}

TEST(Spec, Parse) {
  EXPECT_EQ(parse_graph_spec("cycle:7"), Graph::cycle(7));
  EXPECT_EQ(parse_graph_spec("matching:4"), Graph::matching(4));
  EXPECT_EQ(parse_graph_spec("empty:5"), Graph::empty(5));
  EXPECT_EQ(parse_graph_spec("path:6"), Graph::path(6));
  EXPECT_EQ(parse_graph_spec("clique:4"), Graph::clique(4));
  const std::vector<int> sizes{2, 3, 3};
  EXPECT_EQ(parse_graph_spec("cliques:2,3,3"), Graph::clique_union(sizes));
  for (const char* bad : {"", "cycle", "cycle:x", "cycle:1", "wheel:5", "cliques:2,,3", "empty:-1", "empty:65"})
    EXPECT_THROW(parse_graph_spec(bad), std::invalid_argument) << bad;
}
