#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace xint {

class Rng;

using Vertex = int;

/// Vertices are stored in a single machine word.
inline constexpr int kMaxVertices = 64;

/// Subset of the vertex range [0, 64) stored as a bitmask. Ordering is by
/// numeric bitmask value, which is the canonical member order of families.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<Vertex> vertices);
  static VertexSet of(std::span<const Vertex> vertices);
  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr VertexSet with(Vertex v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
  constexpr VertexSet without(Vertex v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex min() const { return std::countr_zero(bits_); }
  /// Largest element; undefined on the empty set.
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  std::vector<Vertex> elements() const;

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1. Values are immutable once
/// built; every transform returns a new graph.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n);
  static Graph path(int n);
  /// cycle(2) is a single edge and cycle(3) a triangle.
  static Graph cycle(int n);
  /// Perfect matching with `edges` edges on 2*edges vertices; edge i is {2i, 2i+1}.
  static Graph matching(int edges);
  static Graph clique(int n);
  /// Disjoint union of complete graphs, placed consecutively.
  static Graph clique_union(std::span<const int> sizes);
  /// Duplicate edges are merged; loops and out-of-range endpoints throw.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  /// Adjacency rows must be symmetric, loop-free and in range.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  bool is_independent(VertexSet s) const;
  /// Graph induced on `keep`, relabelled compactly in increasing order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(int n);
  void connect(Vertex u, Vertex v);

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Total map from the vertices of a source graph to those of a derived graph.
/// Deleted vertices map to kDeleted; surviving vertices are relabelled onto
/// [0, target_order).
class VertexMap {
 public:
  static constexpr Vertex kDeleted = -1;

  VertexMap(std::vector<Vertex> image, int target_order);

  static VertexMap identity(int n);

  int source_order() const { return static_cast<int>(image_.size()); }
  int target_order() const { return target_order_; }
  Vertex operator()(Vertex v) const { return image_.at(static_cast<std::size_t>(v)); }
  bool deleted(Vertex v) const { return (*this)(v) == kDeleted; }
  std::span<const Vertex> image() const { return image_; }

  /// Image of a set. Throws std::invalid_argument if the set touches a
  /// deleted vertex or two of its members are merged.
  VertexSet apply(VertexSet s) const;

  /// `next` applied after this map.
  VertexMap then(const VertexMap& next) const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> image_;
  int target_order_ = 0;
};

struct Transformed {
  Graph graph;
  VertexMap map;
};

/// G - v.
Transformed delete_vertex(const Graph& g, Vertex v);
/// G with N[v] removed.
Transformed delete_closed_neighborhood(const Graph& g, Vertex v);
Transformed delete_vertices(const Graph& g, VertexSet removed);
/// Merges v into u's position (the smaller label survives) and compacts;
/// parallel edges collapse and the loop is dropped.
Transformed contract_edge(const Graph& g, Vertex u, Vertex v);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// N[v1] is a subset of N[v2]. When true the two vertices are adjacent.
bool is_dominated(const Graph& g, Vertex v1, Vertex v2);

/// Canonical labelling certificate: two graphs are isomorphic iff their
/// forms are equal. Exhaustive with prefix pruning; meant for small fixtures.
std::vector<std::uint64_t> canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// Parses "empty:5", "path:6", "cycle:7", "clique:4", "matching:4",
/// "cliques:2,3,3". Throws std::invalid_argument on malformed specs.
Graph parse_graph_spec(const std::string& spec);

}  // namespace xint
