#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xint/graph.hpp"

namespace xint {

/// Vertex ordering in which each vertex is simplicial in the graph induced
/// by itself and its successors.
struct EliminationOrdering {
  std::vector<Vertex> order;
};

/// The neighbourhood of v is a clique. Isolated vertices qualify.
bool is_simplicial(const Graph& g, Vertex v);

/// Greedy repeated removal of the smallest-index simplicial vertex. Returns
/// nullopt exactly when g is not chordal.
std::optional<EliminationOrdering> find_elimination_ordering(const Graph& g);

/// Step-by-step check of the simplicial property along `order`.
bool is_elimination_ordering(const Graph& g, std::span<const Vertex> order);

bool is_chordal(const Graph& g);

/// Brute-force search for an induced cycle on at least four vertices,
/// returned in cyclic order. Exponential; intended for n <= 16.
std::optional<std::vector<Vertex>> find_induced_long_cycle(const Graph& g);

/// Chordal graph built by inserting vertices one at a time, each joined to a
/// random clique among the earlier ones; `density` is the probability of
/// keeping each eligible vertex. Labels are shuffled afterwards. density 0
/// gives the edgeless graph and density 1 the complete graph.
Graph random_chordal(int n, double density, std::uint64_t seed);

}  // namespace xint
