#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xint/graph.hpp"

namespace xint {

/// Uniform family of independent r-sets of a fixed host graph. Members are
/// kept deduplicated in ascending bitmask order; everything downstream relies
/// on that order for determinism.
class SetFamily {
 public:
  SetFamily(Graph host, int r);

  /// Validates each member (independent, exactly r elements, inside the
  /// host) and canonicalizes the order. Throws std::invalid_argument.
  static SetFamily from_members(Graph host, int r, std::vector<VertexSet> members);

  /// For kernels whose output is canonical by construction.
  static SetFamily adopt_canonical(Graph host, int r, std::vector<VertexSet> members);

  const Graph& host() const { return host_; }
  int r() const { return r_; }
  std::span<const VertexSet> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const VertexSet& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(VertexSet s) const;
  std::optional<std::size_t> index_of(VertexSet s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  SetFamily(Graph host, int r, std::vector<VertexSet> members);

  Graph host_;
  int r_ = 0;
  std::vector<VertexSet> members_;
};

/// All independent r-sets of g. Parallel over the largest member vertex; the
/// output order does not depend on the thread count. r > n yields an empty
/// family and r = 0 the family holding only the empty set.
SetFamily enumerate_independent(const Graph& g, int r);

/// Number of independent r-sets, without materializing them.
std::uint64_t count_independent(const Graph& g, int r);

/// Members of enumerate_independent(g, r) containing x.
SetFamily star(const Graph& g, int r, Vertex x);

namespace reference {

/// Serial enumeration by walking every r-subset in increasing bitmask order
/// and filtering. Exponential in n; kept as the test oracle for the kernel.
SetFamily enumerate_independent(const Graph& g, int r);

}  // namespace reference

struct MuResult {
  int mu = 0;
  /// Lexicographically least (as a sorted vertex list) among the minimum
  /// maximal independent sets.
  VertexSet witness;
};

/// Minimum size of a maximal independent set. The graph on zero vertices
/// has mu = 0.
MuResult mu(const Graph& g);

bool is_maximal_independent(const Graph& g, VertexSet s);

bool is_intersecting(const SetFamily& family);

/// Every pair of members drawn from distinct families intersects. Families
/// must share host and r (std::invalid_argument otherwise).
bool is_cross_intersecting(std::span<const SetFamily> families);
bool is_cross_intersecting(const SetFamily& a, const SetFamily& b);

/// First disjoint cross pair (family index, member) x (family index, member).
struct CrossViolation {
  std::size_t family_a;
  VertexSet member_a;
  std::size_t family_b;
  VertexSet member_b;
};
std::optional<CrossViolation> find_cross_violation(std::span<const SetFamily> families);

// Closed-form counts. All arithmetic is checked; overflow throws
// std::overflow_error.

std::uint64_t binomial(int n, int k);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

enum class CountKind {
  kEmpty,          // C(n, r)
  kEmptyStar,      // C(n-1, r-1)
  kMatching,       // C(n, r) 2^r on n edges
  kMatchingStar,   // C(n-1, r-1) 2^(r-1)
  kCycle,          // |J^r(C_n)| by the contraction recurrence
  kCliqueUnion,    // elementary symmetric polynomial e_r(sizes)
};

struct CountQuery {
  CountKind kind;
  int n = 0;
  int r = 0;
  std::vector<int> sizes;
};

std::uint64_t closed_count(const CountQuery& query);

/// "empty", "empty-star", "matching", "matching-star", "cycle", "clique-union".
CountKind parse_count_kind(const std::string& name);

std::uint64_t cycle_count(int n, int r);
std::uint64_t clique_union_count(std::span<const int> sizes, int r);

}  // namespace xint
