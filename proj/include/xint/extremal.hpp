#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "xint/bitset.hpp"
#include "xint/families.hpp"

namespace xint {

/// Graph on the members of a family with an edge between disjoint members.
/// Intersecting subfamilies are exactly its independent sets.
struct DisjointnessGraph {
  SetFamily family;
  std::vector<Bitset> adjacency;

  std::size_t size() const { return adjacency.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }
};

/// Rows are built in parallel; the result is identical to the serial build.
DisjointnessGraph disjointness_graph(const SetFamily& family);

namespace reference {
DisjointnessGraph disjointness_graph(const SetFamily& family);
}  // namespace reference

enum class LabelKind : std::uint8_t { kNone, kSingle, kAll };

/// Which of the k families a member belongs to. Only the empty label, a
/// single family, or all k families are ever optimal: a member in two or
/// more (but not all) families already forces every disjoint member out, so
/// promoting it to all families keeps feasibility and gains value.
struct Label {
  LabelKind kind = LabelKind::kNone;
  int family = 0;  // 1-based, meaningful for kSingle only

  static constexpr Label none() { return {}; }
  static constexpr Label single(int f) { return {LabelKind::kSingle, f}; }
  static constexpr Label all() { return {LabelKind::kAll, 0}; }

  bool contains(int f) const { return kind == LabelKind::kAll || (kind == LabelKind::kSingle && family == f); }
  int weight(int k) const { return kind == LabelKind::kAll ? k : (kind == LabelKind::kSingle ? 1 : 0); }
  /// Total order used to sort labelings: none < single(1) < ... < all.
  int rank(int k) const { return kind == LabelKind::kAll ? k + 1 : (kind == LabelKind::kSingle ? family : 0); }

  friend bool operator==(const Label&, const Label&) = default;
};

/// Two disjoint members labelled with family sets `a` and `b` (bit i means
/// family i+1) are compatible iff no family of one differs from a family of
/// the other. Written straight from the definition.
bool label_pair_feasible(std::uint32_t a, std::uint32_t b);

class Labeling {
 public:
  Labeling() = default;
  Labeling(int k, std::vector<Label> labels);

  int k() const { return k_; }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& operator[](std::size_t i) const { return labels_[i]; }

  /// Sum of label weights = total size of the decoded families.
  std::int64_t value() const;
  bool feasible(const DisjointnessGraph& meta) const;
  /// The k families, in order, over the family's host.
  std::vector<SetFamily> decode(const SetFamily& family) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;
  /// Lexicographic on label ranks.
  friend bool operator<(const Labeling& a, const Labeling& b);

 private:
  int k_ = 0;
  std::vector<Label> labels_;
};

enum class Engine {
  kReduced,         // branch and bound over the all-families set
  kNaive,           // plain enumeration of none/single/all classes, m <= 15
  kBranchAndBound,  // maximum intersecting subfamily, colouring bound
  kExhaustive,      // maximum intersecting subfamily, every subset, m <= 20
};

std::string engine_name(Engine engine);
Engine parse_engine(const std::string& name);

inline constexpr std::size_t kNaiveMaxMembers = 15;
inline constexpr std::size_t kExhaustiveMaxMembers = 20;

struct SearchOptions {
  std::uint64_t node_budget = 500'000'000;
};

struct SearchResult {
  std::int64_t value = 0;
  /// Cross-sum searches: witness labeling attaining `value`.
  Labeling witness;
  /// Intersecting searches: the chosen members. Cross-sum searches: the
  /// members labelled with every family.
  std::vector<std::size_t> selected;
  Engine engine = Engine::kReduced;
  std::uint64_t nodes = 0;
  bool optimal = true;
};

/// Largest intersecting subfamily. Throws BudgetExceeded past the node budget.
SearchResult max_intersecting(const DisjointnessGraph& meta, Engine engine = Engine::kBranchAndBound,
                              const SearchOptions& options = {});

struct IntersectingOptima {
  std::int64_t value = 0;
  std::vector<std::vector<std::size_t>> families;  // sorted member indices, sorted list
  bool truncated = false;
};

/// Every maximum intersecting subfamily, up to `limit`.
IntersectingOptima enumerate_max_intersecting(const DisjointnessGraph& meta, std::size_t limit,
                                              const SearchOptions& options = {});

/// Largest total size of k cross-intersecting subfamilies (k >= 2).
///
/// The reduced engine uses: optimum = m + max over intersecting X of
/// ((k - 1)|X| - |N(X)|), where X takes every family, its disjoint members
/// none, and all other members share family 1. The witness uses the
/// lexicographically least optimal X (smaller member indices first).
SearchResult max_cross_sum(const DisjointnessGraph& meta, int k, Engine engine = Engine::kReduced,
                           const SearchOptions& options = {});

struct OptimaList {
  std::int64_t value = 0;
  std::vector<Labeling> labelings;  // sorted
  bool truncated = false;
  Engine engine = Engine::kReduced;
};

/// All optimal labelings, up to `limit` (which must be positive).
OptimaList enumerate_optima(const DisjointnessGraph& meta, int k, std::size_t limit,
                            Engine engine = Engine::kReduced, const SearchOptions& options = {});

namespace detail {
SearchResult naive_cross_sum(const DisjointnessGraph& meta, int k);
OptimaList naive_optima(const DisjointnessGraph& meta, int k, std::size_t limit);
}  // namespace detail

}  // namespace xint
