#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xint/families.hpp"
#include "xint/graph.hpp"

namespace xint {

/// Compression toward a dominating vertex: every member containing `from` is
/// moved to (member - from + to) unless that image is already in the
/// family. Membership is tested against the family as given, so the shift is
/// applied simultaneously, never iteratively. The image set must be
/// independent in the host.
SetFamily shift_family(const SetFamily& family, Vertex from, Vertex to);

/// Result of compressing a cross-intersecting pair (A, B) of a graph along
/// a dominated pair N[v1] within N[vi], then splitting on vi.
struct CompressedPair {
  Vertex v1 = 0;
  Vertex vi = 0;
  SetFamily a_shifted;  // f(A), host G
  SetFamily b_shifted;  // g(B), host G
  Transformed minus;    // G - vi
  Transformed down;     // G with N[vi] removed
  SetFamily a_avoiding; // members of f(A) without vi, host G - vi
  SetFamily b_avoiding;
  SetFamily a_through;  // members of f(A) with vi, vi dropped, host G down vi
  SetFamily b_through;
};

/// Throws std::invalid_argument when the pair is not dominated or (A, B) is
/// not cross-intersecting, and InvariantViolation when a postcondition fails:
/// both split pairs must be cross-intersecting and the sizes must add up.
CompressedPair compress_pair_chordal(const Graph& g, const SetFamily& a, const SetFamily& b, Vertex v1, Vertex vi);

/// Auxiliary construction for clique unions: G' is G plus a disjoint K_k on
/// apex vertices n..n+k-1 and family i is lifted by adding apex i.
struct LiftedFamily {
  Graph graph;
  SetFamily family;
  std::vector<Vertex> apex;
};

/// Requires pairwise cross-intersecting families of equal r over g. The
/// lifted family is checked to be intersecting and of size sum |A_i|.
LiftedFamily lift_to_auxiliary(const Graph& g, std::span<const SetFamily> families);

/// Split of a family over C_n (n >= 4) along the contractions of {n-1, n}
/// and then {n-2, n-1} (1-based). Field names map to the usual notation:
///   through_high  = { A - n     : n-2, n in A }         (A_1)
///   through_wrap  = { A - (n-1) : 1, n-1 in A }         (A_2)
///   remainder     = A minus the members feeding the two above  (A*)
///   shifted       = image of remainder under n -> n-1
///   kept          = members of shifted avoiding n, host C_{n-1}   (A')
///   shifted_tail  = { A - n : n in A, A in shifted }  (A_3)
///   reduced       = union of the three (r-1)-families, host C_{n-2}
struct CycleSplit {
  int n = 0;
  SetFamily through_high;
  SetFamily through_wrap;
  SetFamily remainder;
  SetFamily shifted;
  SetFamily kept;
  SetFamily shifted_tail;
  SetFamily reduced;
  Transformed once;   // C_n -> C_{n-1}
  Transformed twice;  // C_{n-1} -> C_{n-2}
};

/// Host must be exactly cycle(n) with n >= 4. Checks that every member of
/// shifted_tail plus n-1 lies in remainder, that the three (r-1)-families
/// are pairwise disjoint, that the shift is injective, and that
/// |A| = |kept| + |reduced|; throws InvariantViolation otherwise.
CycleSplit cycle_split(const SetFamily& family);

struct ClaimCheck {
  bool passed = true;
  std::string claim;
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;

  explicit operator bool() const { return passed; }
};

/// Both derived pairs are cross-intersecting: (kept_A, kept_B) over C_{n-1}
/// and (reduced_A, reduced_B) over C_{n-2}.
ClaimCheck verify_cross_claims(const CycleSplit& split_a, const CycleSplit& split_b);

}  // namespace xint
