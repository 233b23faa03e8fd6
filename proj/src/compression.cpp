#include "xint/compression.hpp"

#include <stdexcept>

#include "xint/error.hpp"
#include "xint/io.hpp"

namespace xint {

namespace {

std::string pair_witness(const SetFamily& a, const SetFamily& b, nlohmann::json extra = {}) {
  nlohmann::json j = {{"graph", graph_to_json(a.host())}, {"A", family_to_json(a)}, {"B", family_to_json(b)}};
  if (!extra.is_null()) j["context"] = std::move(extra);
  return j.dump();
}

std::string family_witness(const SetFamily& a, nlohmann::json extra = {}) {
  nlohmann::json j = {{"graph", graph_to_json(a.host())}, {"A", family_to_json(a)}};
  if (!extra.is_null()) j["context"] = std::move(extra);
  return j.dump();
}

// Rehosts members through `map`; failures here mean a transported member is
// not an independent set of the target, which the callers rule out.
SetFamily transport(const std::vector<VertexSet>& members, const Transformed& target, int r, const char* what) {
  std::vector<VertexSet> mapped;
  mapped.reserve(members.size());
  try {
    for (VertexSet s : members) mapped.push_back(target.map.apply(s));
    return SetFamily::from_members(target.graph, r, std::move(mapped));
  } catch (const std::invalid_argument& e) {
    throw InvariantViolation(std::string(what) + ": " + e.what(), "{}");
  }
}

void require_cross(const SetFamily& a, const SetFamily& b, const char* what) {
  if (!is_cross_intersecting(a, b)) throw std::invalid_argument(std::string(what) + ": families are not cross-intersecting");
}

}  // namespace

SetFamily shift_family(const SetFamily& family, Vertex from, Vertex to) {
  const Graph& g = family.host();
  std::vector<VertexSet> image;
  image.reserve(family.size());
  for (VertexSet s : family) {
    if (s.contains(from)) {
      const VertexSet moved = s.without(from).with(to);
      if (!family.contains(moved)) {
        if (!g.is_independent(moved) || moved.size() != s.size())
          throw InvariantViolation("shift image is not an independent r-set", family_witness(family));
        image.push_back(moved);
        continue;
      }
    }
    image.push_back(s);
  }
  const std::size_t before = image.size();
  SetFamily out = SetFamily::from_members(g, family.r(), std::move(image));
  if (out.size() != before) throw InvariantViolation("shift is not injective", family_witness(family));
  return out;
}

CompressedPair compress_pair_chordal(const Graph& g, const SetFamily& a, const SetFamily& b, Vertex v1, Vertex vi) {
  if (a.host() != g || b.host() != g) throw std::invalid_argument("compress_pair_chordal: families not hosted on g");
  if (a.r() != b.r()) throw std::invalid_argument("compress_pair_chordal: families differ in r");
  if (!is_dominated(g, v1, vi)) throw std::invalid_argument("compress_pair_chordal: N[v1] is not inside N[vi]");
  require_cross(a, b, "compress_pair_chordal");
  const int r = a.r();
  if (r < 1) throw std::invalid_argument("compress_pair_chordal: r must be at least 1");

  CompressedPair out{v1,
                     vi,
                     shift_family(a, vi, v1),
                     shift_family(b, vi, v1),
                     delete_vertex(g, vi),
                     delete_closed_neighborhood(g, vi),
                     SetFamily(Graph{}, r),
                     SetFamily(Graph{}, r),
                     SetFamily(Graph{}, r - 1),
                     SetFamily(Graph{}, r - 1)};

  auto split = [&](const SetFamily& shifted, SetFamily& avoiding, SetFamily& through) {
    std::vector<VertexSet> without_vi;
    std::vector<VertexSet> with_vi;
    for (VertexSet s : shifted) {
      if (s.contains(vi))
        with_vi.push_back(s.without(vi));
      else
        without_vi.push_back(s);
    }
    avoiding = transport(without_vi, out.minus, r, "compress_pair_chordal: member avoiding vi");
    through = transport(with_vi, out.down, r - 1, "compress_pair_chordal: member through vi");
  };
  split(out.a_shifted, out.a_avoiding, out.a_through);
  split(out.b_shifted, out.b_avoiding, out.b_through);

  const nlohmann::json context = {{"v1", v1 + 1}, {"vi", vi + 1}};
  if (a.size() != out.a_shifted.size() || b.size() != out.b_shifted.size() ||
      out.a_shifted.size() != out.a_avoiding.size() + out.a_through.size() ||
      out.b_shifted.size() != out.b_avoiding.size() + out.b_through.size())
    throw InvariantViolation("compression changed family sizes", pair_witness(a, b, context));
  if (!is_cross_intersecting(out.a_through, out.b_through))
    throw InvariantViolation("compressed pair through vi is not cross-intersecting", pair_witness(a, b, context));
  if (!is_cross_intersecting(out.a_avoiding, out.b_avoiding))
    throw InvariantViolation("compressed pair avoiding vi is not cross-intersecting", pair_witness(a, b, context));
  return out;
}

LiftedFamily lift_to_auxiliary(const Graph& g, std::span<const SetFamily> families) {
  const int k = static_cast<int>(families.size());
  if (k < 1) throw std::invalid_argument("lift_to_auxiliary: no families");
  const int n = g.order();
  if (n + k > kMaxVertices) throw std::invalid_argument("lift_to_auxiliary: auxiliary graph exceeds vertex capacity");
  for (const SetFamily& f : families)
    if (f.host() != g) throw std::invalid_argument("lift_to_auxiliary: families not hosted on g");
  if (!is_cross_intersecting(families)) throw std::invalid_argument("lift_to_auxiliary: families are not cross-intersecting");
  const int r = families[0].r();

  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  std::vector<Vertex> apex;
  for (int i = 0; i < k; ++i) {
    apex.push_back(n + i);
    for (int j = 0; j < i; ++j) edges.emplace_back(n + j, n + i);
  }
  Graph lifted = Graph::from_edges(n + k, edges);

  std::vector<VertexSet> members;
  std::size_t total = 0;
  for (int i = 0; i < k; ++i) {
    total += families[static_cast<std::size_t>(i)].size();
    for (VertexSet s : families[static_cast<std::size_t>(i)]) members.push_back(s.with(apex[static_cast<std::size_t>(i)]));
  }
  SetFamily family = SetFamily::from_members(lifted, r + 1, std::move(members));
  if (family.size() != total) throw InvariantViolation("lifted family lost members", family_witness(family));
  if (!is_intersecting(family)) throw InvariantViolation("lifted family is not intersecting", family_witness(family));
  return {std::move(lifted), std::move(family), std::move(apex)};
}

CycleSplit cycle_split(const SetFamily& family) {
  const Graph& host = family.host();
  const int n = host.order();
  if (n < 4) throw std::invalid_argument("cycle_split: needs a cycle on at least 4 vertices");
  if (host != Graph::cycle(n)) throw std::invalid_argument("cycle_split: host is not the cycle C_n");
  const int r = family.r();
  if (r < 1) throw std::invalid_argument("cycle_split: r must be at least 1");

  // 0-based names for the 1-based vertices 1, n-2, n-1, n
  const Vertex first = 0;
  const Vertex third_last = n - 3;
  const Vertex second_last = n - 2;
  const Vertex last = n - 1;

  CycleSplit out{n,
                 SetFamily(Graph{}, r - 1),
                 SetFamily(Graph{}, r - 1),
                 SetFamily(host, r),
                 SetFamily(host, r),
                 SetFamily(Graph{}, r),
                 SetFamily(Graph{}, r - 1),
                 SetFamily(Graph{}, r - 1),
                 contract_edge(host, second_last, last),
                 Transformed{Graph{}, VertexMap::identity(0)}};
  out.twice = contract_edge(out.once.graph, third_last, second_last);
  if (!isomorphic(out.once.graph, Graph::cycle(n - 1)) || !isomorphic(out.twice.graph, Graph::cycle(n - 2)))
    throw InvariantViolation("contractions of C_n are not C_{n-1}, C_{n-2}", family_witness(family));
  const Transformed both{out.twice.graph, out.once.map.then(out.twice.map)};

  std::vector<VertexSet> high;
  std::vector<VertexSet> wrap;
  std::vector<VertexSet> rest;
  for (VertexSet s : family) {
    if (s.contains(third_last) && s.contains(last))
      high.push_back(s.without(last));
    else if (s.contains(first) && s.contains(second_last))
      wrap.push_back(s.without(second_last));
    else
      rest.push_back(s);
  }
  out.through_high = transport(high, both, r - 1, "cycle_split: through_high");
  out.through_wrap = transport(wrap, both, r - 1, "cycle_split: through_wrap");
  out.remainder = SetFamily::from_members(host, r, rest);
  out.shifted = shift_family(out.remainder, last, second_last);

  std::vector<VertexSet> kept;
  std::vector<VertexSet> tail;
  for (VertexSet s : out.shifted) {
    if (s.contains(last))
      tail.push_back(s.without(last));
    else
      kept.push_back(s);
  }
  out.kept = transport(kept, out.once, r, "cycle_split: kept");
  out.shifted_tail = transport(tail, both, r - 1, "cycle_split: shifted_tail");

  const std::string witness = family_witness(family);
  for (VertexSet s : tail)
    if (!out.remainder.contains(s.with(second_last)))
      throw InvariantViolation("shifted_tail member plus n-1 is missing from the remainder", witness);

  const SetFamily* parts[] = {&out.through_high, &out.through_wrap, &out.shifted_tail};
  std::vector<VertexSet> reduced;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j)
      for (VertexSet s : *parts[i])
        if (parts[j]->contains(s)) throw InvariantViolation("the three (r-1)-families overlap", witness);
    reduced.insert(reduced.end(), parts[i]->begin(), parts[i]->end());
  }
  out.reduced = SetFamily::from_members(out.twice.graph, r - 1, std::move(reduced));

  if (out.shifted.size() != out.remainder.size())
    throw InvariantViolation("shift is not injective on the remainder", witness);
  if (family.size() != out.kept.size() + out.reduced.size())
    throw InvariantViolation("split sizes do not add up to |A|", witness);
  return out;
}

ClaimCheck verify_cross_claims(const CycleSplit& split_a, const CycleSplit& split_b) {
  if (split_a.n != split_b.n) throw std::invalid_argument("verify_cross_claims: splits of different cycles");
  auto first_disjoint = [](const SetFamily& x, const SetFamily& y) -> std::optional<std::pair<VertexSet, VertexSet>> {
    for (VertexSet s : x)
      for (VertexSet t : y)
        if (!s.intersects(t)) return std::make_pair(s, t);
    return std::nullopt;
  };
  if (auto bad = first_disjoint(split_a.kept, split_b.kept))
    return {false, "kept pair over C_{n-1} is not cross-intersecting", bad};
  if (auto bad = first_disjoint(split_a.reduced, split_b.reduced))
    return {false, "reduced pair over C_{n-2} is not cross-intersecting", bad};
  return {};
}

}  // namespace xint
