#include <omp.h>

#include "xint/extremal.hpp"

namespace xint {

DisjointnessGraph disjointness_graph(const SetFamily& family) {
  const std::size_t m = family.size();
  std::vector<Bitset> rows(m, Bitset(m));
  const auto members = family.members();
  const auto count = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    const VertexSet s = members[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < m; ++j)
      if (j != static_cast<std::size_t>(i) && !s.intersects(members[j])) row.set(j);
  }
  return {family, std::move(rows)};
}

namespace reference {

DisjointnessGraph disjointness_graph(const SetFamily& family) {
  const std::size_t m = family.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!family[i].intersects(family[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  return {family, std::move(rows)};
}

}  // namespace reference

}  // namespace xint
