// Plain enumeration engine for max_cross_sum. Each member is put in no
// family, a single family, or all k families, subject only to the pairwise
// rules; nothing is bounded. Used as the cross-check for the reduced engine.

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "xint/extremal.hpp"

namespace xint::detail {

namespace {

struct Classes {
  std::uint32_t all = 0;
  std::uint32_t single = 0;
};

class NaiveEnumeration {
 public:
  NaiveEnumeration(const DisjointnessGraph& meta, int k) : k_(k), m_(meta.size()), adj_(meta.size(), 0) {
    if (m_ > kNaiveMaxMembers)
      throw std::invalid_argument("naive engine limited to " + std::to_string(kNaiveMaxMembers) + " members, got " +
                                  std::to_string(m_));
    for (std::size_t i = 0; i < m_; ++i) meta.adjacency[i].for_each([&](std::size_t j) { adj_[i] |= 1U << j; });
  }

  template <class Visit>
  void run(Visit&& visit) {
    walk(0, Classes{}, visit);
  }

  std::int64_t value(const Classes& c) const {
    return static_cast<std::int64_t>(k_) * std::popcount(c.all) + std::popcount(c.single);
  }

  std::uint32_t adjacency(std::size_t i) const { return adj_[i]; }
  std::size_t size() const { return m_; }
  std::uint64_t visited() const { return visited_; }

 private:
  template <class Visit>
  void walk(std::size_t i, Classes c, Visit& visit) {
    ++visited_;
    if (i == m_) {
      visit(c);
      return;
    }
    const std::uint32_t bit = 1U << i;
    // all families: no disjoint member may be in any family
    if ((adj_[i] & (c.all | c.single)) == 0) walk(i + 1, Classes{c.all | bit, c.single}, visit);
    // one family: no disjoint member may be in all families
    if ((adj_[i] & c.all) == 0) walk(i + 1, Classes{c.all, c.single | bit}, visit);
    walk(i + 1, c, visit);
  }

  int k_;
  std::size_t m_;
  std::vector<std::uint32_t> adj_;
  std::uint64_t visited_ = 0;
};

}  // namespace

SearchResult naive_cross_sum(const DisjointnessGraph& meta, int k) {
  NaiveEnumeration e(meta, k);
  Classes best;
  std::int64_t best_value = -1;
  e.run([&](const Classes& c) {
    if (e.value(c) > best_value) {
      best_value = e.value(c);
      best = c;
    }
  });
  // disjoint members in the single class must share a family; family 1
  // for all of them always works
  std::vector<Label> labels(e.size(), Label::none());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if ((best.all >> i) & 1U) labels[i] = Label::all();
    if ((best.single >> i) & 1U) labels[i] = Label::single(1);
  }
  SearchResult result;
  result.engine = Engine::kNaive;
  result.value = best_value;
  result.witness = Labeling(k, std::move(labels));
  for (std::size_t i = 0; i < e.size(); ++i)
    if ((best.all >> i) & 1U) result.selected.push_back(i);
  result.nodes = e.visited();
  return result;
}

OptimaList naive_optima(const DisjointnessGraph& meta, int k, std::size_t limit) {
  NaiveEnumeration e(meta, k);
  std::int64_t best_value = -1;
  e.run([&](const Classes& c) { best_value = std::max(best_value, e.value(c)); });

  OptimaList out;
  out.engine = Engine::kNaive;
  out.value = best_value;
  e.run([&](const Classes& c) {
    if (e.value(c) != best_value || out.truncated) return;
    // try every family index for every single-class member, keeping the
    // assignments where disjoint single members agree
    std::vector<std::size_t> singles;
    for (std::size_t i = 0; i < e.size(); ++i)
      if ((c.single >> i) & 1U) singles.push_back(i);
    std::vector<int> family(e.size(), 0);
    auto assign = [&](auto&& self, std::size_t pos) -> void {
      if (out.truncated) return;
      if (pos == singles.size()) {
        if (out.labelings.size() >= limit) {
          out.truncated = true;
          return;
        }
        std::vector<Label> labels(e.size(), Label::none());
        for (std::size_t i = 0; i < e.size(); ++i)
          if ((c.all >> i) & 1U) labels[i] = Label::all();
        for (std::size_t i : singles) labels[i] = Label::single(family[i]);
        out.labelings.emplace_back(k, std::move(labels));
        return;
      }
      const std::size_t i = singles[pos];
      for (int f = 1; f <= k; ++f) {
        bool ok = true;
        for (std::size_t q = 0; q < pos; ++q) {
          const std::size_t j = singles[q];
          if (((e.adjacency(i) >> j) & 1U) && family[j] != f) ok = false;
        }
        if (!ok) continue;
        family[i] = f;
        self(self, pos + 1);
      }
    };
    assign(assign, 0);
  });
  std::sort(out.labelings.begin(), out.labelings.end());
  return out;
}

}  // namespace xint::detail
