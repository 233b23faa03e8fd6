#include <map>
#include <stdexcept>

#include "xint/families.hpp"

namespace xint {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count overflows 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count overflows 64 bits");
  return out;
}

__extension__ using u128 = unsigned __int128;

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u128 c = 1;
  for (int i = 0; i < k; ++i) {
    c = c * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
    if (c > UINT64_MAX) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

std::uint64_t pow2(int e) {
  if (e < 0 || e >= 64) throw std::overflow_error("power of two overflows 64 bits");
  return std::uint64_t{1} << e;
}

}  // namespace

std::uint64_t cycle_count(int n, int r) {
  if (n < 2) throw std::invalid_argument("cycle_count: n must be at least 2");
  if (r < 0) throw std::invalid_argument("cycle_count: negative r");
  if (r == 0) return 1;
  // C_2 is a single edge, C_3 a triangle: one vertex at most.
  if (n <= 3) return r == 1 ? static_cast<std::uint64_t>(n) : 0;
  static thread_local std::map<std::pair<int, int>, std::uint64_t> memo;
  const auto key = std::make_pair(n, r);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const std::uint64_t value = checked_add(cycle_count(n - 1, r), cycle_count(n - 2, r - 1));
  memo.emplace(key, value);
  return value;
}

std::uint64_t clique_union_count(std::span<const int> sizes, int r) {
  if (r < 0) throw std::invalid_argument("clique_union_count: negative r");
  // elementary symmetric polynomial e_r(s_1, ..., s_n)
  std::vector<std::uint64_t> e(static_cast<std::size_t>(r) + 1, 0);
  e[0] = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("clique_union_count: component size must be positive");
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] = checked_add(e[j], checked_mul(e[j - 1], static_cast<std::uint64_t>(s)));
  }
  return e[static_cast<std::size_t>(r)];
}

std::uint64_t closed_count(const CountQuery& q) {
  if (q.r < 0 || q.n < 0) throw std::invalid_argument("closed_count: negative parameter");
  switch (q.kind) {
    case CountKind::kEmpty:
      return binomial(q.n, q.r);
    case CountKind::kEmptyStar:
      if (q.r < 1 || q.n < 1) throw std::invalid_argument("closed_count: star needs n, r >= 1");
      return binomial(q.n - 1, q.r - 1);
    case CountKind::kMatching:
      return checked_mul(binomial(q.n, q.r), pow2(q.r));
    case CountKind::kMatchingStar:
      if (q.r < 1 || q.n < 1) throw std::invalid_argument("closed_count: star needs n, r >= 1");
      return checked_mul(binomial(q.n - 1, q.r - 1), pow2(q.r - 1));
    case CountKind::kCycle:
      return cycle_count(q.n, q.r);
    case CountKind::kCliqueUnion:
      return clique_union_count(q.sizes, q.r);
  }
  throw std::invalid_argument("closed_count: unknown kind");
}

CountKind parse_count_kind(const std::string& name) {
  if (name == "empty") return CountKind::kEmpty;
  if (name == "empty-star") return CountKind::kEmptyStar;
  if (name == "matching") return CountKind::kMatching;
  if (name == "matching-star") return CountKind::kMatchingStar;
  if (name == "cycle") return CountKind::kCycle;
  if (name == "clique-union") return CountKind::kCliqueUnion;
  throw std::invalid_argument("unknown count kind '" + name + "'");
}

}  // namespace xint
