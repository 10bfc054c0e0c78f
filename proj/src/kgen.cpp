#include "kpo/kgen.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace kpo {

namespace {

constexpr int kRouteLimit = 16;  // expansions have 2^(n-1) coefficients

void check_route_size(const OrientedPoset& p) {
  if (p.size() > kRouteLimit)
    throw poset_error(Errc::SizeLimitExceeded,
                      "generating functions limited to n<=16");
}

}  // namespace

FExpansion k_f_route(const OrientedPoset& p) {
  check_route_size(p);
  auto lab = realize_labeling(p);
  if (!lab)
    throw poset_error(Errc::NotRealizable, "no labeling realizes this orientation");
  FExpansion f;
  f.n = p.size();
  for (const LinearExtension& ext : linear_extensions(p, *lab))
    f.mult[descent_set(ext)]++;
  return f;
}

namespace {

struct MRoute {
  const OrientedPoset& p;
  std::vector<Mask> strict_up;  // strict up-covers per element
  std::unordered_map<std::uint64_t, long long> memo;

  explicit MRoute(const OrientedPoset& poset) : p(poset) {
    strict_up.assign(p.size(), 0);
    for (const Cover& c : p.covers())
      if (c.kind == EdgeKind::Strict) strict_up[c.lo] |= Mask(1) << c.hi;
  }

  bool valid_level(Mask ideal, Mask mask) const {
    for (Mask m = ideal; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((p.down_covers(v) & mask & ~ideal) != 0) return false;  // not down-closed
      if ((strict_up[v] & ideal) != 0) return false;              // strict edge inside
    }
    return true;
  }

  // Partitions of the subposet on `mask` whose level sizes follow the
  // composition of popcount(mask) encoded by `sbits`.
  long long count(Mask mask, Mask sbits) {
    if (mask == 0) return 1;
    std::uint64_t key = (std::uint64_t(mask) << 32) | sbits;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int m = std::popcount(mask);
    int first = sbits ? std::countr_zero(sbits) + 1 : m;
    long long total = 0;
    for (Mask sub = mask;; sub = (sub - 1) & mask) {
      if (std::popcount(sub) == first && valid_level(sub, mask))
        total = checked_add(total, count(mask & ~sub, sbits >> first));
      if (sub == 0) break;
    }
    memo[key] = total;
    return total;
  }
};

}  // namespace

MExpansion k_m_route(const OrientedPoset& p) {
  check_route_size(p);
  MExpansion m = MExpansion::zero(p.size());
  MRoute route(p);
  Mask full = p.size() == 0 ? 0 : (Mask(1) << p.size()) - 1;
  for (Mask s = 0; s < mexp_size(p.size()); s++) m.coeffs[s] = route.count(full, s);
  return m;
}

bool k_equal(const OrientedPoset& a, const OrientedPoset& b) {
  return mexp_equal(k_m_route(a), k_m_route(b));
}

bool is_p_partition(const OrientedPoset& p, const PPartition& f) {
  if ((int)f.values.size() != p.size())
    throw poset_error(Errc::IdOutOfRange, "value map has wrong length");
  for (int v : f.values)
    if (v < 1) return false;
  for (const Cover& c : p.covers()) {
    if (c.kind == EdgeKind::Weak && !(f.values[c.lo] <= f.values[c.hi])) return false;
    if (c.kind == EdgeKind::Strict && !(f.values[c.lo] < f.values[c.hi])) return false;
  }
  return true;
}

std::vector<PPartition> enumerate_p_partitions(const OrientedPoset& p,
                                               int max_part) {
  if (max_part < 1)
    throw poset_error(Errc::PreconditionViolated, "max_part must be >= 1");
  int n = p.size();
  // Assign values in a topological order so lower bounds are already fixed.
  std::vector<int> order;
  {
    Mask used = 0;
    while ((int)order.size() < n)
      for (int v = 0; v < n; v++)
        if (!((used >> v) & 1u) && (p.below(v) & ~used) == 0) {
          order.push_back(v);
          used |= Mask(1) << v;
        }
  }
  std::vector<PPartition> out;
  std::vector<int> values(n, 0);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back({values});
      return;
    }
    int v = order[idx];
    int low = 1;
    for (Mask m = p.down_covers(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      int bound = values[u] + (p.cover_kind(u, v) == EdgeKind::Strict ? 1 : 0);
      low = std::max(low, bound);
    }
    for (int val = low; val <= max_part; val++) {
      values[v] = val;
      self(self, idx + 1);
    }
    values[v] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace kpo
