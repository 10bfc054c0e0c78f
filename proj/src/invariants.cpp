#include "kpo/invariants.hpp"

#include <algorithm>
#include <bit>

#include <json.hpp>

#include "kpo/transforms.hpp"

namespace kpo {

namespace {

constexpr int kSubsetLimit = 12;

std::vector<int> jumps(const OrientedPoset& p) {
  int n = p.size();
  std::vector<int> j(n, -1);
  // topological sweep: minimals first
  for (int done = 0; done < n;)
    for (int v = 0; v < n; v++) {
      if (j[v] >= 0) continue;
      bool ready = true;
      int best = 0;
      for (Mask m = p.down_covers(v); m && ready; m &= m - 1) {
        int u = std::countr_zero(m);
        if (j[u] < 0)
          ready = false;
        else
          best = std::max(best, j[u] + (p.cover_kind(u, v) == EdgeKind::Strict));
      }
      if (ready) {
        j[v] = best;
        done++;
      }
    }
  return j;
}

}  // namespace

int jump(const OrientedPoset& p, int v) {
  if (v < 0 || v >= p.size()) throw poset_error(Errc::IdOutOfRange, "no such element");
  return jumps(p)[v];
}

Mask jump_zero_mask(const OrientedPoset& p) {
  std::vector<int> j = jumps(p);
  Mask m = 0;
  for (int v = 0; v < p.size(); v++)
    if (j[v] == 0) m |= Mask(1) << v;
  return m;
}

std::vector<int> jump_sequence(const OrientedPoset& p) {
  std::vector<int> j = jumps(p);
  int k = j.empty() ? -1 : *std::max_element(j.begin(), j.end());
  std::vector<int> hist(k + 1, 0);
  for (int v : j) hist[v]++;
  return hist;
}

Composition greedy_partition(const OrientedPoset& p) {
  std::vector<int> parts;
  OrientedPoset cur = p;
  while (cur.size() > 0) {
    Mask level = jump_zero_mask(cur);
    parts.push_back(std::popcount(level));
    cur = cur.induced(((Mask(1) << cur.size()) - 1) & ~level);
  }
  return Composition::of(std::move(parts));
}

int largest_weak_convex(const OrientedPoset& p) {
  int n = p.size();
  if (n > kSubsetLimit)
    throw poset_error(Errc::SizeLimitExceeded, "convex search limited to n<=12");
  std::vector<std::pair<int, int>> strict_pairs;
  for (const Cover& c : p.covers())
    if (c.kind == EdgeKind::Strict) strict_pairs.emplace_back(c.lo, c.hi);
  int best = 0;
  for (Mask s = 0; s < (Mask(1) << n); s++) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (auto [a, b] : strict_pairs)
      if (((s >> a) & 1u) && ((s >> b) & 1u)) {
        ok = false;
        break;
      }
    // convex: no outside element between two members
    for (int y = 0; y < n && ok; y++)
      if (!((s >> y) & 1u) && (p.below(y) & s) && (p.above(y) & s)) ok = false;
    if (ok) best = size;
  }
  return best;
}

int largest_strict_convex(const OrientedPoset& p) {
  return largest_weak_convex(bar(p));
}

std::vector<long long> antichain_sequence(const OrientedPoset& p) {
  int n = p.size();
  if (n > kSubsetLimit)
    throw poset_error(Errc::SizeLimitExceeded, "antichain count limited to n<=12");
  std::vector<long long> counts;
  for (Mask s = 1; s < (Mask(1) << n); s++) {
    bool anti = true;
    for (Mask m = s; m && anti; m &= m - 1)
      if (p.above(std::countr_zero(m)) & s) anti = false;
    if (!anti) continue;
    size_t size = std::popcount(s);
    if (counts.size() < size) counts.resize(size, 0);
    counts[size - 1]++;
  }
  return counts;
}

int width(const OrientedPoset& p) { return (int)antichain_sequence(p).size(); }

int max_chain_length(const OrientedPoset& p) {
  int n = p.size();
  std::vector<int> height(n, -1);
  int best = 0;
  for (int done = 0; done < n;)
    for (int v = 0; v < n; v++) {
      if (height[v] >= 0) continue;
      bool ready = true;
      int h = 1;
      for (Mask m = p.down_covers(v); m && ready; m &= m - 1) {
        int u = std::countr_zero(m);
        if (height[u] < 0)
          ready = false;
        else
          h = std::max(h, height[u] + 1);
      }
      if (ready) {
        height[v] = h;
        best = std::max(best, h);
        done++;
      }
    }
  return best;
}

InvariantProfile InvariantProfile::compute(const OrientedPoset& p) {
  InvariantProfile pr;
  pr.n = p.size();
  pr.linext_count = count_linear_extensions(p);
  pr.jump_p = jump_sequence(p);
  pr.jump_bar = jump_sequence(bar(p));
  pr.jump_star = jump_sequence(star(p));
  pr.jump_bar_star = jump_sequence(bar(star(p)));
  pr.largest_weak_convex = kpo::largest_weak_convex(p);
  pr.largest_strict_convex = kpo::largest_strict_convex(p);
  pr.max_chain_length = kpo::max_chain_length(p);
  pr.antichain_sequence = kpo::antichain_sequence(p);
  pr.width = (int)pr.antichain_sequence.size();
  pr.minimal_count = std::popcount(p.minimal_mask());
  pr.maximal_count = std::popcount(p.maximal_mask());
  pr.naturally_labeled = p.all_weak();
  return pr;
}

std::string InvariantProfile::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["linext_count"] = linext_count;
  j["jump_p"] = jump_p;
  j["jump_bar"] = jump_bar;
  j["jump_star"] = jump_star;
  j["jump_bar_star"] = jump_bar_star;
  j["largest_weak_convex"] = largest_weak_convex;
  j["largest_strict_convex"] = largest_strict_convex;
  j["max_chain_length"] = max_chain_length;
  j["width"] = width;
  j["antichain_sequence"] = antichain_sequence;
  j["minimal_count"] = minimal_count;
  j["maximal_count"] = maximal_count;
  j["naturally_labeled"] = naturally_labeled;
  return j.dump();
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["verdict"] = maybe_equal() ? "maybe_equal" : "distinguished";
  j["distinguished_by"] = distinguished_by;
  j["advisory_flags"] = advisory_flags;
  return j.dump();
}

Verdict filter_battery(const OrientedPoset& a, const OrientedPoset& b) {
  Verdict v;
  auto pa = InvariantProfile::compute(a);
  auto pb = InvariantProfile::compute(b);
  auto check = [&](bool equal, const char* name) {
    if (!equal) v.distinguished_by.push_back(name);
  };
  check(pa.n == pb.n, "size");
  check(pa.linext_count == pb.linext_count, "linext_count");
  check(pa.naturally_labeled == pb.naturally_labeled, "naturally_labeled");
  check(pa.jump_p == pb.jump_p, "jump");
  check(pa.jump_bar == pb.jump_bar, "jump_bar");
  check(pa.jump_star == pb.jump_star, "jump_star");
  check(pa.jump_bar_star == pb.jump_bar_star, "jump_bar_star");
  check(pa.largest_weak_convex == pb.largest_weak_convex, "largest_weak_convex");
  check(pa.largest_strict_convex == pb.largest_strict_convex, "largest_strict_convex");
  bool both_natural = pa.naturally_labeled && pb.naturally_labeled;
  if (both_natural) {
    // proved only in the naturally labeled case
    check(pa.width == pb.width, "width");
    check(pa.max_chain_length == pb.max_chain_length, "max_chain_length");
    check(pa.minimal_count == pb.minimal_count, "minimal_count");
    check(pa.maximal_count == pb.maximal_count, "maximal_count");
    // conjectural: advisory only, never a certificate
    if (pa.antichain_sequence != pb.antichain_sequence)
      v.advisory_flags.push_back("antichain_sequence");
  } else {
    // open question for general orientations
    if (pa.max_chain_length != pb.max_chain_length)
      v.advisory_flags.push_back("max_chain_length");
  }
  return v;
}

}  // namespace kpo
