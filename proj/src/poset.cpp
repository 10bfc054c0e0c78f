#include "kpo/poset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace kpo {

namespace {

constexpr int kCanonicalLimit = 10;

std::vector<int> topo_order(int n, const std::vector<std::pair<int, int>>& arcs,
                            const std::vector<int>& priority) {
  // Kahn with a priority tie-break; empty result means a cycle.
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    indeg[b]++;
  }
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> ready(n, 0);
  for (int step = 0; step < n; step++) {
    int pick = -1;
    for (int v = 0; v < n; v++) {
      if (indeg[v] == 0 && !ready[v] &&
          (pick < 0 || priority[v] < priority[pick] ||
           (priority[v] == priority[pick] && v < pick)))
        pick = v;
    }
    if (pick < 0) return {};
    ready[pick] = 1;
    order.push_back(pick);
    for (int w : out[pick]) indeg[w]--;
  }
  return order;
}

}  // namespace

void OrientedPoset::build_tables() {
  up_cov_.assign(n_, 0);
  down_cov_.assign(n_, 0);
  above_.assign(n_, 0);
  below_.assign(n_, 0);
  for (const Cover& c : covers_) {
    up_cov_[c.lo] |= Mask(1) << c.hi;
    down_cov_[c.hi] |= Mask(1) << c.lo;
  }
  // Closure along a topological order of the cover digraph.
  std::vector<std::pair<int, int>> arcs;
  for (const Cover& c : covers_) arcs.emplace_back(c.lo, c.hi);
  std::vector<int> prio(n_, 0);
  std::vector<int> order = topo_order(n_, arcs, prio);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    Mask up = up_cov_[v];
    Mask acc = up;
    for (Mask m = up; m; m &= m - 1) acc |= above_[std::countr_zero(m)];
    above_[v] = acc;
  }
  for (int v = 0; v < n_; v++)
    for (Mask m = above_[v]; m; m &= m - 1) below_[std::countr_zero(m)] |= Mask(1) << v;
}

OrientedPoset OrientedPoset::validate(int n, std::vector<Cover> covers) {
  if (n < 0 || n > 30)
    throw poset_error(Errc::SizeLimitExceeded, "element count out of range");
  std::sort(covers.begin(), covers.end());
  for (size_t i = 0; i < covers.size(); i++) {
    const Cover& c = covers[i];
    if (c.lo < 0 || c.lo >= n || c.hi < 0 || c.hi >= n)
      throw poset_error(Errc::IdOutOfRange, "cover id out of range");
    if (c.lo == c.hi)
      throw poset_error(Errc::DuplicateEdge, "self loop");
    if (i > 0 && covers[i - 1].lo == c.lo && covers[i - 1].hi == c.hi)
      throw poset_error(Errc::DuplicateEdge, "duplicate cover");
  }
  std::vector<std::pair<int, int>> arcs;
  for (const Cover& c : covers) arcs.emplace_back(c.lo, c.hi);
  std::vector<int> prio(n, 0);
  if (topo_order(n, arcs, prio).empty() && n > 0)
    throw poset_error(Errc::CycleDetected, "cover digraph has a cycle");

  OrientedPoset p;
  p.n_ = n;
  p.covers_ = std::move(covers);
  p.build_tables();
  // A cover (a,b) is redundant when some other cover (a,c) already puts b
  // above c.
  for (const Cover& c : p.covers_) {
    for (Mask m = p.up_cov_[c.lo] & ~(Mask(1) << c.hi); m; m &= m - 1) {
      int mid = std::countr_zero(m);
      if ((p.above_[mid] >> c.hi) & 1u)
        throw poset_error(Errc::NotReduced, "cover implied by a chain");
    }
  }
  return p;
}

EdgeKind OrientedPoset::cover_kind(int lo, int hi) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(),
                             Cover{lo, hi, EdgeKind::Weak});
  return it->kind;
}

Mask OrientedPoset::minimal_mask() const {
  Mask m = 0;
  for (int v = 0; v < n_; v++)
    if (down_cov_[v] == 0) m |= Mask(1) << v;
  return m;
}

Mask OrientedPoset::maximal_mask() const {
  Mask m = 0;
  for (int v = 0; v < n_; v++)
    if (up_cov_[v] == 0) m |= Mask(1) << v;
  return m;
}

bool OrientedPoset::has_unique_minimal() const {
  return std::popcount(minimal_mask()) == 1;
}

bool OrientedPoset::has_unique_maximal() const {
  return std::popcount(maximal_mask()) == 1;
}

int OrientedPoset::unique_minimal() const { return std::countr_zero(minimal_mask()); }

int OrientedPoset::unique_maximal() const { return std::countr_zero(maximal_mask()); }

bool OrientedPoset::all_weak() const {
  return std::all_of(covers_.begin(), covers_.end(),
                     [](const Cover& c) { return c.kind == EdgeKind::Weak; });
}

OrientedPoset OrientedPoset::dual() const {
  std::vector<Cover> rev;
  rev.reserve(covers_.size());
  for (const Cover& c : covers_) rev.push_back({c.hi, c.lo, c.kind});
  return validate(n_, std::move(rev));
}

OrientedPoset OrientedPoset::induced(Mask keep) const {
  std::vector<int> newid(n_, -1);
  int m = 0;
  for (int v = 0; v < n_; v++)
    if ((keep >> v) & 1u) newid[v] = m++;
  std::vector<Cover> cov;
  for (const Cover& c : covers_)
    if (newid[c.lo] >= 0 && newid[c.hi] >= 0)
      cov.push_back({newid[c.lo], newid[c.hi], c.kind});
  return validate(m, std::move(cov));
}

OrientedPoset OrientedPoset::relabeled(const std::vector<int>& perm) const {
  std::vector<Cover> cov;
  cov.reserve(covers_.size());
  for (const Cover& c : covers_) cov.push_back({perm[c.lo], perm[c.hi], c.kind});
  return validate(n_, std::move(cov));
}

std::optional<Labeling> realize_labeling(const OrientedPoset& p) {
  std::vector<int> prio(p.size(), 0);
  return realize_labeling(p, prio);
}

std::optional<Labeling> realize_labeling(const OrientedPoset& p,
                                         const std::vector<int>& priority) {
  std::vector<std::pair<int, int>> arcs;
  for (const Cover& c : p.covers()) {
    if (c.kind == EdgeKind::Weak)
      arcs.emplace_back(c.lo, c.hi);
    else
      arcs.emplace_back(c.hi, c.lo);
  }
  std::vector<int> order = topo_order(p.size(), arcs, priority);
  if (p.size() > 0 && order.empty()) return std::nullopt;
  Labeling lab;
  lab.labels.assign(p.size(), 0);
  for (int i = 0; i < p.size(); i++) lab.labels[order[i]] = i + 1;
  return lab;
}

bool labeling_consistent(const OrientedPoset& p, const Labeling& lab) {
  if ((int)lab.labels.size() != p.size()) return false;
  std::vector<char> seen(p.size() + 1, 0);
  for (int l : lab.labels) {
    if (l < 1 || l > p.size() || seen[l]) return false;
    seen[l] = 1;
  }
  for (const Cover& c : p.covers()) {
    bool increasing = lab.labels[c.lo] < lab.labels[c.hi];
    if (increasing != (c.kind == EdgeKind::Weak)) return false;
  }
  return true;
}

namespace {

void extend_rec(const OrientedPoset& p, const Labeling& lab, Mask used,
                std::vector<int>& elems, std::vector<LinearExtension>& out) {
  int n = p.size();
  if ((int)elems.size() == n) {
    LinearExtension ext;
    ext.elements = elems;
    ext.word.reserve(n);
    for (int v : elems) ext.word.push_back(lab.labels[v]);
    out.push_back(std::move(ext));
    return;
  }
  // Visiting available elements in increasing label order yields extensions
  // sorted by label word.
  std::vector<std::pair<int, int>> avail;
  for (int v = 0; v < n; v++) {
    if ((used >> v) & 1u) continue;
    if ((p.below(v) & ~used) != 0) continue;
    avail.emplace_back(lab.labels[v], v);
  }
  std::sort(avail.begin(), avail.end());
  for (auto [l, v] : avail) {
    elems.push_back(v);
    extend_rec(p, lab, used | (Mask(1) << v), elems, out);
    elems.pop_back();
  }
}

}  // namespace

std::vector<LinearExtension> linear_extensions(const OrientedPoset& p,
                                               const Labeling& lab) {
  std::vector<LinearExtension> out;
  std::vector<int> elems;
  extend_rec(p, lab, 0, elems, out);
  return out;
}

long long count_linear_extensions(const OrientedPoset& p) {
  int n = p.size();
  if (n == 0) return 1;
  std::unordered_map<Mask, long long> memo;
  memo.reserve(1u << n);
  // count(mask) = extensions of the induced subposet on mask, removing one
  // minimal element at a time.
  std::vector<Mask> stack;
  auto count = [&](auto&& self, Mask mask) -> long long {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (Mask m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if ((p.below(v) & mask) == 0) total += self(self, mask & ~(Mask(1) << v));
    }
    memo[mask] = total;
    return total;
  };
  return count(count, (Mask(1) << n) - 1);
}

Mask descent_set(const LinearExtension& ext) {
  Mask d = 0;
  for (size_t i = 0; i + 1 < ext.word.size(); i++)
    if (ext.word[i] > ext.word[i + 1]) d |= Mask(1) << i;
  return d;
}

namespace {

// Vertex colors for isomorphism pruning: degree split by kind and direction,
// closure sizes, jump, then WL-style refinement against neighbor colors.
std::vector<int> vertex_classes(const OrientedPoset& p) {
  int n = p.size();
  std::vector<int> jump_up(n, 0), jump_dn(n, 0);
  // jump from below (max strict edges on a saturated chain down) and its dual
  std::vector<std::pair<int, int>> arcs;
  for (const Cover& c : p.covers()) arcs.emplace_back(c.lo, c.hi);
  std::vector<int> prio(n, 0);
  auto order = topo_order(n, arcs, prio);
  for (int v : order)
    for (Mask m = p.down_covers(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      int s = p.cover_kind(u, v) == EdgeKind::Strict ? 1 : 0;
      jump_up[v] = std::max(jump_up[v], jump_up[u] + s);
    }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (Mask m = p.up_covers(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      int s = p.cover_kind(v, u) == EdgeKind::Strict ? 1 : 0;
      jump_dn[v] = std::max(jump_dn[v], jump_dn[u] + s);
    }
  }
  std::vector<std::vector<int>> color(n);
  for (int v = 0; v < n; v++) {
    int dw = 0, ds = 0, uw = 0, us = 0;
    for (Mask m = p.down_covers(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      (p.cover_kind(u, v) == EdgeKind::Weak ? dw : ds)++;
    }
    for (Mask m = p.up_covers(v); m; m &= m - 1) {
      int u = std::countr_zero(m);
      (p.cover_kind(v, u) == EdgeKind::Weak ? uw : us)++;
    }
    color[v] = {dw, ds, uw, us, std::popcount(p.below(v)),
                std::popcount(p.above(v)), jump_up[v], jump_dn[v]};
  }
  std::vector<int> cls(n, 0);
  for (int round = 0; round <= n; round++) {
    std::map<std::vector<int>, int> dense;
    for (int v = 0; v < n; v++) dense.emplace(color[v], 0);
    int k = 0;
    for (auto& [key, id] : dense) id = k++;
    std::vector<int> next_cls(n);
    for (int v = 0; v < n; v++) next_cls[v] = dense[color[v]];
    if (next_cls == cls) break;
    cls = next_cls;
    for (int v = 0; v < n; v++) {
      std::vector<int> up, dn;
      for (Mask m = p.up_covers(v); m; m &= m - 1) {
        int u = std::countr_zero(m);
        up.push_back(cls[u] * 2 + (p.cover_kind(v, u) == EdgeKind::Strict));
      }
      for (Mask m = p.down_covers(v); m; m &= m - 1) {
        int u = std::countr_zero(m);
        dn.push_back(cls[u] * 2 + (p.cover_kind(u, v) == EdgeKind::Strict));
      }
      std::sort(up.begin(), up.end());
      std::sort(dn.begin(), dn.end());
      std::vector<int> c = {cls[v], (int)up.size()};
      c.insert(c.end(), up.begin(), up.end());
      c.push_back(-1);
      c.insert(c.end(), dn.begin(), dn.end());
      color[v] = std::move(c);
    }
  }
  return cls;
}

std::string encode_key(const OrientedPoset& p, const std::vector<int>& perm) {
  std::vector<Cover> cov;
  cov.reserve(p.covers().size());
  for (const Cover& c : p.covers()) {
    Cover d{perm[c.lo], perm[c.hi], c.kind};
    cov.push_back(d);
  }
  std::sort(cov.begin(), cov.end());
  std::string key;
  key.reserve(2 + 3 * cov.size());
  key.push_back((char)p.size());
  key.push_back((char)cov.size());
  for (const Cover& c : cov) {
    key.push_back((char)c.lo);
    key.push_back((char)c.hi);
    key.push_back((char)(c.kind == EdgeKind::Strict));
  }
  return key;
}

struct CanonSearch {
  const OrientedPoset& p;
  std::vector<std::vector<int>> groups;  // vertices grouped by class, class order fixed
  std::vector<int> perm;
  std::string best;
  std::vector<int> best_perm;

  void run() {
    int next = 0;
    assign(0, next);
  }
  void assign(size_t g, int next) {
    if (g == groups.size()) {
      std::string key = encode_key(p, perm);
      if (best.empty() || key < best) {
        best = key;
        best_perm = perm;
      }
      return;
    }
    std::vector<int> vs = groups[g];
    std::sort(vs.begin(), vs.end());
    do {
      for (size_t i = 0; i < vs.size(); i++) perm[vs[i]] = next + (int)i;
      assign(g + 1, next + (int)vs.size());
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
};

std::pair<std::string, std::vector<int>> canonical_search(const OrientedPoset& p) {
  if (p.size() > kCanonicalLimit)
    throw poset_error(Errc::SizeLimitExceeded, "canonical form limited to n<=10");
  int n = p.size();
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  if (p.covers().empty())  // antichain: every permutation gives the same key
    return {encode_key(p, ident), ident};
  std::vector<int> cls = vertex_classes(p);
  int k = *std::max_element(cls.begin(), cls.end()) + 1;
  CanonSearch s{p, std::vector<std::vector<int>>(k), ident, {}, {}};
  for (int v = 0; v < n; v++) s.groups[cls[v]].push_back(v);
  s.run();
  return {s.best, s.best_perm};
}

}  // namespace

std::string canonical_form(const OrientedPoset& p) {
  return canonical_search(p).first;
}

OrientedPoset canonicalize(const OrientedPoset& p) {
  return p.relabeled(canonical_search(p).second);
}

bool isomorphic(const OrientedPoset& a, const OrientedPoset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  return canonical_form(a) == canonical_form(b);
}

OrientedPoset parse_poset(const std::string& text) {
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw poset_error(Errc::ParseError, e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw poset_error(Errc::ParseError, "missing \"n\"");
    std::vector<Cover> covers;
    for (const auto& e : j.value("covers", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_string())
        throw poset_error(Errc::ParseError, "bad cover entry");
      std::string k = e[2].get<std::string>();
      if (k != "w" && k != "s") throw poset_error(Errc::ParseError, "bad edge kind");
      covers.push_back({e[0].get<int>(), e[1].get<int>(),
                        k == "w" ? EdgeKind::Weak : EdgeKind::Strict});
    }
    return OrientedPoset::validate(j["n"].get<int>(), std::move(covers));
  }

  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Cover> covers;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "poset") {
      if (n >= 0 || !(ls >> n) || n < 0)
        throw poset_error(Errc::ParseError, "bad poset header, line " + std::to_string(lineno));
    } else if (tok == "edge") {
      int a, b;
      std::string k;
      if (n < 0 || !(ls >> a >> b >> k) || (k != "w" && k != "s"))
        throw poset_error(Errc::ParseError, "bad edge line " + std::to_string(lineno));
      covers.push_back({a, b, k == "w" ? EdgeKind::Weak : EdgeKind::Strict});
    } else {
      throw poset_error(Errc::ParseError, "unknown directive '" + tok + "'");
    }
    std::string rest;
    if (ls >> rest) throw poset_error(Errc::ParseError, "trailing tokens, line " + std::to_string(lineno));
  }
  if (n < 0) throw poset_error(Errc::ParseError, "missing poset header");
  return OrientedPoset::validate(n, std::move(covers));
}

std::string print_poset(const OrientedPoset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << "\n";
  for (const Cover& c : p.covers())
    out << "edge " << c.lo << " " << c.hi << " "
        << (c.kind == EdgeKind::Weak ? "w" : "s") << "\n";
  return out.str();
}

std::string poset_to_json(const OrientedPoset& p) {
  nlohmann::json j;
  j["n"] = p.size();
  auto covers = nlohmann::json::array();
  for (const Cover& c : p.covers())
    covers.push_back({c.lo, c.hi, c.kind == EdgeKind::Weak ? "w" : "s"});
  j["covers"] = covers;
  return j.dump();
}

}  // namespace kpo
