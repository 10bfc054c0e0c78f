#include "kpo/census.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kpo/kgen.hpp"
#include "kpo/transforms.hpp"

namespace kpo {

namespace {

constexpr int kCensusLimit = 7;

OrientedPoset make(int n, std::vector<Cover> cov) {
  return OrientedPoset::validate(n, std::move(cov));
}

// The three-element base equivalence (one strict, one weak edge) and the
// four-element one built on three linear extensions.
OrientedPoset base3_v() {
  return make(3, {{0, 1, EdgeKind::Strict}, {0, 2, EdgeKind::Weak}});
}
OrientedPoset base3_lam() {
  return make(3, {{0, 2, EdgeKind::Weak}, {1, 2, EdgeKind::Strict}});
}
OrientedPoset base4_a() {
  return make(4, {{0, 1, EdgeKind::Strict}, {1, 3, EdgeKind::Strict}, {0, 2, EdgeKind::Weak}});
}
OrientedPoset base4_b() {
  return make(4, {{0, 1, EdgeKind::Strict}, {1, 2, EdgeKind::Strict}, {3, 2, EdgeKind::Weak}});
}

OrientedPoset skeleton_of(const OrientedPoset& p) {
  std::vector<Cover> cov = p.covers();
  for (Cover& c : cov) c.kind = EdgeKind::Weak;
  return make(p.size(), std::move(cov));
}

}  // namespace

std::vector<OrientedPoset> enumerate_posets(int n) {
  if (n < 0 || n > kCensusLimit)
    throw poset_error(Errc::SizeLimitExceeded, "poset enumeration limited to n<=7");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++) pairs.emplace_back(i, j);
  std::vector<OrientedPoset> out;
  std::set<std::string> seen;
  for (std::uint64_t rel = 0; rel < (std::uint64_t(1) << pairs.size()); rel++) {
    Mask up[16] = {};
    for (size_t b = 0; b < pairs.size(); b++)
      if ((rel >> b) & 1u) up[pairs[b].first] |= Mask(1) << pairs[b].second;
    bool transitive = true;
    for (size_t b = 0; b < pairs.size() && transitive; b++)
      if ((rel >> b) & 1u)
        transitive = (up[pairs[b].second] & ~up[pairs[b].first]) == 0;
    if (!transitive) continue;
    std::vector<Cover> cov;
    for (auto [i, j] : pairs) {
      if (!((up[i] >> j) & 1u)) continue;
      bool is_cover = true;
      for (Mask m = up[i]; m && is_cover; m &= m - 1) {
        int k = std::countr_zero(m);
        if (k != j && ((up[k] >> j) & 1u)) is_cover = false;
      }
      if (is_cover) cov.push_back({i, j, EdgeKind::Weak});
    }
    OrientedPoset p = canonicalize(make(n, std::move(cov)));
    if (seen.insert(canonical_form(p)).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<OrientedPoset> enumerate_orientations(const OrientedPoset& skeleton) {
  size_t e = skeleton.covers().size();
  std::vector<OrientedPoset> out;
  std::set<std::string> seen;
  for (Mask bits = 0; bits < (Mask(1) << e); bits++) {
    std::vector<Cover> cov = skeleton.covers();
    for (size_t i = 0; i < e; i++)
      cov[i].kind = ((bits >> i) & 1u) ? EdgeKind::Strict : EdgeKind::Weak;
    OrientedPoset q = make(skeleton.size(), std::move(cov));
    if (!realize_labeling(q)) continue;
    q = canonicalize(q);
    if (seen.insert(canonical_form(q)).second) out.push_back(std::move(q));
  }
  return out;
}

namespace {

struct Entry {
  std::string fp;
  std::string key;
  OrientedPoset poset;
  InvariantProfile profile;
};

std::vector<Entry> census_shard(const OrientedPoset& skeleton, bool natural_only) {
  std::vector<Entry> out;
  std::vector<OrientedPoset> oriented;
  if (natural_only)
    oriented.push_back(skeleton);  // skeletons are the all-weak orientations
  else
    oriented = enumerate_orientations(skeleton);
  for (OrientedPoset& q : oriented) {
    Entry e;
    e.fp = hex(fingerprint(k_m_route(q)));
    e.key = canonical_form(q);
    e.profile = InvariantProfile::compute(q);
    e.poset = std::move(q);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<CensusRecord> run_census(int n, const CensusOptions& opts) {
  std::vector<OrientedPoset> skeletons = enumerate_posets(n);
  std::vector<std::vector<Entry>> shards(skeletons.size());
#ifdef _OPENMP
  if (opts.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
    for (long i = 0; i < (long)skeletons.size(); i++)
      shards[i] = census_shard(skeletons[i], opts.natural_only);
  } else
#endif
  {
    for (size_t i = 0; i < skeletons.size(); i++)
      shards[i] = census_shard(skeletons[i], opts.natural_only);
  }

  // Ordered reduce: grouping by fingerprint is independent of shard timing.
  std::map<std::string, CensusRecord> by_fp;
  for (auto& shard : shards)
    for (Entry& e : shard) {
      CensusRecord& r = by_fp[e.fp];
      r.fp = e.fp;
      r.n = n;
      r.members.push_back(std::move(e.poset));
      r.member_keys.push_back(e.key);
    }
  std::vector<CensusRecord> records;
  records.reserve(by_fp.size());
  for (auto& [fp, r] : by_fp) {
    std::vector<int> idx(r.members.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return r.member_keys[a] < r.member_keys[b]; });
    CensusRecord sorted;
    sorted.fp = r.fp;
    sorted.n = r.n;
    for (int i : idx) {
      sorted.members.push_back(std::move(r.members[i]));
      sorted.member_keys.push_back(std::move(r.member_keys[i]));
    }
    sorted.profile = InvariantProfile::compute(sorted.members.front());
    records.push_back(std::move(sorted));
  }
  if (opts.tag && !opts.natural_only) tag_explanations(records);
  return records;
}

std::vector<std::vector<int>> quotient_bar_star(
    const std::vector<CensusRecord>& records) {
  auto keyset = [](const std::vector<std::string>& keys) {
    std::string joined;
    for (const std::string& k : keys) joined += k + '\x01';
    return joined;
  };
  std::map<std::string, int> index;
  for (size_t i = 0; i < records.size(); i++)
    index[keyset(records[i].member_keys)] = (int)i;

  std::vector<int> parent(records.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (size_t i = 0; i < records.size(); i++) {
    for (int which = 0; which < 2; which++) {
      std::vector<std::string> keys;
      for (const OrientedPoset& m : records[i].members)
        keys.push_back(canonical_form(which == 0 ? bar(m) : star(m)));
      std::sort(keys.begin(), keys.end());
      auto it = index.find(keyset(keys));
      if (it == index.end())
        throw poset_error(Errc::PreconditionViolated,
                          "involution image of a class is not a class");
      int a = find((int)i), b = find(it->second);
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < records.size(); i++) groups[find((int)i)].push_back((int)i);
  std::vector<std::vector<int>> orbits;
  for (auto& [root, idx] : groups) orbits.push_back(idx);
  return orbits;
}

namespace {

// P = add_bottom(rest, kind)?  Requires a unique minimal whose covers are
// exactly the minimals of the remainder, uniformly kinded.
bool strip_bottom(const OrientedPoset& p, bool ignore_kinds, OrientedPoset* rest,
                  EdgeKind* kind) {
  if (p.size() < 2 || !p.has_unique_minimal()) return false;
  int v = p.unique_minimal();
  Mask ups = p.up_covers(v);
  if (ups == 0) return false;
  EdgeKind k = p.cover_kind(v, std::countr_zero(ups));
  for (Mask m = ups; m; m &= m - 1) {
    int u = std::countr_zero(m);
    if (p.down_covers(u) != (Mask(1) << v)) return false;
    if (!ignore_kinds && p.cover_kind(v, u) != k) return false;
  }
  *rest = p.induced(((Mask(1) << p.size()) - 1) & ~(Mask(1) << v));
  *kind = k;
  return true;
}

bool strip_top(const OrientedPoset& p, bool ignore_kinds, OrientedPoset* rest,
               EdgeKind* kind) {
  OrientedPoset d = p.dual();
  OrientedPoset rd;
  if (!strip_bottom(d, ignore_kinds, &rd, kind)) return false;
  *rest = rd.dual();
  return true;
}

bool chain_ext_pair_rec(const OrientedPoset& a, const OrientedPoset& b,
                        const OrientedPoset& base_a, const OrientedPoset& base_b) {
  if (a.size() != b.size()) return false;
  if ((isomorphic(a, base_a) && isomorphic(b, base_b)) ||
      (isomorphic(a, base_b) && isomorphic(b, base_a)))
    return true;
  if (a.size() <= base_a.size()) return false;
  OrientedPoset ra, rb;
  EdgeKind ka, kb;
  if (strip_bottom(a, false, &ra, &ka) && strip_bottom(b, false, &rb, &kb) &&
      ka == kb && chain_ext_pair_rec(ra, rb, base_a, base_b))
    return true;
  if (strip_top(a, false, &ra, &ka) && strip_top(b, false, &rb, &kb) && ka == kb &&
      chain_ext_pair_rec(ra, rb, base_a, base_b))
    return true;
  return false;
}

}  // namespace

bool chain_ext_of_pair(const OrientedPoset& a, const OrientedPoset& b,
                       const OrientedPoset& base_a, const OrientedPoset& base_b) {
  return chain_ext_pair_rec(a, b, base_a, base_b);
}

bool chain_ext_of_skeleton(const OrientedPoset& p, const OrientedPoset& base) {
  OrientedPoset s = skeleton_of(p);
  if (isomorphic(s, base)) return true;
  if (s.size() <= base.size()) return false;
  OrientedPoset r;
  EdgeKind k;
  if (strip_bottom(s, true, &r, &k) && chain_ext_of_skeleton(r, base)) return true;
  if (strip_top(s, true, &r, &k) && chain_ext_of_skeleton(r, base)) return true;
  return false;
}

// Rows are enumerated top-to-bottom with the top row flush left; a lower row
// may start anywhere up to the end of the row above (further offsets only
// repeat the same disconnected poset).
std::set<std::string> skew_poset_keys(int n) {
  std::set<std::string> keys;
  std::vector<std::pair<int, int>> rows;  // (inner, outer) top-to-bottom
  auto emit = [&]() {
    int k = (int)rows.size();
    std::vector<int> outer(k), inner(k);
    for (int i = 0; i < k; i++) {
      outer[i] = rows[k - 1 - i].second;
      inner[i] = rows[k - 1 - i].first;
    }
    keys.insert(canonical_form(skew_to_poset(SkewShape::of(outer, inner))));
  };
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    if (rows.empty()) {
      for (int len = 1; len <= remaining; len++) {
        rows.push_back({0, len});
        self(self, remaining - len);
        rows.pop_back();
      }
      return;
    }
    auto [pmu, plam] = rows.back();
    for (int len = 1; len <= remaining; len++)
      for (int mu = std::max(pmu, plam - len); mu <= plam; mu++) {
        rows.push_back({mu, mu + len});
        self(self, remaining - len);
        rows.pop_back();
      }
  };
  rec(rec, n);
  return keys;
}

namespace {

// All realizable oriented posets of a given size, canonicalized.
std::vector<OrientedPoset> all_oriented(int n) {
  std::vector<OrientedPoset> out;
  for (const OrientedPoset& s : enumerate_posets(n))
    for (OrientedPoset& q : enumerate_orientations(s)) out.push_back(std::move(q));
  return out;
}

// Pairs of distinct canonical keys known equal by layered compositions over
// the three-element base equivalence, per output size.
std::map<int, std::vector<std::pair<std::string, std::string>>> layered_pairs(int n) {
  std::map<int, std::vector<std::pair<OrientedPoset, OrientedPoset>>> pairs;
  pairs[3].emplace_back(base3_v(), base3_lam());
  std::map<int, std::vector<OrientedPoset>> fillers;
  for (int s = 0; s <= n - 3; s++) fillers[s] = all_oriented(s);

  for (int m = 4; m <= n; m++) {
    std::set<std::pair<std::string, std::string>> seen;
    for (auto& [bsize, base_pairs] : pairs) {
      if (bsize >= m) continue;
      int rest = m - bsize;
      for (auto& [pa, pb] : base_pairs) {
        for (int slot = 0; slot < 5; slot++) {
          // distribute `rest` elements over the other four slots
          std::vector<int> sizes(5, 0);
          auto fill = [&](auto&& self, int pos, int left) -> void {
            if (pos == 5) {
              if (left != 0) return;
              std::vector<const std::vector<OrientedPoset>*> choice(5);
              std::vector<int> pick(5, 0);
              auto build = [&](auto&& bself, int i) -> void {
                if (i == 5) {
                  const OrientedPoset* blocks_a[5];
                  const OrientedPoset* blocks_b[5];
                  static const OrientedPoset empty;
                  for (int t = 0; t < 5; t++) {
                    if (t == slot) {
                      blocks_a[t] = &pa;
                      blocks_b[t] = &pb;
                    } else if (sizes[t] == 0) {
                      blocks_a[t] = blocks_b[t] = &empty;
                    } else {
                      blocks_a[t] = blocks_b[t] = &fillers[sizes[t]][pick[t]];
                    }
                  }
                  OrientedPoset a = canonicalize(layered_compose(
                      *blocks_a[0], *blocks_a[1], *blocks_a[2], *blocks_a[3], *blocks_a[4]));
                  OrientedPoset b = canonicalize(layered_compose(
                      *blocks_b[0], *blocks_b[1], *blocks_b[2], *blocks_b[3], *blocks_b[4]));
                  std::string ka = canonical_form(a), kb = canonical_form(b);
                  if (ka == kb) return;
                  if (kb < ka) {
                    std::swap(ka, kb);
                    std::swap(a, b);
                  }
                  if (seen.insert({ka, kb}).second) pairs[m].emplace_back(a, b);
                  return;
                }
                if (i == slot || sizes[i] == 0) {
                  bself(bself, i + 1);
                  return;
                }
                for (size_t c = 0; c < fillers[sizes[i]].size(); c++) {
                  pick[i] = (int)c;
                  bself(bself, i + 1);
                }
              };
              build(build, 0);
              return;
            }
            if (pos == slot) {
              self(self, pos + 1, left);
              return;
            }
            for (int s = 0; s <= left; s++) {
              sizes[pos] = s;
              self(self, pos + 1, left - s);
            }
            sizes[pos] = 0;
          };
          fill(fill, 0, rest);
        }
      }
    }
  }
  std::map<int, std::vector<std::pair<std::string, std::string>>> out;
  for (auto& [m, ps] : pairs)
    for (auto& [a, b] : ps)
      out[m].emplace_back(canonical_form(a), canonical_form(b));
  return out;
}

}  // namespace

bool is_explanation_tag(const std::string& tag) {
  return tag == "CHAIN_EXT_S21" || tag == "CHAIN_EXT_S211" ||
         tag == "CHAIN_EXT_S211_BAR" || tag == "SKEW_MEMBERS" ||
         tag == "LAYERED_S21";
}

void tag_explanations(std::vector<CensusRecord>& records) {
  if (records.empty()) return;
  int n = records.front().n;
  std::set<std::string> skew = skew_poset_keys(n);
  auto gen = layered_pairs(n);
  const auto& gen_pairs = gen[n];

  for (CensusRecord& r : records) {
    r.tags.clear();
    std::set<std::string> keys(r.member_keys.begin(), r.member_keys.end());
    auto closed_under = [&](auto&& f) {
      std::set<std::string> image;
      for (const OrientedPoset& m : r.members) image.insert(canonical_form(f(m)));
      return image == keys;
    };
    if (r.size() == 1) r.tags.push_back("SINGLETON");
    if (r.size() == 2 && isomorphic(star(r.members[0]), r.members[1]))
      r.tags.push_back("STAR_PAIR");
    if (closed_under([](const OrientedPoset& p) { return bar(p); }))
      r.tags.push_back("BAR_CLOSED");
    if (closed_under([](const OrientedPoset& p) { return star(p); }))
      r.tags.push_back("SELF_STAR");
    if (closed_under([](const OrientedPoset& p) { return bar(star(p)); }))
      r.tags.push_back("SELF_BAR_STAR");
    if (r.size() < 2) continue;

    bool explained = false;
    auto all_pairs_ext = [&](const OrientedPoset& ba, const OrientedPoset& bb) {
      for (size_t i = 0; i < r.members.size(); i++)
        for (size_t j = i + 1; j < r.members.size(); j++)
          if (!chain_ext_of_pair(r.members[i], r.members[j], ba, bb)) return false;
      return true;
    };
    if (all_pairs_ext(base3_v(), base3_lam())) {
      r.tags.push_back("CHAIN_EXT_S21");
      explained = true;
    }
    if (all_pairs_ext(base4_a(), base4_b())) {
      r.tags.push_back("CHAIN_EXT_S211");
      explained = true;
    }
    if (all_pairs_ext(bar(base4_a()), bar(base4_b()))) {
      r.tags.push_back("CHAIN_EXT_S211_BAR");
      explained = true;
    }
    if (std::all_of(r.member_keys.begin(), r.member_keys.end(),
                    [&](const std::string& k) { return skew.count(k) > 0; })) {
      r.tags.push_back("SKEW_MEMBERS");
      explained = true;
    }
    // connected under generated layered equalities?
    {
      std::map<std::string, int> id;
      for (size_t i = 0; i < r.member_keys.size(); i++) id[r.member_keys[i]] = (int)i;
      std::vector<int> parent(r.member_keys.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (const auto& [ka, kb] : gen_pairs) {
        auto ia = id.find(ka), ib = id.find(kb);
        if (ia != id.end() && ib != id.end()) {
          int x = find(ia->second), y = find(ib->second);
          if (x != y) parent[x] = y;
        }
      }
      bool connected = true;
      for (size_t i = 1; i < parent.size(); i++)
        if (find((int)i) != find(0)) connected = false;
      if (connected) {
        r.tags.push_back("LAYERED_S21");
        explained = true;
      }
    }
    if (!explained) r.tags.push_back("UNEXPLAINED");
  }
}

ClassificationReport verify_classification(int n_max) {
  if (n_max > 6)
    throw poset_error(Errc::SizeLimitExceeded, "classification check limited to n<=6");
  ClassificationReport rep;
  rep.n_max = n_max;
  OrientedPoset antichain2 = make(2, {});
  OrientedPoset chain2plus1 = make(3, {{0, 1, EdgeKind::Weak}});

  for (int n = 1; n <= n_max; n++) {
    CensusOptions opts;
    opts.tag = false;
    auto records = run_census(n, opts);
    for (const CensusRecord& r : records) {
      std::vector<long long> counts;
      for (const OrientedPoset& m : r.members) {
        long long L = count_linear_extensions(m);
        counts.push_back(L);
        rep.posets_checked++;
        bool ext11 = chain_ext_of_skeleton(m, antichain2);
        bool ext21 = chain_ext_of_skeleton(m, chain2plus1);
        if ((L == 2) != ext11)
          rep.violations.push_back("linext-2 classification fails: " + print_poset(m));
        if ((L == 3) != ext21)
          rep.violations.push_back("linext-3 classification fails: " + print_poset(m));
      }
      if (r.size() < 2) continue;
      for (size_t i = 1; i < counts.size(); i++)
        if (counts[i] != counts[0])
          rep.violations.push_back("extension counts differ inside class " + r.fp);
      long long L = counts[0];
      if (L != 2 && L != 3) continue;
      for (size_t i = 0; i < r.members.size(); i++)
        for (size_t j = i + 1; j < r.members.size(); j++) {
          const OrientedPoset& a = r.members[i];
          const OrientedPoset& b = r.members[j];
          if (L == 2) {
            rep.pairs_l2++;
            if (!chain_ext_of_pair(a, b, base3_v(), base3_lam()))
              rep.violations.push_back("|L|=2 pair not a chain extension of the base: " +
                                       r.fp);
          } else {
            rep.pairs_l3++;
            if (!chain_ext_of_pair(a, b, base4_a(), base4_b()) &&
                !chain_ext_of_pair(a, b, bar(base4_a()), bar(base4_b())))
              rep.violations.push_back("|L|=3 pair not a chain extension of a base: " +
                                       r.fp);
          }
          if (n >= 5) {
            bool mins = a.has_unique_minimal() && b.has_unique_minimal();
            bool maxs = a.has_unique_maximal() && b.has_unique_maximal();
            if (!mins && !maxs)
              rep.violations.push_back("extremum condition fails for pair in " + r.fp);
          }
        }
    }
  }
  return rep;
}

std::string ClassificationReport::to_string() const {
  std::ostringstream out;
  out << "classification check up to n=" << n_max << ": " << posets_checked
      << " posets, " << pairs_l2 << " two-extension pairs, " << pairs_l3
      << " three-extension pairs, " << violations.size() << " violations\n";
  for (const std::string& v : violations) out << "  VIOLATION: " << v << "\n";
  return out.str();
}

std::string census_to_jsonl(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  for (const CensusRecord& r : records) {
    nlohmann::json j;
    j["fp"] = r.fp;
    j["n"] = r.n;
    auto members = nlohmann::json::array();
    for (const OrientedPoset& m : r.members) members.push_back(print_poset(m));
    j["members"] = members;
    j["size"] = r.size();
    j["profile"] = nlohmann::json::parse(r.profile.to_json());
    j["tags"] = r.tags;
    out << j.dump() << "\n";
  }
  return out.str();
}

EqualityCounts equality_counts(const std::vector<CensusRecord>& records) {
  EqualityCounts ec;
  if (records.empty()) return ec;
  int n = records.front().n;
  std::set<std::string> skew = skew_poset_keys(n);

  auto orbits = quotient_bar_star(records);
  for (const auto& orbit : orbits) {
    bool has_nontrivial = false, all_skew = true;
    for (int i : orbit) {
      const CensusRecord& r = records[i];
      if (r.size() < 2) continue;
      has_nontrivial = true;
      ec.nontrivial_classes++;
      for (const std::string& k : r.member_keys)
        if (!skew.count(k)) all_skew = false;
    }
    if (!has_nontrivial) continue;
    ec.nontrivial_orbits++;
    if (!all_skew) ec.nontrivial_orbits_nonskew++;
  }

  // Unordered member pairs, then the bar/star action on pairs.  A pair of
  // two skew posets is a skew-function equality and is discounted in the
  // nonskew reading.
  std::map<std::pair<std::string, std::string>, int> pair_id;
  std::vector<std::pair<std::string, std::string>> pair_list;
  std::vector<bool> pair_skew;
  for (const CensusRecord& r : records)
    for (size_t i = 0; i < r.member_keys.size(); i++)
      for (size_t j = i + 1; j < r.member_keys.size(); j++) {
        std::string lo = r.member_keys[i], hi = r.member_keys[j];
        if (hi < lo) std::swap(lo, hi);
        pair_id[{lo, hi}] = (int)pair_list.size();
        pair_list.push_back({lo, hi});
        pair_skew.push_back(skew.count(lo) && skew.count(hi));
      }
  ec.member_pairs = (long long)pair_list.size();
  for (bool s : pair_skew)
    if (!s) ec.member_pairs_nonskew++;

  std::map<std::string, const OrientedPoset*> by_key;
  for (const CensusRecord& r : records)
    for (size_t i = 0; i < r.members.size(); i++)
      by_key[r.member_keys[i]] = &r.members[i];
  std::vector<int> parent(pair_list.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (size_t i = 0; i < pair_list.size(); i++) {
    for (int which = 0; which < 2; which++) {
      auto image = [&](const std::string& k) {
        const OrientedPoset& p = *by_key.at(k);
        return canonical_form(which == 0 ? bar(p) : star(p));
      };
      std::string lo = image(pair_list[i].first), hi = image(pair_list[i].second);
      if (hi < lo) std::swap(lo, hi);
      auto it = pair_id.find({lo, hi});
      if (it == pair_id.end())
        throw poset_error(Errc::PreconditionViolated,
                          "involution image of a pair is not a census pair");
      int a = find((int)i), b = find(it->second);
      if (a != b) parent[a] = b;
    }
  }
  std::set<int> roots, roots_nonskew;
  for (size_t i = 0; i < pair_list.size(); i++) {
    roots.insert(find((int)i));
    if (!pair_skew[i]) roots_nonskew.insert(find((int)i));
  }
  ec.pair_classes_up_to_bar_star = (long long)roots.size();
  ec.pair_classes_up_to_bar_star_nonskew = (long long)roots_nonskew.size();
  return ec;
}

std::string census_summary(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  if (records.empty()) return "empty census\n";
  int n = records.front().n;
  size_t posets = 0, nontrivial = 0;
  std::map<std::string, int> tag_counts;
  for (const CensusRecord& r : records) {
    posets += r.size();
    if (r.size() >= 2) nontrivial++;
    for (const std::string& t : r.tags) tag_counts[t]++;
  }
  out << "census n=" << n << ": " << posets << " labeled posets up to isomorphism, "
      << records.size() << " generating-function classes, " << nontrivial
      << " of size >= 2\n";
  bool tagged = std::any_of(records.begin(), records.end(),
                            [](const CensusRecord& r) { return !r.tags.empty(); });
  if (tagged) {
    EqualityCounts ec = equality_counts(records);
    out << "equality counts under the different readings:\n"
        << "  nontrivial classes: " << ec.nontrivial_classes << "\n"
        << "  bar/star orbits of nontrivial classes: " << ec.nontrivial_orbits
        << " (with a non-skew class: " << ec.nontrivial_orbits_nonskew << ")\n"
        << "  member pairs: " << ec.member_pairs
        << " (both-skew pairs discounted: " << ec.member_pairs_nonskew << ")\n"
        << "  pair classes up to bar/star: " << ec.pair_classes_up_to_bar_star
        << " (both-skew pairs discounted: "
        << ec.pair_classes_up_to_bar_star_nonskew << ")\n";
    size_t unexplained = 0;
    for (const CensusRecord& r : records)
      if (std::count(r.tags.begin(), r.tags.end(), "UNEXPLAINED")) unexplained++;
    out << "records with no explanation tag: " << unexplained << "\n";
    out << "tags:";
    for (auto& [t, c] : tag_counts) out << " " << t << "=" << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace kpo
