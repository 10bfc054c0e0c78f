#pragma once

// Shared fixtures for the test suites: the small posets that anchor the
// known generating-function equalities, plus a brute-force monomial oracle
// that expands quasisymmetric functions in finitely many variables.  The
// oracle is independent of the library's M-route/F-route code paths on
// purpose; tests freeze values computed through it.

#include <map>
#include <vector>

#include "kpo/kgen.hpp"
#include "kpo/poset.hpp"
#include "kpo/qsym.hpp"

namespace fx {

using kpo::Cover;
using kpo::EdgeKind;
using kpo::OrientedPoset;

inline OrientedPoset make(int n, std::vector<Cover> covers) {
  return OrientedPoset::validate(n, std::move(covers));
}

constexpr EdgeKind W = EdgeKind::Weak;
constexpr EdgeKind S = EdgeKind::Strict;

// The smallest nontrivially equal pair: the posets of the skew shapes 21 and
// 22/1 (a vee with one strict arm, and its 180-degree rotation).
inline OrientedPoset s21_v() { return make(3, {{0, 1, S}, {0, 2, W}}); }
inline OrientedPoset s21_lam() { return make(3, {{0, 2, W}, {1, 2, S}}); }

// The four-element equal pair with three linear extensions (skew shapes 211
// and 222/11).
inline OrientedPoset s211_a() {
  return make(4, {{0, 1, S}, {1, 3, S}, {0, 2, W}});
}
inline OrientedPoset s211_b() {
  return make(4, {{0, 1, S}, {1, 2, S}, {3, 2, W}});
}

// The four five-element equal pairs that the explanation battery leaves
// unexplained.  Pair 2 is a poset together with its star image.
inline OrientedPoset u5_1a() {
  return make(5, {{0, 2, W}, {0, 3, W}, {1, 2, W}, {1, 3, S}, {3, 4, W}});
}
inline OrientedPoset u5_1b() {
  return make(5, {{0, 1, S}, {0, 2, W}, {1, 3, W}, {2, 4, W}});
}
inline OrientedPoset u5_2b() {
  return make(5, {{0, 3, S}, {1, 3, W}, {2, 3, S}, {0, 4, S}, {1, 4, W}, {2, 4, W}});
}
inline OrientedPoset u5_3a() {
  return make(5, {{0, 2, S}, {0, 3, W}, {1, 2, W}, {1, 4, S}, {3, 4, S}});
}
inline OrientedPoset u5_3b() {
  return make(5, {{0, 2, W}, {0, 3, W}, {1, 2, S}, {1, 4, W}, {3, 4, S}});
}
inline OrientedPoset u5_4a() {
  return make(5, {{0, 2, W}, {1, 2, S}, {1, 3, S}, {2, 4, W}, {3, 4, S}});
}
inline OrientedPoset u5_4b() {
  return make(5, {{0, 1, S}, {0, 2, W}, {1, 3, S}, {1, 4, W}, {2, 4, W}});
}

// Five-element pair built by hanging the three-element pair above a
// two-element antichain (one weak connector, one strict); its class has a
// third member, the star image of the second poset.
inline OrientedPoset trio5_a() {
  return make(5, {{0, 2, W}, {1, 2, S}, {2, 3, S}, {2, 4, W}});
}
inline OrientedPoset trio5_b() {
  return make(5, {{0, 2, W}, {0, 3, W}, {1, 2, S}, {1, 3, S}, {2, 4, W}, {3, 4, S}});
}

// Six-element chain extension of the three-element pair: bottom weak, top
// weak, then top strict.
inline OrientedPoset chx6_a() {
  return make(6, {{0, 1, W}, {1, 2, S}, {1, 3, W}, {2, 4, W}, {3, 4, W}, {4, 5, S}});
}
inline OrientedPoset chx6_b() {
  return make(6, {{0, 1, W}, {0, 2, W}, {1, 3, W}, {2, 3, S}, {3, 4, W}, {4, 5, S}});
}

// Naturally labeled seven-element equal pair sharing antichain sequence
// (7, 11, 3).
inline OrientedPoset nat7_a() {
  return make(7, {{0, 2, W}, {0, 3, W}, {0, 6, W}, {1, 4, W}, {1, 5, W},
                  {2, 5, W}, {3, 5, W}, {4, 6, W}});
}
inline OrientedPoset nat7_b() {
  return make(7, {{0, 2, W}, {0, 4, W}, {1, 3, W}, {1, 6, W}, {2, 5, W},
                  {3, 5, W}, {4, 6, W}});
}

// Two naturally labeled five-element fences: every necessary-condition
// invariant agrees, yet the generating functions differ (in the coefficient
// of M_{(3,2)}).
inline OrientedPoset fence5_a() {
  return make(5, {{0, 2, W}, {2, 4, W}, {1, 4, W}, {1, 3, W}});
}
inline OrientedPoset fence5_b() {
  return make(5, {{0, 2, W}, {2, 4, W}, {0, 3, W}, {1, 3, W}});
}

// Four-element orientation with crossing weak/strict diagonals; acyclic as a
// poset but not realizable by any labeling.
inline OrientedPoset crossed4() {
  return make(4, {{0, 2, S}, {0, 3, W}, {1, 2, W}, {1, 3, S}});
}

// Nine-cell ribbon shapes with equal skew Schur functions but poset widths
// 4 and 5.
inline const char* ribbon9_a = "54221/311";
inline const char* ribbon9_b = "54431/332";

// The eight-element poset of the skew shape 443/21, written out cell by cell
// (row chains weak, column chains strict).
inline OrientedPoset skew8_explicit() {
  return make(8, {{0, 1, W}, {1, 2, W}, {3, 4, W}, {4, 6, W}, {5, 7, W},
                  {3, 1, S}, {5, 4, S}, {4, 2, S}, {7, 6, S}});
}

// --- brute-force monomial oracle ------------------------------------------

// Polynomial in k variables: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, long long>;

// M_alpha truncated to variables x_1..x_k.
inline Poly expand_m(const std::vector<int>& parts, int k) {
  Poly out;
  std::vector<int> pos;
  auto rec = [&](auto&& self, int next) -> void {
    if (pos.size() == parts.size()) {
      std::vector<int> exps(k, 0);
      for (size_t i = 0; i < parts.size(); i++) exps[pos[i]] = parts[i];
      out[exps]++;
      return;
    }
    for (int v = next; v < k; v++) {
      pos.push_back(v);
      self(self, v + 1);
      pos.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); i++) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly expand_qsym(const kpo::QSymPoly& q, int k) {
  Poly out;
  for (auto& [comp, c] : q)
    for (auto& [e, cc] : expand_m(comp, k)) out[e] += c * cc;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly expand_mexp(const kpo::MExpansion& m, int k) {
  kpo::QSymPoly q;
  for (kpo::Mask s = 0; s < kpo::mexp_size(m.n); s++)
    if (m.coeffs[s] != 0)
      q[kpo::composition_of({m.n, s}).parts] = m.coeffs[s];
  return expand_qsym(q, k);
}

// Histogram polynomial straight from the definition: one monomial per
// bounded partition of the poset.
inline Poly partition_poly(const OrientedPoset& p, int max_part) {
  Poly out;
  for (const kpo::PPartition& f : kpo::enumerate_p_partitions(p, max_part)) {
    std::vector<int> exps(max_part, 0);
    for (int v : f.values) exps[v - 1]++;
    out[exps]++;
  }
  return out;
}

}  // namespace fx
