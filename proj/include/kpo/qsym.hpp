#pragma once

// qsym.hpp: compositions, subset encodings and the monomial/fundamental
// quasisymmetric bases, enough of the algebra to compare generating
// functions: F-to-M base change, the quasi-shuffle product, and a canonical
// fingerprint on M-expansions.
//
// A composition alpha of n corresponds to the subset S(alpha) of [n-1] of its
// partial sums; subsets are stored as bitmasks (bit i-1 <=> i in S).  An
// M-expansion is the full coefficient vector over the 2^(n-1) compositions of
// n, indexed by subset bitmask ascending; it is the equality fingerprint for
// generating functions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kpo/poset.hpp"

namespace kpo {

struct Composition {
  std::vector<int> parts;  // all parts >= 1

  static Composition of(std::vector<int> parts);  // validates
  int degree() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts < b.parts;
  }
};

struct SubsetRep {
  int n = 0;
  Mask bits = 0;  // subset of [n-1], bits < 2^(n-1)
  friend bool operator==(const SubsetRep&, const SubsetRep&) = default;
};

SubsetRep subset_of(const Composition& alpha);
Composition composition_of(SubsetRep s);

// Multiset of descent sets with the degree attached.
struct FExpansion {
  int n = 0;
  std::map<Mask, long long> mult;
  long long total() const;
};

struct MExpansion {
  int n = 0;
  std::vector<long long> coeffs;  // size 2^(n-1) (size 1 when n = 0)

  static MExpansion zero(int n);
  long long coeff(const Composition& alpha) const;
  friend bool operator==(const MExpansion&, const MExpansion&) = default;
};

// Number of subset indices for degree n.
inline std::size_t mexp_size(int n) { return n == 0 ? 1u : (std::size_t(1) << (n - 1)); }

// F_{S,n} = sum over supersets T of S of M_{T,n}, extended linearly.
MExpansion f_to_m(const FExpansion& f);

// Finitely supported integer combination of compositions of mixed degrees.
using QSymPoly = std::map<std::vector<int>, long long>;

// Quasi-shuffle (overlapping shuffle) of two compositions.
QSymPoly quasi_shuffle(const std::vector<int>& a, const std::vector<int>& b);
// Bilinear extension to M-expansions.
QSymPoly quasi_shuffle(const MExpansion& a, const MExpansion& b);

// Collapses a homogeneous QSymPoly of degree n into an M-expansion.
MExpansion mexp_of_qsym(const QSymPoly& q, int n);

bool mexp_equal(const MExpansion& a, const MExpansion& b);

// Degree byte followed by the coefficient vector, serialized little-endian.
std::string fingerprint(const MExpansion& m);
std::string hex(const std::string& bytes);

// {"n":3,"basis":"M","coeffs":{"111":2,"12":1,"21":1}}; F analogous with
// subset keys like "S{1}".
std::string mexp_to_json(const MExpansion& m);
std::string fexp_to_json(const FExpansion& f);

std::string composition_key(const std::vector<int>& parts);
std::string subset_key(Mask bits, int n);

long long checked_add(long long a, long long b);

}  // namespace kpo
