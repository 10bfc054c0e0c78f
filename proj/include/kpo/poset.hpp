#pragma once

// poset.hpp: finite posets with strict/weak cover edges ("oriented posets").
//
// Elements are dense ids 0..n-1 and the poset is stored as its Hasse diagram,
// each cover edge carrying a kind (Weak or Strict).  A labeling, when one
// exists, is a bijection to {1..n} that increases along weak covers and
// decreases along strict covers; orientations admitting such a labeling are
// the "labeled posets", the rest are merely oriented.  Everything here is an
// immutable value; all operations are pure.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpo {

enum class EdgeKind : std::uint8_t { Weak, Strict };

struct Cover {
  int lo = 0;
  int hi = 0;
  EdgeKind kind = EdgeKind::Weak;
  friend bool operator==(const Cover&, const Cover&) = default;
  friend bool operator<(const Cover& a, const Cover& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.hi != b.hi) return a.hi < b.hi;
    return a.kind < b.kind;
  }
};

enum class Errc {
  CycleDetected,
  NotReduced,
  DuplicateEdge,
  IdOutOfRange,
  SizeLimitExceeded,
  PreconditionViolated,
  InvalidShape,
  ParseError,
  NotRealizable,
  Overflow,
};

class poset_error : public std::runtime_error {
 public:
  poset_error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Element subsets as bitmasks; element count is capped well below 32.
using Mask = std::uint32_t;

class OrientedPoset {
 public:
  OrientedPoset() = default;  // empty poset

  // Checks ids, duplicates, acyclicity and transitive reduction; covers are
  // stored sorted by (lo, hi).
  static OrientedPoset validate(int n, std::vector<Cover> covers);

  int size() const { return n_; }
  const std::vector<Cover>& covers() const { return covers_; }

  Mask up_covers(int v) const { return up_cov_[v]; }
  Mask down_covers(int v) const { return down_cov_[v]; }
  Mask above(int v) const { return above_[v]; }  // strictly above v
  Mask below(int v) const { return below_[v]; }
  bool less(int a, int b) const { return (above_[a] >> b) & 1u; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  // Kind of the cover (lo, hi); precondition: the cover exists.
  EdgeKind cover_kind(int lo, int hi) const;

  Mask minimal_mask() const;
  Mask maximal_mask() const;
  bool has_unique_minimal() const;
  bool has_unique_maximal() const;
  int unique_minimal() const;  // precondition: has_unique_minimal()
  int unique_maximal() const;

  bool all_weak() const;  // every cover Weak (naturally labeled when realizable)

  // Covers reversed as lower/upper swap, kinds preserved.
  OrientedPoset dual() const;

  // Induced subposet on the elements of `keep`, ids compacted in increasing
  // order.  Correct Hasse diagram only when `keep` is convex (in particular
  // up- or down-closed); all callers here satisfy that.
  OrientedPoset induced(Mask keep) const;

  // Relabels element ids by perm (new id of v = perm[v]).
  OrientedPoset relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const OrientedPoset& a, const OrientedPoset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  int n_ = 0;
  std::vector<Cover> covers_;
  std::vector<Mask> up_cov_, down_cov_, above_, below_;

  void build_tables();
};

struct Labeling {
  std::vector<int> labels;  // labels[v] in 1..n, bijective
};

struct LinearExtension {
  std::vector<int> word;      // label word, a permutation of 1..n
  std::vector<int> elements;  // element ids in the same visit order
};

// Builds the constraint digraph (weak covers point up, strict covers point
// down) and labels 1..n along a topological order when it is acyclic.
// Ties are broken by smallest element id, or by `priority` when given
// (smaller priority value wins).
std::optional<Labeling> realize_labeling(const OrientedPoset& p);
std::optional<Labeling> realize_labeling(const OrientedPoset& p,
                                         const std::vector<int>& priority);

bool labeling_consistent(const OrientedPoset& p, const Labeling& lab);

// All order-preserving arrangements, each exactly once, sorted
// lexicographically by label word.
std::vector<LinearExtension> linear_extensions(const OrientedPoset& p,
                                               const Labeling& lab);

// |L(P)|; label-free (the count does not depend on the labeling).
long long count_linear_extensions(const OrientedPoset& p);

// Positions i in [n-1] with word[i] > word[i+1], as a bitmask (bit i-1).
Mask descent_set(const LinearExtension& ext);

// Canonical form: a byte string equal for two oriented posets iff they are
// isomorphic preserving edge kinds.  Brute-force minimum over permutations,
// pruned by degree/jump/WL vertex partitions.  Guarded at n <= 10.
std::string canonical_form(const OrientedPoset& p);

// The relabeled poset realizing the canonical form.
OrientedPoset canonicalize(const OrientedPoset& p);

bool isomorphic(const OrientedPoset& a, const OrientedPoset& b);

// Line-oriented text format:
//   poset <n>
//   edge <a> <b> <w|s>     (one line per cover, lower id first)
// '#' starts a comment, blank lines are ignored.  A JSON alternative
// {"n":int,"covers":[[a,b,"w"|"s"],...]} is accepted on input when the first
// non-space character is '{'.  Anything failing validate() is rejected.
OrientedPoset parse_poset(const std::string& text);
std::string print_poset(const OrientedPoset& p);
std::string poset_to_json(const OrientedPoset& p);

}  // namespace kpo
