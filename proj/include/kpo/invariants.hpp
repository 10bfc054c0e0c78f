#pragma once

// invariants.hpp: the necessary-condition invariants for generating-function
// equality and the filter battery built from them.  Everything here is a pure
// function of the oriented poset; the battery never certifies equality, only
// a sound "distinguished" verdict or "maybe equal".

#include <string>
#include <vector>

#include "kpo/poset.hpp"
#include "kpo/qsym.hpp"

namespace kpo {

// Maximum number of strict edges on a saturated chain from v down to a
// minimal element.
int jump(const OrientedPoset& p, int v);

// Elements of jump 0 (the maximum order ideal with weak-only internal covers).
Mask jump_zero_mask(const OrientedPoset& p);

// Histogram (j_0, ..., j_k) of jump values.
std::vector<int> jump_sequence(const OrientedPoset& p);

// Level sizes of the greedy (lexicographically greatest) partition; agrees
// with jump_sequence by construction, computed independently by stripping.
Composition greedy_partition(const OrientedPoset& p);

// Largest convex subposet all of whose induced covers are weak (resp.
// strict).  Subset enumeration; guarded at n <= 12.
int largest_weak_convex(const OrientedPoset& p);
int largest_strict_convex(const OrientedPoset& p);

// a_i = number of antichains of size i, for i = 1..width.  Guarded at n <= 12.
std::vector<long long> antichain_sequence(const OrientedPoset& p);
int width(const OrientedPoset& p);

// Number of elements in a longest chain.
int max_chain_length(const OrientedPoset& p);

struct InvariantProfile {
  int n = 0;
  long long linext_count = 0;
  std::vector<int> jump_p, jump_bar, jump_star, jump_bar_star;
  int largest_weak_convex = 0;
  int largest_strict_convex = 0;
  int max_chain_length = 0;
  int width = 0;
  std::vector<long long> antichain_sequence;
  int minimal_count = 0;
  int maximal_count = 0;
  bool naturally_labeled = false;

  static InvariantProfile compute(const OrientedPoset& p);
  std::string to_json() const;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

// DistinguishedBy(names) is a sound certificate that the generating functions
// differ; advisory disagreements (open-question invariants) are reported
// separately and never certify anything.
struct Verdict {
  std::vector<std::string> distinguished_by;
  std::vector<std::string> advisory_flags;
  bool maybe_equal() const { return distinguished_by.empty(); }
  std::string to_json() const;
};

Verdict filter_battery(const OrientedPoset& a, const OrientedPoset& b);

}  // namespace kpo
