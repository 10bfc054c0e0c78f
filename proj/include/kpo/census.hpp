#pragma once

// census.hpp: exhaustive enumeration of labeled posets up to isomorphism for
// small n, grouping by generating-function fingerprint, bar/star orbit
// quotient, explanation tagging of the nontrivial classes, and the
// classification checks for posets with two or three linear extensions.
//
// The census map over skeletons is data-parallel: shards are processed
// independently (OpenMP when jobs > 1, a serial loop otherwise) and merged in
// skeleton order, so the output is bit-identical for any worker count.

#include <set>
#include <string>
#include <vector>

#include "kpo/invariants.hpp"
#include "kpo/poset.hpp"
#include "kpo/qsym.hpp"

namespace kpo {

// All unlabeled posets on n elements, one canonical representative per
// isomorphism class, generated as transitive upper-triangular relations.
// Returned as kind-free skeletons (all covers weak).  Guarded at n <= 7.
std::vector<OrientedPoset> enumerate_posets(int n);

// All realizable strict/weak assignments on the skeleton's covers, one
// canonical representative per isomorphism class.
std::vector<OrientedPoset> enumerate_orientations(const OrientedPoset& skeleton);

struct CensusRecord {
  std::string fp;  // hex fingerprint of the M-expansion
  int n = 0;
  std::vector<OrientedPoset> members;     // canonicalized, sorted by key
  std::vector<std::string> member_keys;   // canonical keys, parallel to members
  InvariantProfile profile;               // of the first member
  std::vector<std::string> tags;

  std::size_t size() const { return members.size(); }
};

struct CensusOptions {
  int jobs = 1;
  bool natural_only = false;  // restrict to all-weak orientations
  bool tag = true;            // run explanation tagging (full census only)
};

std::vector<CensusRecord> run_census(int n, const CensusOptions& opts = {});

// Groups records whose member sets map onto each other under bar, star or
// bar*star; returns orbits as lists of record indices.  Only meaningful for
// a full (non-natural-only) census.
std::vector<std::vector<int>> quotient_bar_star(const std::vector<CensusRecord>& records);

// Explanation labels:
//   SINGLETON                  class has one member
//   STAR_PAIR                  members are {P, star(P)}, non-isomorphic
//   BAR_CLOSED / SELF_STAR / SELF_BAR_STAR
//                              member set closed under the involution
//   CHAIN_EXT_S21 / CHAIN_EXT_S211 / CHAIN_EXT_S211_BAR
//                              every member pair is a chain extension of the
//                              named base equivalence
//   SKEW_MEMBERS               every member is a skew-diagram poset
//   LAYERED_S21                members connected by layered compositions
//                              built over the three-element base equivalence
//   UNEXPLAINED                nontrivial and none of the above explanations
void tag_explanations(std::vector<CensusRecord>& records);

bool is_explanation_tag(const std::string& tag);

// Canonical keys of every skew-diagram poset with n cells.
std::set<std::string> skew_poset_keys(int n);

// Equality readings for one census: the documented equality count depends on
// whether classes, orbits or member pairs are counted, and on how skew
// classes are discounted; all of them are reported side by side.
struct EqualityCounts {
  long long nontrivial_classes = 0;
  long long nontrivial_orbits = 0;
  long long nontrivial_orbits_nonskew = 0;  // orbits with a non-all-skew class
  long long member_pairs = 0;
  long long member_pairs_nonskew = 0;       // both members skew => discounted
  long long pair_classes_up_to_bar_star = 0;
  long long pair_classes_up_to_bar_star_nonskew = 0;
};

EqualityCounts equality_counts(const std::vector<CensusRecord>& records);

// Chain-extension tests used by tagging and classification.
bool chain_ext_of_pair(const OrientedPoset& a, const OrientedPoset& b,
                       const OrientedPoset& base_a, const OrientedPoset& base_b);
bool chain_ext_of_skeleton(const OrientedPoset& p, const OrientedPoset& base);

struct ClassificationReport {
  int n_max = 0;
  long long posets_checked = 0;
  long long pairs_l2 = 0;  // K-equal non-isomorphic pairs with |L| = 2
  long long pairs_l3 = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Confirms, for every n <= n_max:
//  - |L(P)| = 2 iff P is a chain extension of the two-element antichain,
//    |L(P)| = 3 iff of chain-plus-point;
//  - every K-equal non-isomorphic pair with |L| = 2 is a chain extension of
//    the three-element base equivalence, and with |L| = 3 of the four-element
//    one or its bar image;
//  - for such pairs with n >= 5, both posets have unique minimal elements or
//    both have unique maximal elements.
ClassificationReport verify_classification(int n_max);

std::string census_to_jsonl(const std::vector<CensusRecord>& records);
std::string census_summary(const std::vector<CensusRecord>& records);

}  // namespace kpo
