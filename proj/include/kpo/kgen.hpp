#pragma once

// kgen.hpp: the partition generating function of an oriented poset, computed
// by two independent routes.
//
// A partition of (P, kinds) is a map to positive integers that weakly
// increases along weak covers and strictly increases along strict covers.
// The generating function records one monomial per partition; as a
// quasisymmetric function it is determined by its M-expansion.
//
//   F-route: sum of F_{Des(pi)} over the linear extensions of a witness
//            labeling (valid only for realizable orientations).
//   M-route: the coefficient of M_alpha counts partitions with level sizes
//            alpha, computed by stripping level-1 order ideals with weak-only
//            internal covers (valid for every oriented poset).

#include <vector>

#include "kpo/poset.hpp"
#include "kpo/qsym.hpp"

namespace kpo {

struct PPartition {
  std::vector<int> values;  // element id -> positive integer
};

// Multiset of descent sets over the linear extensions; throws NotRealizable
// when no labeling exists.
FExpansion k_f_route(const OrientedPoset& p);

// Coefficient vector over all compositions of |P|.
MExpansion k_m_route(const OrientedPoset& p);

bool k_equal(const OrientedPoset& a, const OrientedPoset& b);

bool is_p_partition(const OrientedPoset& p, const PPartition& f);

// Every valid map with values in 1..max_part, each exactly once.
std::vector<PPartition> enumerate_p_partitions(const OrientedPoset& p,
                                               int max_part);

}  // namespace kpo
