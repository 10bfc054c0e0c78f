#pragma once

// transforms.hpp: the equality-preserving constructions on oriented posets --
// the bar/star involutions, disjoint union, ordinal sums, the five-block
// layered composition, the five min/max combination operators, jump-0
// removal, chain extensions, and the skew-diagram constructor.

#include <string>
#include <vector>

#include "kpo/poset.hpp"

namespace kpo {

// Same covers, kinds flipped.
OrientedPoset bar(const OrientedPoset& p);

// 180-degree rotation: dual with kinds preserved.
OrientedPoset star(const OrientedPoset& p);

// Ids of b shifted by |a|; K multiplies (quasi-shuffle) under this union.
OrientedPoset disjoint_union(const OrientedPoset& a, const OrientedPoset& b);

// `lower` below `upper`, every maximal of lower covered by every minimal of
// upper with edges of the given kind.
OrientedPoset ordinal_sum(const OrientedPoset& lower, const OrientedPoset& upper,
                          EdgeKind kind);

// Two-layer composition: p4 and p5 below, p1/p2/p3 above, each maximal of a
// lower block covered by each minimal of an upper block.  Edge kinds:
//   p4-p1 weak, p4-p2 weak, p4-p3 strict,
//   p5-p1 strict, p5-p2 weak, p5-p3 strict.
// Any block may be empty; labeling the blocks in the order p3, p4, p1, p5, p2
// realizes the result whenever the blocks are realizable.
OrientedPoset layered_compose(const OrientedPoset& p1, const OrientedPoset& p2,
                              const OrientedPoset& p3, const OrientedPoset& p4,
                              const OrientedPoset& p5);

// Combination operators joining extrema of two posets.  ne/Ne add a single
// edge from the unique minimal of p1 up to the unique maximal of p2 (weak
// resp. strict); the two-edge forms also join the unique minimal of p2 to the
// unique maximal of p1.  Output may be unrealizable; that is reported in the
// flag, not an error.
enum class CombineOp { ne, Ne, nenw, NeNw, neNw };

struct CombineResult {
  OrientedPoset poset;
  bool realizable = false;
};

CombineResult combine(CombineOp op, const OrientedPoset& p1,
                      const OrientedPoset& p2);

CombineOp combine_op_of(const std::string& name);  // "ne","Ne","nenw","NeNw","neNw"

// Deletes the jump-0 ideal (the elements reachable from below through weak
// covers only); induced covers retained.
OrientedPoset remove_jump0(const OrientedPoset& p);

// New element (id n) joined to all minimals resp. maximals with edges of the
// given kind.
OrientedPoset add_bottom(const OrientedPoset& p, EdgeKind kind);
OrientedPoset add_top(const OrientedPoset& p, EdgeKind kind);

// Skew diagram in French notation: outer[0] is the bottom row, rows shrink
// going up.  Row i occupies columns inner[i]+1 .. outer[i].
struct SkewShape {
  std::vector<int> outer;
  std::vector<int> inner;  // padded to outer's length

  // "443/21" (digit form) or "10,9,2/3" (comma form, required when any part
  // exceeds 9).
  static SkewShape parse(const std::string& text);
  static SkewShape of(std::vector<int> outer, std::vector<int> inner);
  int cells() const;
  std::string to_string() const;
};

SkewShape rotate180(const SkewShape& s);

// One element per cell; weak cover to the right neighbor in the same row,
// strict cover to the cell above in the same column.  Partitions of the
// result are the semistandard fillings of the diagram.
OrientedPoset skew_to_poset(const SkewShape& shape);

}  // namespace kpo
