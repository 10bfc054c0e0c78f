#include "kpo/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "kpo/invariants.hpp"

namespace kpo {

OrientedPoset bar(const OrientedPoset& p) {
  std::vector<Cover> cov = p.covers();
  for (Cover& c : cov)
    c.kind = c.kind == EdgeKind::Weak ? EdgeKind::Strict : EdgeKind::Weak;
  return OrientedPoset::validate(p.size(), std::move(cov));
}

OrientedPoset star(const OrientedPoset& p) { return p.dual(); }

OrientedPoset disjoint_union(const OrientedPoset& a, const OrientedPoset& b) {
  std::vector<Cover> cov = a.covers();
  for (const Cover& c : b.covers())
    cov.push_back({c.lo + a.size(), c.hi + a.size(), c.kind});
  return OrientedPoset::validate(a.size() + b.size(), std::move(cov));
}

OrientedPoset ordinal_sum(const OrientedPoset& lower, const OrientedPoset& upper,
                          EdgeKind kind) {
  std::vector<Cover> cov = lower.covers();
  for (const Cover& c : upper.covers())
    cov.push_back({c.lo + lower.size(), c.hi + lower.size(), c.kind});
  for (Mask mm = lower.maximal_mask(); mm; mm &= mm - 1) {
    int m = std::countr_zero(mm);
    for (Mask nn = upper.minimal_mask(); nn; nn &= nn - 1)
      cov.push_back({m, std::countr_zero(nn) + lower.size(), kind});
  }
  return OrientedPoset::validate(lower.size() + upper.size(), std::move(cov));
}

OrientedPoset layered_compose(const OrientedPoset& p1, const OrientedPoset& p2,
                              const OrientedPoset& p3, const OrientedPoset& p4,
                              const OrientedPoset& p5) {
  const OrientedPoset* blocks[5] = {&p1, &p2, &p3, &p4, &p5};
  int offset[5];
  int n = 0;
  std::vector<Cover> cov;
  for (int i = 0; i < 5; i++) {
    offset[i] = n;
    n += blocks[i]->size();
    for (const Cover& c : blocks[i]->covers())
      cov.push_back({c.lo + offset[i], c.hi + offset[i], c.kind});
  }
  // lower block index (0 = p4, 1 = p5) x upper block index (p1, p2, p3)
  const EdgeKind kinds[2][3] = {
      {EdgeKind::Weak, EdgeKind::Weak, EdgeKind::Strict},
      {EdgeKind::Strict, EdgeKind::Weak, EdgeKind::Strict}};
  for (int lo = 0; lo < 2; lo++) {
    const OrientedPoset& lower = *blocks[3 + lo];
    for (int up = 0; up < 3; up++) {
      const OrientedPoset& upper = *blocks[up];
      for (Mask mm = lower.maximal_mask(); mm; mm &= mm - 1)
        for (Mask nn = upper.minimal_mask(); nn; nn &= nn - 1)
          cov.push_back({std::countr_zero(mm) + offset[3 + lo],
                         std::countr_zero(nn) + offset[up], kinds[lo][up]});
    }
  }
  return OrientedPoset::validate(n, std::move(cov));
}

namespace {

// Poset generated by relation edges: transitive-closes, then keeps exactly
// the non-implied edges as covers.  Kinds ride on the generating edges.  An
// implied strict edge may only be dropped when some longer path also carries
// a strict edge; otherwise the strictness constraint has no cover to live on
// and the result is not an oriented poset.
OrientedPoset from_relations(int n, std::vector<Cover> edges) {
  std::vector<Mask> adj(n, 0), strict_adj(n, 0);
  for (const Cover& c : edges) {
    adj[c.lo] |= Mask(1) << c.hi;
    if (c.kind == EdgeKind::Strict) strict_adj[c.lo] |= Mask(1) << c.hi;
  }
  // reach: any path; strict_reach: paths containing at least one strict edge
  std::vector<Mask> reach = adj, strict_reach = strict_adj;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; v++) {
      Mask acc = reach[v], sacc = strict_reach[v];
      for (Mask m = adj[v]; m; m &= m - 1) {
        int u = std::countr_zero(m);
        acc |= reach[u];
        sacc |= strict_reach[u];
        if ((strict_adj[v] >> u) & 1u) sacc |= reach[u];
      }
      if (acc != reach[v] || sacc != strict_reach[v]) {
        reach[v] = acc;
        strict_reach[v] = sacc;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; v++)
    if ((reach[v] >> v) & 1u)
      throw poset_error(Errc::CycleDetected, "added edges create an order cycle");
  std::vector<Cover> cov;
  for (const Cover& c : edges) {
    bool implied = false, strict_implied = false;
    for (Mask m = adj[c.lo] & ~(Mask(1) << c.hi); m; m &= m - 1) {
      int mid = std::countr_zero(m);
      bool via = ((reach[mid] >> c.hi) & 1u) != 0;
      if (!via) continue;
      implied = true;
      if (((strict_adj[c.lo] >> mid) & 1u) || ((strict_reach[mid] >> c.hi) & 1u))
        strict_implied = true;
    }
    if (!implied) {
      cov.push_back(c);
    } else if (c.kind == EdgeKind::Strict && !strict_implied) {
      throw poset_error(Errc::PreconditionViolated,
                        "a strict relation would not be expressible on covers");
    }
  }
  return OrientedPoset::validate(n, std::move(cov));
}

}  // namespace

CombineOp combine_op_of(const std::string& name) {
  if (name == "ne") return CombineOp::ne;
  if (name == "Ne") return CombineOp::Ne;
  if (name == "nenw") return CombineOp::nenw;
  if (name == "NeNw") return CombineOp::NeNw;
  if (name == "neNw") return CombineOp::neNw;
  throw poset_error(Errc::ParseError, "unknown combine op '" + name + "'");
}

CombineResult combine(CombineOp op, const OrientedPoset& p1,
                      const OrientedPoset& p2) {
  bool two_edges =
      op == CombineOp::nenw || op == CombineOp::NeNw || op == CombineOp::neNw;
  if (!p1.has_unique_minimal() || !p2.has_unique_maximal())
    throw poset_error(Errc::PreconditionViolated,
                      "need a unique minimal in the first operand and a unique "
                      "maximal in the second");
  if (two_edges && (!p1.has_unique_maximal() || !p2.has_unique_minimal()))
    throw poset_error(Errc::PreconditionViolated,
                      "two-edge combinations need unique extrema on both sides");
  int off = p1.size();
  std::vector<Cover> edges = p1.covers();
  for (const Cover& c : p2.covers()) edges.push_back({c.lo + off, c.hi + off, c.kind});
  EdgeKind ne_kind = op == CombineOp::Ne ? EdgeKind::Strict : EdgeKind::Weak;
  edges.push_back({p1.unique_minimal(), p2.unique_maximal() + off, ne_kind});
  if (two_edges) {
    EdgeKind nw_kind = op == CombineOp::nenw ? EdgeKind::Weak : EdgeKind::Strict;
    if (op == CombineOp::NeNw) edges.back().kind = EdgeKind::Strict;
    edges.push_back({p2.unique_minimal() + off, p1.unique_maximal(), nw_kind});
  }
  CombineResult r{from_relations(p1.size() + p2.size(), std::move(edges)), false};
  r.realizable = realize_labeling(r.poset).has_value();
  return r;
}

OrientedPoset remove_jump0(const OrientedPoset& p) {
  Mask keep = ((Mask(1) << p.size()) - 1) & ~jump_zero_mask(p);
  if (p.size() == 0) keep = 0;
  return p.induced(keep);
}

OrientedPoset add_bottom(const OrientedPoset& p, EdgeKind kind) {
  std::vector<Cover> cov = p.covers();
  for (Mask m = p.minimal_mask(); m; m &= m - 1)
    cov.push_back({p.size(), std::countr_zero(m), kind});
  return OrientedPoset::validate(p.size() + 1, std::move(cov));
}

OrientedPoset add_top(const OrientedPoset& p, EdgeKind kind) {
  std::vector<Cover> cov = p.covers();
  for (Mask m = p.maximal_mask(); m; m &= m - 1)
    cov.push_back({std::countr_zero(m), p.size(), kind});
  return OrientedPoset::validate(p.size() + 1, std::move(cov));
}

SkewShape SkewShape::of(std::vector<int> outer, std::vector<int> inner) {
  if (outer.empty()) throw poset_error(Errc::InvalidShape, "empty outer shape");
  inner.resize(outer.size(), 0);
  for (size_t i = 0; i < outer.size(); i++) {
    if (outer[i] < 1) throw poset_error(Errc::InvalidShape, "outer part < 1");
    if (inner[i] < 0) throw poset_error(Errc::InvalidShape, "inner part < 0");
    if (inner[i] > outer[i])
      throw poset_error(Errc::InvalidShape, "inner exceeds outer");
    if (i > 0 && (outer[i] > outer[i - 1] || inner[i] > inner[i - 1]))
      throw poset_error(Errc::InvalidShape, "parts must weakly decrease");
  }
  SkewShape s{std::move(outer), std::move(inner)};
  if (s.cells() < 1) throw poset_error(Errc::InvalidShape, "shape has no cells");
  return s;
}

int SkewShape::cells() const {
  int total = 0;
  for (size_t i = 0; i < outer.size(); i++) total += outer[i] - inner[i];
  return total;
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw poset_error(Errc::InvalidShape, "bad shape part '" + tok + "'");
      parts.push_back(std::stoi(tok));
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit((unsigned char)ch))
        throw poset_error(Errc::InvalidShape, "bad shape character");
      parts.push_back(ch - '0');
    }
  }
  return parts;
}

}  // namespace

SkewShape SkewShape::parse(const std::string& text) {
  auto slash = text.find('/');
  std::string outer_s = text.substr(0, slash);
  std::string inner_s = slash == std::string::npos ? "" : text.substr(slash + 1);
  return of(parse_parts(outer_s),
            inner_s.empty() ? std::vector<int>{} : parse_parts(inner_s));
}

std::string SkewShape::to_string() const {
  std::vector<int> trimmed_inner = inner;
  while (!trimmed_inner.empty() && trimmed_inner.back() == 0) trimmed_inner.pop_back();
  bool digits = std::all_of(outer.begin(), outer.end(), [](int p) { return p <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < outer.size(); i++) {
    if (i && !digits) out << ",";
    out << outer[i];
  }
  if (!trimmed_inner.empty()) {
    out << "/";
    for (size_t i = 0; i < trimmed_inner.size(); i++) {
      if (i && !digits) out << ",";
      out << trimmed_inner[i];
    }
  }
  return out.str();
}

SkewShape rotate180(const SkewShape& s) {
  int k = (int)s.outer.size();
  int w = s.outer[0];
  std::vector<int> outer(k), inner(k);
  for (int i = 0; i < k; i++) {
    outer[i] = w - s.inner[k - 1 - i];
    inner[i] = w - s.outer[k - 1 - i];
  }
  return SkewShape::of(std::move(outer), std::move(inner));
}

OrientedPoset skew_to_poset(const SkewShape& shape) {
  int k = (int)shape.outer.size();
  auto in_shape = [&](int r, int c) {  // r in 1..k bottom-up, c in 1..
    return r >= 1 && r <= k && c > shape.inner[r - 1] && c <= shape.outer[r - 1];
  };
  // Ids in column-major order, top row first within each column; this order
  // is itself a valid labeling (increases along rows, decreases up columns).
  std::vector<std::vector<int>> id(k + 2, std::vector<int>(shape.outer[0] + 2, -1));
  int next = 0;
  for (int c = 1; c <= shape.outer[0]; c++)
    for (int r = k; r >= 1; r--)
      if (in_shape(r, c)) id[r][c] = next++;
  std::vector<Cover> cov;
  for (int r = 1; r <= k; r++)
    for (int c = 1; c <= shape.outer[0]; c++) {
      if (!in_shape(r, c)) continue;
      if (in_shape(r, c + 1)) cov.push_back({id[r][c], id[r][c + 1], EdgeKind::Weak});
      if (in_shape(r + 1, c)) cov.push_back({id[r][c], id[r + 1][c], EdgeKind::Strict});
    }
  return OrientedPoset::validate(next, std::move(cov));
}

}  // namespace kpo
