#pragma once

#include <vector>

#include "simptree/complex.hpp"
#include "simptree/union_find.hpp"

namespace simptree {

// h is below g relative to f: the part of h visible from f is covered by g.
inline bool leq(const FacetComplex& c, int h, int g, int f) {
  const Bitset& fv = c.facet(f);
  Bitset hf = c.facet(h) & fv;
  hf -= c.facet(g);
  return hf.none();
}

struct LeafStatus {
  bool is_leaf = false;
  // Facet dominating every other facet's intersection with f, or -1. A
  // single-facet complex is a leaf with no witness.
  int witness = -1;
  // The witness again, but only when it actually meets f; -1 otherwise.
  int joint = -1;
};

inline LeafStatus leaf_status(const FacetComplex& c, int f) {
  const int l = c.facet_count();
  if (l == 1) return {true, -1, -1};

  const Bitset& fv = c.facet(f);
  Bitset reach(c.vertex_count());
  for (int h = 0; h < l; ++h) {
    if (h != f) reach.or_and(c.facet(h), fv);
  }

  // A dominating facet must cover the whole reachable part exactly; ties go
  // to the smallest index so reports stay deterministic.
  for (int g = 0; g < l; ++g) {
    if (g == f) continue;
    if (intersection_equals(c.facet(g), fv, reach)) {
      return {true, g, reach.any() ? g : -1};
    }
  }
  return {};
}

// True when no third facet swallows the intersection of f and g.
inline bool strongly_adjacent(const FacetComplex& c, int f, int g) {
  if (f == g) return false;
  Bitset cap = c.facet(f) & c.facet(g);
  for (int h = 0; h < c.facet_count(); ++h) {
    if (h == f || h == g) continue;
    if (cap.subset_of(c.facet(h))) return false;
  }
  return true;
}

inline std::vector<int> strong_neighbors(const FacetComplex& c, int f) {
  std::vector<int> out;
  for (int g = 0; g < c.facet_count(); ++g) {
    if (strongly_adjacent(c, f, g)) out.push_back(g);
  }
  return out;
}

// Is there a facet path from src to dst whose consecutive overlaps survive
// deleting the vertex set v? Facets sharing a surviving vertex are merged;
// src and dst connect exactly when they land in the same class.
inline bool connected_outside(const FacetComplex& c, const Bitset& v, int src, int dst) {
  if (src == dst) return true;
  UnionFind uf(c.facet_count());
  for (int w = 0; w < c.vertex_count(); ++w) {
    if (v.test(w)) continue;
    const auto& inc = c.facets_with(w);
    for (std::size_t i = 1; i < inc.size(); ++i) uf.unite(inc[0], inc[i]);
  }
  return uf.same(src, dst);
}

// Facet indices h whose trace on f equals the trace of g1∩g2, plus g1 and g2
// themselves, ascending. f can never qualify: that would force f inside g1.
inline std::vector<int> residue(const FacetComplex& c, int f, int g1, int g2) {
  Bitset target = c.facet(g1) & c.facet(g2);
  target &= c.facet(f);
  std::vector<int> out;
  for (int h = 0; h < c.facet_count(); ++h) {
    if (h == g1 || h == g2 || intersection_equals(c.facet(h), c.facet(f), target)) {
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace simptree
