#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "simptree/complex.hpp"

// Exponential reference implementations. These exist to check the polynomial
// algorithms on small inputs and back the CLI's --naive mode; nothing on the
// fast path may call into here.

namespace simptree {

struct OracleBoundError : std::runtime_error {
  explicit OracleBoundError(int l, int bound)
      : std::runtime_error("naive check limited to " + std::to_string(bound) +
                           " facets, got " + std::to_string(l)) {}
};

inline constexpr int kOracleDefaultBound = 20;

namespace detail {

// Pairwise facet intersections, indexed f*l+g.
inline std::vector<Bitset> intersection_table(const FacetComplex& c) {
  const int l = c.facet_count();
  std::vector<Bitset> pair;
  pair.reserve(static_cast<std::size_t>(l) * l);
  for (int f = 0; f < l; ++f) {
    for (int g = 0; g < l; ++g) pair.push_back(c.facet(f) & c.facet(g));
  }
  return pair;
}

inline bool mask_has_leaf(const std::vector<Bitset>& pair, int l, int n, std::uint32_t m) {
  if ((m & (m - 1)) == 0) return m != 0;  // lone facet, or nothing at all
  Bitset reach(n);
  for (std::uint32_t fm = m; fm != 0; fm &= fm - 1) {
    const int f = std::countr_zero(fm);
    reach.clear();
    const std::uint32_t others = m & ~(std::uint32_t{1} << f);
    for (std::uint32_t hm = others; hm != 0; hm &= hm - 1) {
      reach |= pair[static_cast<std::size_t>(f) * l + std::countr_zero(hm)];
    }
    for (std::uint32_t gm = others; gm != 0; gm &= gm - 1) {
      if (pair[static_cast<std::size_t>(f) * l + std::countr_zero(gm)] == reach) return true;
    }
  }
  return false;
}

struct SubsetTables {
  std::vector<std::uint8_t> has_leaf;    // indexed by facet mask
  std::vector<std::uint8_t> all_leafed;  // every nonempty subset of the mask has a leaf
};

inline SubsetTables build_tables(const FacetComplex& c, int bound) {
  const int l = c.facet_count();
  if (l > bound) throw OracleBoundError(l, bound);
  auto pair = intersection_table(c);
  const std::uint32_t full = (l == 0) ? 0 : ((std::uint32_t{1} << l) - 1);
  SubsetTables t;
  t.has_leaf.assign(full + 1, 0);
  t.all_leafed.assign(full + 1, 1);
  for (std::uint32_t m = 1; m <= full; ++m) {
    t.has_leaf[m] = mask_has_leaf(pair, l, c.vertex_count(), m);
    std::uint8_t ok = t.has_leaf[m];
    for (std::uint32_t fm = m; ok && fm != 0; fm &= fm - 1) {
      ok &= t.all_leafed[m & ~(std::uint32_t{1} << std::countr_zero(fm))];
    }
    t.all_leafed[m] = ok;
  }
  return t;
}

}  // namespace detail

// Does the sub-complex selected by the facet mask have a leaf?
inline bool subset_has_leaf(const FacetComplex& c, std::uint32_t mask,
                            int bound = kOracleDefaultBound) {
  if (c.facet_count() > bound) throw OracleBoundError(c.facet_count(), bound);
  auto pair = detail::intersection_table(c);
  return detail::mask_has_leaf(pair, c.facet_count(), c.vertex_count(), mask);
}

// Every nonempty subset of the facets has a leaf.
inline bool is_forest_naive(const FacetComplex& c, int bound = kOracleDefaultBound) {
  auto t = detail::build_tables(c, bound);
  return t.all_leafed.back() != 0;
}

// No leaf overall, yet every proper nonempty subset has one.
inline bool is_cycle_naive(const FacetComplex& c, int bound = kOracleDefaultBound) {
  const int l = c.facet_count();
  if (l == 0) return false;
  auto t = detail::build_tables(c, bound);
  const std::uint32_t full = (std::uint32_t{1} << l) - 1;
  if (t.has_leaf[full]) return false;
  for (int f = 0; f < l; ++f) {
    if (!t.all_leafed[full & ~(std::uint32_t{1} << f)]) return false;
  }
  return true;
}

// Every facet subset that forms a cycle, each as ascending indices. Cycles
// never nest (a proper subset of a cycle always regains a leaf), so this list
// is automatically an antichain.
inline std::vector<std::vector<int>> all_minimal_cycles_naive(const FacetComplex& c,
                                                              int bound = kOracleDefaultBound) {
  const int l = c.facet_count();
  auto t = detail::build_tables(c, bound);
  std::vector<std::vector<int>> out;
  const std::uint32_t full = (l == 0) ? 0 : ((std::uint32_t{1} << l) - 1);
  for (std::uint32_t m = 1; m <= full && full != 0; ++m) {
    if (t.has_leaf[m]) continue;
    bool cyc = true;
    for (std::uint32_t fm = m; cyc && fm != 0; fm &= fm - 1) {
      cyc = t.all_leafed[m & ~(std::uint32_t{1} << std::countr_zero(fm))] != 0;
    }
    if (!cyc) continue;
    std::vector<int> members;
    for (std::uint32_t fm = m; fm != 0; fm &= fm - 1) members.push_back(std::countr_zero(fm));
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace simptree
