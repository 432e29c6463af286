#pragma once

// Shared helpers for the test suites: terse complex builders, brute-force
// reference checks, and seeded random generators that are independent of the
// library's own algorithms.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "simptree/complex.hpp"

namespace testsupport {

/// Build a complex from single-character facet strings: cx({"xy", "yz"}).
inline simptree::FacetComplex cx(const std::vector<std::string>& facets,
                                 bool minimize = false) {
  std::vector<std::vector<std::string>> lists;
  lists.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<std::string> names;
    for (char c : f) names.emplace_back(1, c);
    lists.push_back(std::move(names));
  }
  return simptree::FacetComplex::from_names(lists, minimize);
}

/// Uniform integer in [0, bound) from a seeded engine, by rejection, so the
/// stream is identical on every platform.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Random antichain over at most `max_n` vertices named a, b, c, ...
/// Facet count in [1, max_l], sizes in [min_size, max_size]. Connectivity is
/// not enforced.
inline simptree::FacetComplex random_antichain(std::mt19937_64& rng, int max_l, int max_n,
                                               int min_size = 1, int max_size = 4) {
  int n = 2 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_n - 1)));
  int l = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_l)));
  std::vector<simptree::Bitset> sets;
  for (int attempts = 0; static_cast<int>(sets.size()) < l && attempts < 200 * l; ++attempts) {
    int hi = std::min(max_size, n);
    int s = min_size + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - min_size + 1)));
    simptree::Bitset f(n);
    while (f.count() < s) f.set(static_cast<int>(below(rng, static_cast<std::uint64_t>(n))));
    bool ok = true;
    for (const auto& g : sets)
      if (f.subset_of(g) || g.subset_of(f)) ok = false;
    if (ok) sets.push_back(std::move(f));
  }
  // drop unused vertices so the universe is exactly the union of the facets
  std::vector<int> used;
  simptree::Bitset all(n);
  for (const auto& f : sets) all |= f;
  std::vector<int> remap(n, -1);
  std::vector<std::string> names;
  all.for_each([&](int v) {
    remap[v] = static_cast<int>(names.size());
    names.push_back(std::string(1, static_cast<char>('a' + names.size() % 26)) +
                    (names.size() >= 26 ? std::to_string(names.size() / 26) : ""));
  });
  std::vector<simptree::Bitset> packed;
  packed.reserve(sets.size());
  for (const auto& f : sets) {
    simptree::Bitset b(static_cast<int>(names.size()));
    f.for_each([&](int v) { b.set(remap[v]); });
    packed.push_back(std::move(b));
  }
  return simptree::FacetComplex(std::move(names), std::move(packed));
}

/// Brute-force facet connectivity after deleting the vertices in `avoid`:
/// depth-first search over "shares a surviving vertex" edges.
inline bool connected_outside_brute(const simptree::FacetComplex& c,
                                    const simptree::Bitset& avoid, int src, int dst) {
  int l = c.facet_count();
  std::vector<char> seen(l, 0);
  std::vector<int> stack{src};
  seen[src] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    if (f == dst) return true;
    for (int g = 0; g < l; ++g) {
      if (seen[g]) continue;
      if (((c.facet(f) & c.facet(g)) - avoid).any()) {
        seen[g] = 1;
        stack.push_back(g);
      }
    }
  }
  return false;
}

namespace graftdetail {

inline bool grafted_masked(const simptree::FacetComplex& c, std::uint32_t mask,
                           std::vector<signed char>& memo) {
  if (memo[mask] >= 0) return memo[mask] != 0;
  int n = c.vertex_count();
  std::vector<int> members;
  for (int f = 0; f < c.facet_count(); ++f)
    if (mask >> f & 1) members.push_back(f);

  std::vector<int> leaves, rest, joints;
  for (int f : members) {
    simptree::Bitset reach(n);
    for (int h : members)
      if (h != f) reach |= c.facet(h) & c.facet(f);
    bool is_leaf = members.size() == 1;
    for (int g : members)
      if (g != f && intersection_equals(c.facet(g), c.facet(f), reach)) is_leaf = true;
    (is_leaf ? leaves : rest).push_back(f);
    if (is_leaf && reach.any()) {
      for (int g : members)
        if (g != f && intersection_equals(c.facet(g), c.facet(f), reach)) joints.push_back(g);
    }
  }

  bool ok = true;
  simptree::Bitset leaf_union(n), rest_union(n);
  for (int f : leaves) {
    if (c.facet(f).intersects(leaf_union)) ok = false;
    leaf_union |= c.facet(f);
  }
  for (int g : rest) rest_union |= c.facet(g);
  if (!rest_union.subset_of(leaf_union)) ok = false;
  if (ok) {
    for (int g : joints) {
      bool g_is_leaf = false;
      for (int f : leaves) g_is_leaf |= (f == g);
      if (g_is_leaf) continue;
      if (!grafted_masked(c, mask & ~(std::uint32_t{1} << g), memo)) ok = false;
    }
  }
  memo[mask] = ok ? 1 : 0;
  return ok;
}

}  // namespace graftdetail

/// Graftedness straight from its recursive definition: the leaves must absorb
/// every vertex of the remaining facets, stay pairwise disjoint, and deleting
/// any joint must leave a complex that is again grafted. Exponential in the
/// facet count, so capped; serves as an oracle for the chain-based algorithm.
inline bool grafted_by_definition(const simptree::FacetComplex& c) {
  int l = c.facet_count();
  if (l > 20) throw std::runtime_error("grafted_by_definition: too many facets");
  std::vector<signed char> memo(std::size_t{1} << l, -1);
  return graftdetail::grafted_masked(c, (std::uint32_t{1} << l) - 1, memo);
}

}  // namespace testsupport
