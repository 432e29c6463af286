#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "simptree/complex.hpp"

namespace simptree {

/// Sliding-window complex: facets {x_i, ..., x_{i+width}} for i = 1..l over
/// l + width vertices. Consecutive facets overlap in all but one vertex.
inline FacetComplex gen_interval(int l, int width) {
  if (l < 1) throw std::invalid_argument("gen_interval: need at least one facet");
  if (width < 1) throw std::invalid_argument("gen_interval: width must be positive");
  int n = l + width;
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 1; v <= n; ++v) names.push_back("x" + std::to_string(v));
  std::vector<Bitset> facets;
  facets.reserve(l);
  for (int i = 0; i < l; ++i) {
    Bitset f(n);
    for (int v = i; v <= i + width; ++v) f.set(v);
    facets.push_back(std::move(f));
  }
  return FacetComplex(std::move(names), std::move(facets));
}

/// Path of l facets {x_i, x_{i+1}, x_{i+2}}: the narrowest interval complex.
inline FacetComplex gen_path(int l) { return gen_interval(l, 2); }

struct RandomSpec {
  int l = 1;                 ///< facets to produce
  int n = 4;                 ///< vertex pool to sample from
  int size_lo = 1;           ///< smallest facet cardinality
  int size_hi = 4;           ///< largest facet cardinality
  std::uint64_t seed = 0;
};

namespace detail {

/// Uniform value in [0, bound) by rejection, so the stream does not depend on
/// the platform's distribution implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

/**
 * Seeded random antichain: facet sizes drawn uniformly from the requested
 * range, facets comparable to an already accepted one rejected and redrawn.
 * Vertices keep their pool index in the name (x3 stays x3 even when x2 ends
 * up unused), so equal specs yield byte-identical serializations. Throws when
 * the spec is invalid or the rejection budget runs out.
 */
inline FacetComplex gen_random(const RandomSpec& spec) {
  if (spec.l < 1) throw std::invalid_argument("gen_random: need at least one facet");
  if (spec.n < 1) throw std::invalid_argument("gen_random: need at least one vertex");
  if (spec.size_lo < 1 || spec.size_lo > spec.size_hi)
    throw std::invalid_argument("gen_random: bad facet size range");
  if (spec.size_lo > spec.n)
    throw std::invalid_argument("gen_random: facets cannot be larger than the vertex pool");

  std::mt19937_64 rng(spec.seed);
  int hi = std::min(spec.size_hi, spec.n);
  std::vector<Bitset> sets;
  long budget = 400L * spec.l;
  while (static_cast<int>(sets.size()) < spec.l && budget-- > 0) {
    int s = spec.size_lo +
            static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(hi - spec.size_lo + 1)));
    Bitset f(spec.n);
    while (f.count() < s) f.set(static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(spec.n))));
    bool keep = true;
    for (const auto& g : sets)
      if (f.subset_of(g) || g.subset_of(f)) keep = false;
    if (keep) sets.push_back(std::move(f));
  }
  if (static_cast<int>(sets.size()) < spec.l)
    throw std::runtime_error("gen_random: spec infeasible, antichain stalled at " +
                             std::to_string(sets.size()) + " of " + std::to_string(spec.l) +
                             " facets");

  Bitset used(spec.n);
  for (const auto& f : sets) used |= f;
  std::vector<int> remap(spec.n, -1);
  std::vector<std::string> names;
  used.for_each([&](int v) {
    remap[v] = static_cast<int>(names.size());
    names.push_back("x" + std::to_string(v + 1));
  });
  std::vector<Bitset> packed;
  packed.reserve(sets.size());
  for (const auto& f : sets) {
    Bitset b(static_cast<int>(names.size()));
    f.for_each([&](int v) { b.set(remap[v]); });
    packed.push_back(std::move(b));
  }
  return FacetComplex(std::move(names), std::move(packed));
}

}  // namespace simptree
