#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "simptree/relations.hpp"

namespace simptree {

// A closed chain of facets certifying that a complex is not a forest. The
// ordering lists the facets around the cycle; apex is the intersection of all
// of them, which every pair of non-consecutive members must reproduce.
struct CycleCertificate {
  std::vector<int> ordering;
  Bitset apex;
};

namespace detail {

inline void check_ordering(const FacetComplex& c, const std::vector<int>& ordering) {
  std::vector<char> seen(c.facet_count(), 0);
  for (int f : ordering) {
    if (f < 0 || f >= c.facet_count()) throw std::out_of_range("certificate facet out of range");
    if (seen[f]) throw std::invalid_argument("certificate repeats a facet");
    seen[f] = 1;
  }
}

// Membership flags for the residue of (f; g1, g2), restricted to facets whose
// alive flag is set. alive may be empty, meaning everything.
inline std::vector<char> residue_members(const FacetComplex& c, int f, int g1, int g2,
                                         const std::vector<char>& alive) {
  Bitset target = c.facet(g1) & c.facet(g2);
  target &= c.facet(f);
  std::vector<char> member(c.facet_count(), 0);
  for (int h = 0; h < c.facet_count(); ++h) {
    if (!alive.empty() && !alive[h]) continue;
    if (h == g1 || h == g2 || intersection_equals(c.facet(h), c.facet(f), target)) member[h] = 1;
  }
  // f itself never qualifies: matching would put f inside g1, breaking the
  // antichain property the complex guarantees.
  return member;
}

// Shortest facet path from g1 to g2 within the flagged facets, where two
// facets are adjacent when their intersection survives deleting f's vertices.
// Breadth-first with ascending-index scanning, so results are deterministic
// and chord-free. Empty result means no path.
inline std::vector<int> path_in_residue(const FacetComplex& c, int f,
                                        const std::vector<char>& member, int g1, int g2) {
  const int l = c.facet_count();
  std::vector<int> parent(l, -1);
  std::vector<int> queue{g1};
  parent[g1] = g1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int a = queue[head];
    if (a == g2) break;
    for (int b = 0; b < l; ++b) {
      if (!member[b] || parent[b] >= 0) continue;
      Bitset cap = c.facet(a) & c.facet(b);
      cap -= c.facet(f);
      if (cap.any()) {
        parent[b] = a;
        queue.push_back(b);
      }
    }
  }
  if (parent[g2] < 0) return {};
  std::vector<int> path;
  for (int at = g2; at != g1; at = parent[at]) path.push_back(at);
  path.push_back(g1);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Certificate over the given facets, apex filled in.
inline CycleCertificate make_certificate(const FacetComplex& c, std::vector<int> ordering) {
  detail::check_ordering(c, ordering);
  Bitset apex(c.vertex_count());
  if (!ordering.empty()) {
    apex = c.facet(ordering[0]);
    for (int f : ordering) apex &= c.facet(f);
  }
  return {std::move(ordering), std::move(apex)};
}

// Common intersection of all facets, and the complex with it cut away.
// Cutting preserves cycle structure in both directions, which lets tests
// shrink examples. Refuses a complex whose single facet would vanish.
inline std::pair<Bitset, FacetComplex> cone_reduce(const FacetComplex& c) {
  Bitset apex(c.vertex_count());
  if (c.facet_count() > 0) {
    apex = c.facet(0);
    for (int f = 1; f < c.facet_count(); ++f) apex &= c.facet(f);
  }
  std::vector<int> remap(c.vertex_count(), -1);
  std::vector<std::string> names;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (!apex.test(v)) {
      remap[v] = static_cast<int>(names.size());
      names.push_back(c.vertex_name(v));
    }
  }
  std::vector<Bitset> facets;
  facets.reserve(c.facet_count());
  for (int f = 0; f < c.facet_count(); ++f) {
    Bitset b(static_cast<int>(names.size()));
    bool empty = true;
    c.facet(f).for_each([&](int v) {
      if (remap[v] >= 0) {
        b.set(remap[v]);
        empty = false;
      }
    });
    if (empty) throw std::invalid_argument("facet equals the common intersection");
    facets.push_back(std::move(b));
  }
  return {std::move(apex), FacetComplex(std::move(names), std::move(facets))};
}

// Check the closed-chain conditions: at least three facets, consecutive ones
// strongly adjacent within the listed facets, and every non-consecutive pair
// meeting exactly in the apex. Throws on malformed orderings, returns false
// on well-formed ones that fail a condition.
inline bool verify_certificate(const FacetComplex& c, const CycleCertificate& cert) {
  detail::check_ordering(c, cert.ordering);
  const int n = static_cast<int>(cert.ordering.size());
  if (n < 3) return false;

  Bitset apex = c.facet(cert.ordering[0]);
  for (int f : cert.ordering) apex &= c.facet(f);
  if (!(apex == cert.apex)) return false;

  for (int i = 0; i < n; ++i) {
    int a = cert.ordering[i];
    int b = cert.ordering[(i + 1) % n];
    Bitset cap = c.facet(a) & c.facet(b);
    for (int k = 0; k < n; ++k) {
      int h = cert.ordering[k];
      if (h != a && h != b && cap.subset_of(c.facet(h))) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // cyclically consecutive
      Bitset cap = c.facet(cert.ordering[i]) & c.facet(cert.ordering[j]);
      if (!(cap == apex)) return false;
    }
  }
  return true;
}

// Grow a certified cycle out of a satisfied triple: f plus the shortest
// residue path joining g1 to g2 away from f. Shortest means chord-free, and
// a chord-free closed chain is exactly what verify_certificate accepts.
inline CycleCertificate cycle_from_triple(const FacetComplex& c, int f, int g1, int g2) {
  if (f == g1 || f == g2 || g1 == g2) throw std::invalid_argument("facets must be distinct");
  if (leq(c, g1, g2, f) || leq(c, g2, g1, f)) {
    throw std::invalid_argument("triple not satisfied: traces on f are comparable");
  }
  auto member = detail::residue_members(c, f, g1, g2, {});
  auto path = detail::path_in_residue(c, f, member, g1, g2);
  if (path.empty()) {
    throw std::invalid_argument("triple not satisfied: no connection away from f");
  }
  std::vector<int> ordering;
  ordering.reserve(path.size() + 1);
  ordering.push_back(f);
  ordering.insert(ordering.end(), path.begin(), path.end());
  return make_certificate(c, std::move(ordering));
}

}  // namespace simptree
