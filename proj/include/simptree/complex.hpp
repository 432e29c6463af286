#pragma once

#include <cctype>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simptree/bitset.hpp"
#include "simptree/union_find.hpp"

namespace simptree {

/**
 * A facet complex: a finite antichain of nonempty vertex sets.
 *
 * The vertex universe is exactly the union of the facets; vertex ids are
 * assigned by first appearance and facets keep their input order, so every
 * construction is deterministic. Facets are stored as bitsets over the
 * universe: storage is O(n*l) bits, membership is O(1), intersection and
 * difference are O(n).
 *
 * The empty complex (no facets, no vertices) is a valid value; the text
 * parser rejects it, but code may construct it and every algorithm in this
 * library gives it well-defined answers.
 */
class FacetComplex {
 public:
  FacetComplex() = default;

  /**
   * Build from explicit vertex names and facet bitsets over those names.
   * With minimize=true, facets contained in an earlier or later facet are
   * dropped (for equal facets the first survives); otherwise duplicates and
   * containments are errors. Every name must be used by a surviving facet.
   */
  FacetComplex(std::vector<std::string> vertex_names, std::vector<Bitset> facets,
               bool minimize = false) {
    int n = static_cast<int>(vertex_names.size());
    for (const auto& name : vertex_names) validate_name(name);
    for (const auto& f : facets) {
      if (f.universe() != n)
        throw std::invalid_argument("facet universe does not match vertex count");
      if (f.none()) throw std::invalid_argument("empty facet");
    }
    if (minimize) facets = minimized(std::move(facets));
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (i == j || !facets[i].subset_of(facets[j])) continue;
        if (facets[i] == facets[j]) {
          if (i > j) throw std::invalid_argument("duplicate facet");
        } else {
          throw std::invalid_argument("facet contained in another facet (not an antichain)");
        }
      }
    names_ = std::move(vertex_names);
    facets_ = std::move(facets);
    index_.reserve(names_.size());
    for (int v = 0; v < n; ++v) {
      if (!index_.emplace(names_[v], v).second)
        throw std::invalid_argument("duplicate vertex name '" + names_[v] + "'");
    }
    incidence_.assign(n, {});
    for (int f = 0; f < facet_count(); ++f)
      facets_[f].for_each([&](int v) { incidence_[v].push_back(f); });
    for (int v = 0; v < n; ++v)
      if (incidence_[v].empty())
        throw std::invalid_argument("vertex '" + names_[v] + "' appears in no facet");
  }

  /// Build from facets given as vertex-name lists; ids follow first appearance.
  static FacetComplex from_names(const std::vector<std::vector<std::string>>& facets,
                                 bool minimize = false) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> seen;
    for (const auto& facet : facets)
      for (const auto& name : facet)
        if (seen.emplace(name, static_cast<int>(names.size())).second) {
          validate_name(name);
          names.push_back(name);
        }
    std::vector<Bitset> sets;
    sets.reserve(facets.size());
    for (const auto& facet : facets) {
      Bitset b(static_cast<int>(names.size()));
      for (const auto& name : facet) {
        int v = seen.at(name);
        if (b.test(v))
          throw std::invalid_argument("repeated vertex '" + name + "' in facet");
        b.set(v);
      }
      sets.push_back(std::move(b));
    }
    return FacetComplex(std::move(names), std::move(sets), minimize);
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  bool empty() const { return facets_.empty(); }

  const Bitset& facet(int f) const { return facets_[f]; }
  const std::vector<Bitset>& facets() const { return facets_; }

  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }

  std::optional<int> vertex_id(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
  }

  /// Facets containing vertex v, ascending.
  const std::vector<int>& facets_with(int v) const { return incidence_[v]; }

  /// True when every vertex name is a single character, so facets can be
  /// written as juxtaposed names ("xyz") without ambiguity.
  bool compact_names() const {
    for (const auto& name : names_)
      if (name.size() != 1) return false;
    return true;
  }

  /// Human-readable facet label: "xyz" for single-character universes,
  /// "x1 x2 x3" otherwise. Vertices in id order.
  std::string label(int f) const {
    std::string out;
    bool compact = compact_names();
    facets_[f].for_each([&](int v) {
      if (!out.empty() && !compact) out += ' ';
      out += names_[v];
    });
    return out;
  }

  friend bool operator==(const FacetComplex& a, const FacetComplex& b) {
    return a.names_ == b.names_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const FacetComplex& a, const FacetComplex& b) { return !(a == b); }

 private:
  static void validate_name(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty vertex name");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw std::invalid_argument("invalid character in vertex name '" + name + "'");
  }

  static std::vector<Bitset> minimized(std::vector<Bitset> facets) {
    std::vector<char> drop(facets.size(), 0);
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = 0; j < facets.size() && !drop[i]; ++j) {
        if (i == j || !facets[i].subset_of(facets[j])) continue;
        // strictly contained, or a duplicate of an earlier facet
        if (facets[i] != facets[j] || j < i) drop[i] = 1;
      }
    std::vector<Bitset> kept;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (!drop[i]) kept.push_back(std::move(facets[i]));
    return kept;
  }

  std::vector<std::string> names_;
  std::vector<Bitset> facets_;
  std::vector<std::vector<int>> incidence_;
  std::unordered_map<std::string, int> index_;
};

/// Facet index sets of the connected components, ordered by smallest member.
/// Two facets are adjacent when they share a vertex.
inline std::vector<std::vector<int>> connected_components(const FacetComplex& c) {
  UnionFind uf(c.facet_count());
  for (int v = 0; v < c.vertex_count(); ++v) {
    const auto& inc = c.facets_with(v);
    for (std::size_t k = 1; k < inc.size(); ++k) uf.unite(inc[0], inc[k]);
  }
  std::vector<std::vector<int>> comps;
  std::unordered_map<int, int> slot;
  for (int f = 0; f < c.facet_count(); ++f) {
    int root = uf.find(f);
    auto [it, fresh] = slot.emplace(root, static_cast<int>(comps.size()));
    if (fresh) comps.emplace_back();
    comps[it->second].push_back(f);
  }
  return comps;
}

/// An empty complex counts as connected.
inline bool is_connected(const FacetComplex& c) {
  return connected_components(c).size() <= 1;
}

/// Vertices of facet f that belong to no other facet, ascending.
inline std::vector<int> free_vertices(const FacetComplex& c, int f) {
  std::vector<int> out;
  c.facet(f).for_each([&](int v) {
    if (c.facets_with(v).size() == 1) out.push_back(v);
  });
  return out;
}

/// Square-free monomial generators of the facet ideal, one per facet, in
/// facet order. Single-character universes juxtapose ("xyz"); otherwise
/// variables are joined with '*' ("x1*x2*x3").
inline std::vector<std::string> facet_ideal_generators(const FacetComplex& c) {
  std::vector<std::string> out;
  out.reserve(c.facet_count());
  bool compact = c.compact_names();
  for (int f = 0; f < c.facet_count(); ++f) {
    std::string gen;
    c.facet(f).for_each([&](int v) {
      if (!gen.empty() && !compact) gen += '*';
      gen += c.vertex_name(v);
    });
    out.push_back(std::move(gen));
  }
  return out;
}

/// The sub-complex spanned by the given facets, in the given order. Vertex
/// names carry over; ids are re-assigned by first appearance.
inline FacetComplex subcomplex(const FacetComplex& c, std::span<const int> facet_ids) {
  std::vector<std::vector<std::string>> facets;
  facets.reserve(facet_ids.size());
  for (int f : facet_ids) {
    if (f < 0 || f >= c.facet_count()) throw std::invalid_argument("facet index out of range");
    std::vector<std::string> names;
    c.facet(f).for_each([&](int v) { names.push_back(c.vertex_name(v)); });
    facets.push_back(std::move(names));
  }
  return FacetComplex::from_names(facets);
}

}  // namespace simptree
