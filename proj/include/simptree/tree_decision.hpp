#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "simptree/cycles.hpp"
#include "simptree/relations.hpp"
#include "simptree/union_find.hpp"

namespace simptree {

enum class Variant { baseline, useless_removal, connection_set, incidence_matrix, naive };

inline std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::baseline: return "baseline";
    case Variant::useless_removal: return "useless_removal";
    case Variant::connection_set: return "connection_set";
    case Variant::incidence_matrix: return "incidence_matrix";
    case Variant::naive: return "naive";
  }
  return "?";
}

enum class TripleStage { comparable, disconnected, cycle_found };

struct TripleOutcome {
  int f = -1, g1 = -1, g2 = -1;
  TripleStage stage = TripleStage::comparable;
  std::vector<int> path;  // g1..g2 through the residue, filled on cycle_found
};

struct DecisionStats {
  std::uint64_t triples_enumerated = 0;
  std::uint64_t comparability_rejections = 0;
  std::uint64_t connectivity_checks = 0;
  std::uint64_t cycle_triples = 0;
  std::uint64_t facets_removed = 0;
  Variant variant = Variant::baseline;
};

struct Verdict {
  bool is_tree = true;
  std::optional<CycleCertificate> witness;
  DecisionStats stats;
};

struct DecisionOptions {
  // Stop at the first satisfied triple. Full enumeration is what makes the
  // counters meaningful, so benchmarks switch this off.
  bool early_exit = true;
  bool extract_witness = true;
};

// Evaluate one triple in the full complex: comparable traces are rejected
// outright, otherwise connectivity across the residue decides, and a
// connecting path is returned as evidence.
inline TripleOutcome triple_condition(const FacetComplex& c, int f, int g1, int g2) {
  const int l = c.facet_count();
  if (f < 0 || g1 < 0 || g2 < 0 || f >= l || g1 >= l || g2 >= l) {
    throw std::out_of_range("facet index out of range");
  }
  if (f == g1 || f == g2 || g1 == g2) throw std::invalid_argument("facets must be distinct");
  TripleOutcome out{f, g1, g2, TripleStage::comparable, {}};
  if (leq(c, g1, g2, f) || leq(c, g2, g1, f)) return out;
  auto member = detail::residue_members(c, f, g1, g2, {});
  out.path = detail::path_in_residue(c, f, member, g1, g2);
  out.stage = out.path.empty() ? TripleStage::disconnected : TripleStage::cycle_found;
  return out;
}

namespace detail {

class DecisionEngine {
 public:
  DecisionEngine(const FacetComplex& c, Variant variant, DecisionOptions opt)
      : c_(c), opt_(opt), l_(c.facet_count()), uf_(c.facet_count()) {
    stats_.variant = variant;
    prune_ = variant != Variant::baseline;
    sig_cached_ = variant == Variant::incidence_matrix;
    intersecting_only_ =
        variant == Variant::connection_set || variant == Variant::incidence_matrix;
  }

  Verdict run() {
    if (!is_connected(c_)) {
      throw std::invalid_argument("complex is disconnected; split into components first");
    }
    alive_.assign(l_, 1);
    member_.assign(l_, 0);
    if (sig_cached_) sig_.assign(l_, Bitset(c_.vertex_count()));

    for (int f = 0; f < l_ && !(done_ && opt_.early_exit); ++f) {
      bool fruitful = scan_outer(f);
      if (prune_ && !fruitful && !(done_ && opt_.early_exit)) {
        alive_[f] = 0;
        ++stats_.facets_removed;
      }
    }
    return {!done_, std::move(witness_), stats_};
  }

 private:
  bool scan_outer(int f) {
    // Signatures are refreshed for every alive facet, not just the candidate
    // pairs: facets missing f entirely still participate in residues whose
    // target trace is empty.
    if (sig_cached_) {
      for (int h = 0; h < l_; ++h) {
        if (h == f || !alive_[h]) continue;
        sig_[h] = c_.facet(h);
        sig_[h] &= c_.facet(f);
      }
    }
    cand_.clear();
    for (int h = 0; h < l_; ++h) {
      if (h == f || !alive_[h]) continue;
      if (intersecting_only_) {
        if (sig_cached_ ? sig_[h].none() : !c_.facet(h).intersects(c_.facet(f))) continue;
      }
      cand_.push_back(h);
    }

    bool fruitful = false;
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      for (std::size_t j = i + 1; j < cand_.size(); ++j) {
        const int g1 = cand_[i], g2 = cand_[j];
        ++stats_.triples_enumerated;
        if (comparable(f, g1, g2)) {
          ++stats_.comparability_rejections;
          continue;
        }
        ++stats_.connectivity_checks;
        if (!residue_connected(f, g1, g2)) continue;
        ++stats_.cycle_triples;
        fruitful = true;
        if (!done_) {
          done_ = true;
          if (opt_.extract_witness) witness_ = cycle_from_triple(c_, f, g1, g2);
        }
        if (opt_.early_exit) return true;
      }
    }
    return fruitful;
  }

  bool comparable(int f, int g1, int g2) const {
    if (sig_cached_) return sig_[g1].subset_of(sig_[g2]) || sig_[g2].subset_of(sig_[g1]);
    return leq(c_, g1, g2, f) || leq(c_, g2, g1, f);
  }

  // Union-find sweep over the residue members' vertices away from f.
  bool residue_connected(int f, int g1, int g2) {
    const Bitset& fv = c_.facet(f);
    if (sig_cached_) {
      Bitset target = sig_[g1] & sig_[g2];
      for (int h = 0; h < l_; ++h) {
        member_[h] = alive_[h] && h != f && (h == g1 || h == g2 || sig_[h] == target);
      }
    } else {
      Bitset target = c_.facet(g1) & c_.facet(g2);
      target &= fv;
      for (int h = 0; h < l_; ++h) {
        member_[h] = alive_[h] && h != f &&
                     (h == g1 || h == g2 || intersection_equals(c_.facet(h), fv, target));
      }
    }
    uf_.reset(l_);
    for (int w = 0; w < c_.vertex_count(); ++w) {
      if (fv.test(w)) continue;
      int prev = -1;
      for (int h : c_.facets_with(w)) {
        if (!member_[h]) continue;
        if (prev >= 0) uf_.unite(prev, h);
        prev = h;
      }
    }
    return uf_.same(g1, g2);
  }

  const FacetComplex& c_;
  DecisionOptions opt_;
  int l_;
  UnionFind uf_;
  bool prune_ = false;
  bool sig_cached_ = false;
  bool intersecting_only_ = false;
  bool done_ = false;
  DecisionStats stats_;
  std::optional<CycleCertificate> witness_;
  std::vector<char> alive_;
  std::vector<char> member_;
  std::vector<int> cand_;
  std::vector<Bitset> sig_;
};

}  // namespace detail

// The four polynomial decision procedures. All require a connected complex
// and agree on the verdict; they differ in how much enumeration and caching
// they do, which the stats expose.
inline Verdict is_tree_baseline(const FacetComplex& c, DecisionOptions opt = {}) {
  return detail::DecisionEngine(c, Variant::baseline, opt).run();
}

inline Verdict is_tree_useless_removal(const FacetComplex& c, DecisionOptions opt = {}) {
  return detail::DecisionEngine(c, Variant::useless_removal, opt).run();
}

inline Verdict is_tree_connection_set(const FacetComplex& c, DecisionOptions opt = {}) {
  return detail::DecisionEngine(c, Variant::connection_set, opt).run();
}

inline Verdict is_tree_incidence_matrix(const FacetComplex& c, DecisionOptions opt = {}) {
  return detail::DecisionEngine(c, Variant::incidence_matrix, opt).run();
}

inline Verdict decide_tree(const FacetComplex& c, Variant variant, DecisionOptions opt = {}) {
  if (variant == Variant::naive) throw std::invalid_argument("naive mode is not a decision variant");
  return detail::DecisionEngine(c, variant, opt).run();
}

// Facets whose traces of all other facets line up in a single chain. Such a
// facet is a leaf in every sub-complex containing it and can never sit on a
// cycle.
inline bool is_reducible_leaf(const FacetComplex& c, int f) {
  std::vector<Bitset> traces;
  traces.reserve(c.facet_count());
  for (int g = 0; g < c.facet_count(); ++g) {
    if (g == f) {
      continue;
    }
    traces.push_back(c.facet(g) & c.facet(f));
  }
  std::sort(traces.begin(), traces.end(),
            [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
  for (std::size_t k = 0; k + 1 < traces.size(); ++k) {
    if (!traces[k].subset_of(traces[k + 1])) return false;
  }
  return true;
}

inline std::vector<int> reducible_leaves(const FacetComplex& c) {
  std::vector<int> out;
  for (int f = 0; f < c.facet_count(); ++f) {
    if (is_reducible_leaf(c, f)) out.push_back(f);
  }
  return out;
}

// Peel reducible leaves until none remain. Returns the remainder and the
// removed facets as indices into the original complex, in removal order.
// The remainder has a cycle exactly when the input does, but the peeling is
// only a preprocessing aid: an empty remainder proves a forest, a nonempty
// one decides nothing by itself.
inline std::pair<FacetComplex, std::vector<int>> strip_reducible(const FacetComplex& c) {
  FacetComplex current = c;
  std::vector<int> original(c.facet_count());
  for (int f = 0; f < c.facet_count(); ++f) original[f] = f;
  std::vector<int> removed;
  for (;;) {
    auto drop = reducible_leaves(current);
    if (drop.empty()) break;
    std::vector<char> gone(current.facet_count(), 0);
    for (int f : drop) {
      gone[f] = 1;
      removed.push_back(original[f]);
    }
    std::vector<int> keep;
    std::vector<int> next_original;
    for (int f = 0; f < current.facet_count(); ++f) {
      if (!gone[f]) {
        keep.push_back(f);
        next_original.push_back(original[f]);
      }
    }
    current = subcomplex(current, keep);
    original = std::move(next_original);
  }
  return {std::move(current), std::move(removed)};
}

// Which facets lie on some cycle, each with a certificate through it. A facet
// sits on a cycle exactly when it heads a satisfied triple, so one ascending
// scan per facet suffices.
inline std::map<int, CycleCertificate> cyclic_facets(const FacetComplex& c) {
  std::map<int, CycleCertificate> out;
  const int l = c.facet_count();
  for (int f = 0; f < l; ++f) {
    bool hit = false;
    for (int i = 0; i < l && !hit; ++i) {
      if (i == f) continue;
      for (int j = i + 1; j < l && !hit; ++j) {
        if (j == f) continue;
        if (leq(c, i, j, f) || leq(c, j, i, f)) continue;
        auto member = detail::residue_members(c, f, i, j, {});
        auto path = detail::path_in_residue(c, f, member, i, j);
        if (path.empty()) continue;
        std::vector<int> ordering{f};
        ordering.insert(ordering.end(), path.begin(), path.end());
        out.emplace(f, make_certificate(c, std::move(ordering)));
        hit = true;
      }
    }
  }
  return out;
}

// Forest check for arbitrary, possibly disconnected complexes: every
// connected component must be a tree.
inline bool is_forest(const FacetComplex& c) {
  for (const auto& group : connected_components(c)) {
    auto part = subcomplex(c, group);
    if (!is_tree_incidence_matrix(part).is_tree) return false;
  }
  return true;
}

}  // namespace simptree
