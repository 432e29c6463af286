#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simptree/relations.hpp"
#include "simptree/tree_decision.hpp"

namespace simptree {

enum class GraftFailure { uncovered_vertex, intersecting_leaves, irreducible_leaf };

struct GraftReport {
  std::vector<int> leaves;
  std::vector<int> non_leaves;
  bool grafted = false;
  std::optional<GraftFailure> failure;
};

// Decide graftedness by the leaf-centric characterization: every vertex lies
// in exactly one leaf, and each leaf's traces form a chain. Failures are
// reported by the first check that trips, in the fixed order below.
inline GraftReport is_grafted(const FacetComplex& c) {
  GraftReport r;
  for (int f = 0; f < c.facet_count(); ++f) {
    (leaf_status(c, f).is_leaf ? r.leaves : r.non_leaves).push_back(f);
  }

  Bitset leaf_union(c.vertex_count());
  for (int f : r.leaves) leaf_union |= c.facet(f);
  for (int g : r.non_leaves) {
    if (!c.facet(g).subset_of(leaf_union)) {
      r.failure = GraftFailure::uncovered_vertex;
      return r;
    }
  }

  std::vector<char> claimed(c.vertex_count(), 0);
  for (int f : r.leaves) {
    bool clash = false;
    c.facet(f).for_each([&](int v) {
      if (claimed[v]) clash = true;
      claimed[v] = 1;
    });
    if (clash) {
      r.failure = GraftFailure::intersecting_leaves;
      return r;
    }
  }

  for (int f : r.leaves) {
    if (!is_reducible_leaf(c, f)) {
      r.failure = GraftFailure::irreducible_leaf;
      return r;
    }
  }

  r.grafted = true;
  return r;
}

struct CoverBoundError : std::runtime_error {
  explicit CoverBoundError(int n, int bound)
      : std::runtime_error("cover search limited to " + std::to_string(bound) +
                           " vertices, got " + std::to_string(n)) {}
};

struct CoverReport {
  // Every inclusion-minimal vertex cover, each as ascending vertex ids,
  // sorted lexicographically.
  std::vector<std::vector<int>> minimal_covers;
  int alpha = 0;  // smallest cover size
  bool unmixed = true;
  int height = 0;   // equals alpha
  int dim = 0;      // vertices minus alpha
};

namespace detail {

class CoverSearch {
 public:
  explicit CoverSearch(const FacetComplex& c)
      : c_(c), cover_(c.vertex_count()), banned_(c.vertex_count()) {}

  std::vector<std::vector<int>> run() {
    descend();
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Branch on the vertices of the first uncovered facet; once a branch for v
  // is explored, v is banned from the remaining branches of this node, so no
  // cover is produced twice.
  void descend() {
    int open = -1;
    for (int f = 0; f < c_.facet_count(); ++f) {
      if (!c_.facet(f).intersects(cover_)) {
        open = f;
        break;
      }
    }
    if (open < 0) {
      emit_if_minimal();
      return;
    }
    std::vector<int> picks;
    c_.facet(open).for_each([&](int v) {
      if (banned_.test(v)) return;
      cover_.set(v);
      descend();
      cover_.reset(v);
      banned_.set(v);
      picks.push_back(v);
    });
    for (int v : picks) banned_.reset(v);
  }

  // Minimal means every chosen vertex is the sole cover member of some facet.
  void emit_if_minimal() {
    std::vector<char> has_private(c_.vertex_count(), 0);
    for (int f = 0; f < c_.facet_count(); ++f) {
      Bitset cap = c_.facet(f) & cover_;
      if (cap.count() == 1) has_private[cap.first()] = 1;
    }
    bool minimal = true;
    cover_.for_each([&](int v) {
      if (!has_private[v]) minimal = false;
    });
    if (minimal) found_.push_back(cover_.to_vector());
  }

  const FacetComplex& c_;
  Bitset cover_;
  Bitset banned_;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

inline CoverReport minimal_vertex_covers(const FacetComplex& c, int max_n = 25) {
  if (c.vertex_count() > max_n) throw CoverBoundError(c.vertex_count(), max_n);
  CoverReport r;
  r.minimal_covers = detail::CoverSearch(c).run();
  r.alpha = c.vertex_count();
  for (const auto& cov : r.minimal_covers) {
    r.alpha = std::min(r.alpha, static_cast<int>(cov.size()));
  }
  for (const auto& cov : r.minimal_covers) {
    if (static_cast<int>(cov.size()) != r.alpha) r.unmixed = false;
  }
  r.height = r.alpha;
  r.dim = c.vertex_count() - r.alpha;
  return r;
}

enum class CmVerdict { yes, no, unknown };

inline std::string_view cm_verdict_name(CmVerdict v) {
  switch (v) {
    case CmVerdict::yes: return "yes";
    case CmVerdict::no: return "no";
    case CmVerdict::unknown: return "unknown";
  }
  return "?";
}

// Everything this tool can say about Cohen-Macaulayness of the facet ideal:
// grafted complexes qualify outright; for trees the question reduces to
// graftedness (equivalently unmixedness); anything else is out of reach.
struct CmReport {
  bool is_tree = false;
  GraftReport graft;
  std::optional<CoverReport> covers;  // absent when the vertex bound is exceeded
  CmVerdict verdict = CmVerdict::unknown;
};

inline CmReport cm_report(const FacetComplex& c, int max_n = 25) {
  CmReport r;
  r.is_tree = is_connected(c) && is_tree_incidence_matrix(c).is_tree;
  r.graft = is_grafted(c);
  if (c.vertex_count() <= max_n) r.covers = minimal_vertex_covers(c, max_n);
  if (r.graft.grafted) {
    r.verdict = CmVerdict::yes;
  } else if (r.is_tree) {
    r.verdict = CmVerdict::no;
  }
  return r;
}

}  // namespace simptree
