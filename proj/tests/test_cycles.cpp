#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "simptree/cycles.hpp"
#include "simptree/oracle.hpp"
#include "test_support.hpp"

using simptree::Bitset;
using simptree::cone_reduce;
using simptree::CycleCertificate;
using simptree::cycle_from_triple;
using simptree::FacetComplex;
using simptree::is_cycle_naive;
using simptree::make_certificate;
using simptree::verify_certificate;
using testsupport::below;
using testsupport::cx;

TEST_CASE("triangle certificates hold under rotation and reflection") {
  auto tri = cx({"xy", "yz", "zx"});
  std::vector<int> order{0, 1, 2};
  do {
    REQUIRE(verify_certificate(tri, make_certificate(tri, order)));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("no ordering of a tree verifies") {
  auto tree = cx({"xyz", "yzu", "uv"});
  std::vector<int> order{0, 1, 2};
  do {
    REQUIRE_FALSE(verify_certificate(tree, make_certificate(tree, order)));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("coned triangle verifies with the cone point as apex") {
  auto coned = cx({"xya", "yza", "zxa"});
  auto cert = make_certificate(coned, {0, 1, 2});
  REQUIRE(cert.apex.count() == 1);
  REQUIRE(cert.apex.test(*coned.vertex_id("a")));
  REQUIRE(verify_certificate(coned, cert));
}

TEST_CASE("square orderings: cyclic orders pass, crossed orders fail") {
  auto sq = cx({"ab", "bc", "cd", "da"});
  REQUIRE(verify_certificate(sq, make_certificate(sq, {0, 1, 2, 3})));
  REQUIRE(verify_certificate(sq, make_certificate(sq, {1, 2, 3, 0})));
  REQUIRE(verify_certificate(sq, make_certificate(sq, {3, 2, 1, 0})));
  REQUIRE_FALSE(verify_certificate(sq, make_certificate(sq, {0, 2, 1, 3})));
}

TEST_CASE("malformed certificates are rejected loudly") {
  auto tri = cx({"xy", "yz", "zx"});
  REQUIRE_THROWS_AS(make_certificate(tri, {0, 1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(make_certificate(tri, {0, 1, 5}), std::out_of_range);
  REQUIRE_FALSE(verify_certificate(tri, make_certificate(tri, {0, 1})));

  auto cert = make_certificate(tri, {0, 1, 2});
  cert.apex.set(0);  // claim x belongs to every facet
  REQUIRE_FALSE(verify_certificate(tri, cert));
}

TEST_CASE("cutting the common intersection away") {
  auto coned = cx({"xya", "yza", "zxa"});
  auto [apex, reduced] = cone_reduce(coned);
  REQUIRE(apex.count() == 1);
  REQUIRE(reduced == cx({"xy", "yz", "zx"}));

  auto tree = cx({"xyz", "yzu", "uv"});
  auto [none, same] = cone_reduce(tree);
  REQUIRE(none.none());
  REQUIRE(same == tree);

  REQUIRE_THROWS_AS(cone_reduce(cx({"xyz"})), std::invalid_argument);
}

TEST_CASE("verification is invariant under cutting the apex") {
  auto coned = cx({"xya", "yza", "zxa"});
  auto [apex, reduced] = cone_reduce(coned);
  std::vector<int> order{0, 1, 2};
  do {
    REQUIRE(verify_certificate(coned, make_certificate(coned, order)) ==
            verify_certificate(reduced, make_certificate(reduced, order)));
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("building a cycle from a satisfied triple") {
  auto e = cx({"xy", "xz", "yz", "yu", "zt"});
  auto cert = cycle_from_triple(e, 0, 1, 2);
  REQUIRE(cert.ordering == std::vector<int>{0, 1, 2});
  REQUIRE(verify_certificate(e, cert));

  // square plus crossing facet: the residue path from bc to da runs
  // through cd, closing the square
  auto sq = cx({"ab", "bc", "cd", "da", "ce"});
  auto cert2 = cycle_from_triple(sq, 0, 1, 3);
  REQUIRE(cert2.ordering == std::vector<int>{0, 1, 2, 3});
  REQUIRE(verify_certificate(sq, cert2));
  REQUIRE(is_cycle_naive(subcomplex(sq, cert2.ordering)));
}

TEST_CASE("unsatisfied triples refuse to produce a certificate") {
  auto sq = cx({"ab", "bc", "cd", "da", "ce"});
  // bc and cd leave the same trace {c} on ce
  REQUIRE_THROWS_AS(cycle_from_triple(sq, 4, 1, 2), std::invalid_argument);

  auto path = cx({"xy", "yz", "zu", "uv"});
  // incomparable traces on yz, but xy cannot reach zu away from yz
  REQUIRE_THROWS_AS(cycle_from_triple(path, 1, 0, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(cycle_from_triple(path, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("dropping one facet of a verified cycle leaves a two-leaf tree") {
  auto sq = cx({"ab", "bc", "cd", "da", "ce"});
  auto cert = cycle_from_triple(sq, 0, 1, 3);
  const int n = static_cast<int>(cert.ordering.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> keep;
    for (int k = 1; k < n; ++k) keep.push_back(cert.ordering[(i + k) % n]);
    auto rest = subcomplex(sq, keep);
    REQUIRE(simptree::is_connected(rest));
    REQUIRE(simptree::is_forest_naive(rest));
    // leaves are exactly the two cyclic neighbors of the dropped facet,
    // sitting at the ends of keep, and their joints the next facets inward
    for (int k = 0; k < n - 1; ++k) {
      auto status = simptree::leaf_status(rest, k);
      if (k == 0) {
        REQUIRE(status.is_leaf);
        REQUIRE(status.joint == 1);
      } else if (k == n - 2) {
        REQUIRE(status.is_leaf);
        REQUIRE(status.joint == n - 3);
      } else {
        REQUIRE_FALSE(status.is_leaf);
      }
    }
  }
}

TEST_CASE("certificate checks agree with the naive cycle oracle") {
  std::mt19937_64 rng(3021);
  int cycles_met = 0;
  for (int round = 0; round < 250; ++round) {
    auto c = testsupport::random_antichain(rng, 6, 7);
    const int l = c.facet_count();
    if (l < 3) continue;

    // random ordering of a random subset: a passing check must mean the
    // subset really is a cycle
    std::vector<int> pool(l);
    for (int i = 0; i < l; ++i) pool[i] = i;
    for (int i = l - 1; i > 0; --i) {
      std::swap(pool[i], pool[below(rng, static_cast<std::uint64_t>(i + 1))]);
    }
    int take = 3 + static_cast<int>(below(rng, static_cast<std::uint64_t>(l - 2)));
    std::vector<int> order(pool.begin(), pool.begin() + take);
    if (verify_certificate(c, make_certificate(c, order))) {
      REQUIRE(is_cycle_naive(subcomplex(c, order)));
    }

    // and every actual cycle admits some passing rotation
    for (const auto& members : simptree::all_minimal_cycles_naive(c)) {
      ++cycles_met;
      std::vector<int> perm(members.begin() + 1, members.end());
      std::sort(perm.begin(), perm.end());
      bool hit = false;
      do {
        std::vector<int> candidate{members[0]};
        candidate.insert(candidate.end(), perm.begin(), perm.end());
        hit = verify_certificate(c, make_certificate(c, candidate));
      } while (!hit && std::next_permutation(perm.begin(), perm.end()));
      REQUIRE(hit);
    }
  }
  REQUIRE(cycles_met > 10);  // the sample must contain real cycles
}
