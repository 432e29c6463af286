#include <catch2/catch_amalgamated.hpp>

#include "simptree/bitset.hpp"
#include "simptree/union_find.hpp"

using simptree::Bitset;

TEST_CASE("bitset basics") {
  Bitset b(70);
  REQUIRE(b.universe() == 70);
  REQUIRE(b.none());
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(69);
  REQUIRE(b.count() == 4);
  REQUIRE(b.test(63));
  REQUIRE(b.test(64));
  REQUIRE_FALSE(b.test(1));
  b.reset(63);
  REQUIRE_FALSE(b.test(63));
  REQUIRE(b.to_vector() == std::vector<int>{0, 64, 69});
}

TEST_CASE("bitset iteration crosses word boundaries") {
  Bitset b(130);
  for (int i : {3, 64, 65, 128, 129}) b.set(i);
  std::vector<int> seen;
  b.for_each([&](int i) { seen.push_back(i); });
  REQUIRE(seen == std::vector<int>{3, 64, 65, 128, 129});
  REQUIRE(b.first() == 3);
  REQUIRE(b.next(3) == 64);
  REQUIRE(b.next(129) == -1);
}

TEST_CASE("bitset set algebra") {
  Bitset a(10), b(10), c(10);
  for (int i : {1, 3, 5}) a.set(i);
  for (int i : {3, 5, 7}) b.set(i);
  REQUIRE((a & b).to_vector() == std::vector<int>{3, 5});
  REQUIRE((a | b).to_vector() == std::vector<int>{1, 3, 5, 7});
  REQUIRE((a - b).to_vector() == std::vector<int>{1});
  REQUIRE(a.intersects(b));
  REQUIRE_FALSE((a - b).intersects(b));
  REQUIRE((a & b).subset_of(a));
  REQUIRE_FALSE(a.subset_of(b));

  c.or_and(a, b);  // c |= a & b
  REQUIRE(c == (a & b));
  REQUIRE(intersection_equals(a, b, c));  // found through its Bitset arguments
  c.set(9);
  REQUIRE_FALSE(intersection_equals(a, b, c));
}

TEST_CASE("bitset equality and hash") {
  Bitset a(65), b(65);
  a.set(64);
  b.set(64);
  REQUIRE(a == b);
  REQUIRE(a.hash() == b.hash());
  b.set(0);
  REQUIRE(a != b);
}

TEST_CASE("union find") {
  simptree::UnionFind uf(6);
  REQUIRE(uf.unite(0, 1));
  REQUIRE(uf.unite(1, 2));
  REQUIRE_FALSE(uf.unite(0, 2));
  REQUIRE(uf.same(0, 2));
  REQUIRE_FALSE(uf.same(0, 3));
  uf.reset(3);
  REQUIRE_FALSE(uf.same(0, 1));
}
