#include <doctest.h>

#include "finref/space.hpp"

using namespace finref;

namespace {

FinSpace x1_space() {
  // Two open points under a generic one: opens {}, {0}, {1}, {0,1}, all.
  return make_space(3, {0, 1, 2, 3, 7}, {"a", "b", "p"});
}

}  // namespace

TEST_CASE("make_space validates the family") {
  CHECK_NOTHROW(make_space(2, {0, 2, 3}));
  CHECK_THROWS_AS(make_space(2, {2, 3}), Error);        // empty set missing
  CHECK_THROWS_AS(make_space(3, {0, 1, 2, 7}), Error);  // union {0,1} missing
  CHECK_THROWS_AS(make_space(3, {0, 3, 5, 7}), Error);  // intersection missing
}

TEST_CASE("minimal opens and the specialization order") {
  FinSpace S = sierpinski();
  CHECK(S.min_open[0] == 3);
  CHECK(S.min_open[1] == 2);
  CHECK(S.leq(0, 1));
  CHECK(!S.leq(1, 0));

  FinSpace X = x1_space();
  CHECK(X.min_open[0] == 1);
  CHECK(X.min_open[1] == 2);
  CHECK(X.min_open[2] == 7);
}

TEST_CASE("open sets, closure, hull") {
  FinSpace X = x1_space();
  CHECK(open_set_count(X) == 5);
  CHECK(is_open(X, 3));
  CHECK(!is_open(X, 4));
  CHECK(is_closed(X, 4));
  CHECK(closure(X, 1) == 5);       // cl{a} = {a,p}
  CHECK(closure(X, 2) == 6);       // cl{b} = {b,p}
  CHECK(open_hull(X, 4) == 7);     // smallest open over {p}
  CHECK(open_sets(discrete_space(3)).size() == 8);
  CHECK(open_sets(indiscrete_space(3)).size() == 2);
}

TEST_CASE("weak components and complete separation structure") {
  FinSpace two = disjoint_union(sierpinski(), indiscrete_space(2));
  auto comps = weak_components(two);
  REQUIRE(comps.size() == 2);
  CHECK((comps[0] | comps[1]) == full_mask(4));
  CHECK(weak_components(x1_space()).size() == 1);
}

TEST_CASE("continuity is monotonicity") {
  FinSpace S = sierpinski();
  CHECK(is_continuous(identity_map(S)));
  CHECK(is_continuous(CMap{S, S, {0, 0}}));
  CHECK(!is_continuous(CMap{S, S, {1, 0}}));  // the swap
  CHECK(is_continuous(CMap{discrete_space(2), S, {1, 0}}));
}

TEST_CASE("map predicates") {
  FinSpace X = x1_space();
  FinSpace pt = discrete_space(1);
  CMap collapse{X, pt, {0, 0, 0}};
  MapPredicates p = map_predicates(collapse);
  CHECK(p.continuous);
  CHECK(p.surjective);
  CHECK(p.quotient);
  CHECK(!p.injective);

  // Continuous bijection onto a coarser topology is not a quotient map.
  CMap relax{discrete_space(2), indiscrete_space(2), {0, 1}};
  CHECK(is_continuous(relax));
  CHECK(!is_quotient_map(relax));
}

TEST_CASE("partitions") {
  Partition p = make_partition(4, {bit(0) | bit(2), bit(1), bit(3)});
  CHECK(p.block_of(2) == 0);
  CHECK(p.related(0, 2));
  CHECK(!p.related(0, 1));
  CHECK_THROWS_AS(make_partition(3, {3, 6}), Error);  // overlapping blocks

  Partition q = kernel_partition({0, 1, 0, 1}, 4);
  CHECK(q.block_count() == 2);
  CHECK(meet(p, q) == make_partition(4, {bit(0) | bit(2), bit(1), bit(3)}));
  CHECK(join(p, q) == q);
  CHECK(refines(identity_partition(4), p));
  CHECK(refines(p, total_partition(4)));
  CHECK(refines(p, q));
  CHECK(!refines(q, p));
}

TEST_CASE("binary product of the two-point connected space") {
  FinSpace S = sierpinski();
  std::vector<FinSpace> ss = {S, S};
  ProductSpace P = product(ss);
  CHECK(P.space.n == 4);
  CHECK(open_set_count(P.space) == 6);
  for (const CMap& pr : P.projections) CHECK(is_continuous(pr));
  // On 2x2 the cross topology agrees with the product topology.
  CHECK(same_space(P.space, cross_product(ss)));
}

TEST_CASE("product indexing is row-major, leftmost slowest") {
  std::vector<int> sizes = {2, 3};
  CHECK(product_index(sizes, std::vector<int>{1, 2}) == 5);
  CHECK(product_coords(sizes, 5) == std::vector<int>{1, 2});
  for (int i = 0; i < 6; ++i)
    CHECK(product_index(sizes, product_coords(sizes, i)) == i);
}

TEST_CASE("subspace and quotient") {
  FinSpace X = x1_space();
  SubspaceResult sub = subspace(X, 3);
  CHECK(sub.space.n == 2);
  CHECK(same_space(sub.space, discrete_space(2)));
  CHECK(is_continuous(sub.inclusion));

  QuotientResult q = quotient(X, make_partition(3, {3, 4}));
  CHECK(q.space.n == 2);
  CHECK(is_quotient_map(q.projection));
  // {a,b} maps to an open point, p to a closed one.
  CHECK(is_homeomorphic(q.space, sierpinski()).has_value());

  CHECK(quotient(X, total_partition(3)).space.n == 1);
}

TEST_CASE("final topology matches the quotient construction") {
  FinSpace S = sierpinski();
  auto m = final_min_open(S, {0, 0}, 1);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == 1);
}

TEST_CASE("homeomorphism search") {
  FinSpace S = sierpinski();
  FinSpace flipped = make_space(2, {0, 1, 3});
  auto w = is_homeomorphic(S, flipped);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 1);
  CHECK(!is_homeomorphic(S, discrete_space(2)).has_value());
  CHECK(!is_homeomorphic(S, discrete_space(3)).has_value());
}
