#include <doctest.h>

#include <set>

#include "finref/category.hpp"
#include "finref/enumerate.hpp"

using namespace finref;

TEST_CASE("labeled topology counts") {
  CHECK(count_topologies(0) == 1);
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(4) == 355);
}

TEST_CASE("labeled preorder counts agree with the topology counts") {
  for (int n = 0; n <= 4; ++n)
    CHECK(count_preorders(n) == count_topologies(n));
}

TEST_CASE("topology enumeration has no duplicates") {
  std::set<std::vector<Mask>> seen;
  for_each_topology(3, [&](const FinSpace& X) {
    CHECK(seen.insert(X.min_open).second);
  });
  CHECK(seen.size() == 29);
}

TEST_CASE("the enumeration guard throws beyond the bound") {
  CHECK_THROWS_AS(count_topologies(40), Error);
  CHECK(count_topologies(5, 5) == 6942);
}

TEST_CASE("special space counts inside the sweep") {
  int discrete = 0, t0 = 0;
  for (const FinSpace& X : all_spaces_of(3)) {
    if (is_t1(X)) ++discrete;
    if (is_t0(X)) ++t0;
  }
  CHECK(discrete == 1);  // finite t1 forces the discrete topology
  CHECK(t0 == 19);       // labeled posets on three elements
}

TEST_CASE("continuous map enumeration") {
  FinSpace S = sierpinski();
  auto maps = continuous_maps(S, S);
  CHECK(maps.size() == 3);  // both constants and the identity
  for (const CMap& f : maps) CHECK(is_continuous(f));

  auto from_discrete = continuous_maps(discrete_space(2), S);
  CHECK(from_discrete.size() == 4);

  auto to_point = continuous_maps(S, discrete_space(1));
  CHECK(to_point.size() == 1);
}

TEST_CASE("partition enumeration hits the Bell numbers") {
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(1) == 1);
  CHECK(count_partitions(4) == 15);
  CHECK(count_partitions(6) == 203);
}
