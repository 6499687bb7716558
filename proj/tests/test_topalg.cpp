#include <doctest.h>

#include "finref/topalg.hpp"

using namespace finref;

namespace {

TopStructure z4_coset() {
  // Z4 with the coset topology of the subgroup {0,2}: opens are the two
  // cosets and their unions.
  FinSpace X = make_space(4, {0, bit(0) | bit(2), bit(1) | bit(3), 15});
  return make_topstructure(cyclic_group(4), X);
}

}  // namespace

TEST_CASE("continuity modes of group topologies") {
  TopStructure T = z4_coset();
  CHECK(continuity_mode(T) == ContinuityMode::Topological);

  TopStructure D = make_topstructure(cyclic_group(4), discrete_space(4));
  CHECK(continuity_mode(D) == ContinuityMode::Topological);

  TopStructure I = make_topstructure(cyclic_group(2), indiscrete_space(2));
  CHECK(continuity_mode(I) == ContinuityMode::Topological);

  // Z2 on the two-point connected space: inversion swaps the points, so
  // even the translations fail.
  TopStructure S = make_topstructure(cyclic_group(2), sierpinski());
  CHECK(continuity_mode(S) == ContinuityMode::Neither);
  GroupPredicates gp = group_predicates(S);
  CHECK(!gp.left_topological);
  CHECK(!gp.semitopological);
  CHECK(!gp.topological);
}

TEST_CASE("group predicates on the coset topology") {
  GroupPredicates gp = group_predicates(z4_coset());
  CHECK(gp.left_topological);
  CHECK(gp.right_topological);
  CHECK(gp.semitopological);
  CHECK(gp.topological);
}

TEST_CASE("carrier sizes must match") {
  CHECK_THROWS_AS(make_topstructure(cyclic_group(2), discrete_space(3)),
                  Error);
}

TEST_CASE("pushing the structure along a reflection") {
  TopStructure T = z4_coset();
  TopStructure R = induced_reflection_structure(T, Axiom::T1);
  CHECK(R.alg.n == 2);
  CHECK(same_space(R.space, discrete_space(2)));
  CHECK(algebra_isomorphic(R.alg, cyclic_group(2)).has_value());

  TopStructure I = make_topstructure(cyclic_group(2), indiscrete_space(2));
  TopStructure R0 = induced_reflection_structure(I, Axiom::T0);
  CHECK(R0.alg.n == 1);
}

TEST_CASE("maltsev witnesses") {
  FinSpace X = indiscrete_space(3);
  // phi(x,y,z) = x - y + z mod 3.
  std::vector<int> phi(27);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        phi[(x * 3 + y) * 3 + z] = ((x - y + z) % 3 + 3) % 3;
  MaltsevWitness W = is_maltsev(X, phi);
  CHECK(W.mode == ContinuityMode::Topological);
  CHECK(W.apply(1, 1, 2) == 2);
  CHECK(W.apply(2, 1, 1) == 2);

  // First projection is not a Mal'tsev operation: phi(x,y,y) must be x but
  // phi(y,y,x) would also have to be x.
  std::vector<int> proj(27);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) proj[(x * 3 + y) * 3 + z] = x;
  CHECK_THROWS_AS(is_maltsev(X, proj), Error);
}

TEST_CASE("maltsev quotients have open projections") {
  TopStructure T = z4_coset();
  // phi(x,y,z) = x - y + z, the group Mal'tsev term.
  std::vector<int> phi(64);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        phi[(x * 4 + y) * 4 + z] = ((x - y + z) % 4 + 4) % 4;
  MaltsevWitness W = is_maltsev(T.space, phi);
  CHECK(W.mode == ContinuityMode::Topological);

  Partition cosets = make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)});
  CHECK(maltsev_quotient_open(W, cosets));
  CHECK(maltsev_reflection_open(W, Axiom::T1));
  CHECK(maltsev_reflection_open(W, Axiom::T0));
  CHECK_THROWS_AS(maltsev_reflection_open(W, Axiom::CReg), Error);
}

TEST_CASE("smallest closed subgroup") {
  CHECK(smallest_closed_subgroup(z4_coset()) == (bit(0) | bit(2)));
  TopStructure I = make_topstructure(cyclic_group(2), indiscrete_space(2));
  CHECK(smallest_closed_subgroup(I) == full_mask(2));
  TopStructure D = make_topstructure(cyclic_group(4), discrete_space(4));
  CHECK(smallest_closed_subgroup(D) == bit(0));
}

TEST_CASE("t1 reflection of a group by closed-subgroup cosets") {
  TopStructure R = t1_reflection_group(z4_coset());
  CHECK(R.alg.n == 2);
  CHECK(same_space(R.space, discrete_space(2)));
  CHECK(algebra_isomorphic(R.alg, cyclic_group(2)).has_value());

  // Agreement with the space-level reflection pushforward.
  TopStructure R2 = induced_reflection_structure(z4_coset(), Axiom::T1);
  CHECK(algebra_isomorphic(R.alg, R2.alg).has_value());
  CHECK(is_homeomorphic(R.space, R2.space).has_value());

  TopStructure I = make_topstructure(cyclic_group(2), indiscrete_space(2));
  CHECK(t1_reflection_group(I).alg.n == 1);
}

TEST_CASE("morphisms survive the reflection") {
  TopStructure T = z4_coset();
  TopStructure Z2d = make_topstructure(cyclic_group(2), discrete_space(2));
  CHECK(reflect_morphism_check(T, Z2d, {0, 1, 0, 1}, Axiom::T1));
}
