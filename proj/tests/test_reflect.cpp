#include <doctest.h>

#include "finref/category.hpp"
#include "finref/mutate.hpp"
#include "finref/reflect.hpp"

using namespace finref;

namespace {

FinSpace x1_space() {
  return make_space(3, {0, 1, 2, 3, 7}, {"a", "b", "p"});
}

FinSpace x2_space() {
  // One open point under two generic ones: opens {}, {p}, {a,p}, {b,p}, all.
  return make_space(3, {0, 4, 5, 6, 7}, {"a", "b", "p"});
}

}  // namespace

TEST_CASE("separation predicates on small spaces") {
  FinSpace S = sierpinski();
  CHECK(is_t0(S));
  CHECK(!is_t1(S));
  CHECK(is_t1(discrete_space(3)));
  CHECK(is_t2(discrete_space(3)));
  CHECK(!is_t0(indiscrete_space(2)));
  CHECK(is_regular(indiscrete_space(2)));
  CHECK(is_completely_regular(indiscrete_space(2)));
  CHECK(is_t35(discrete_space(2)));

  FinSpace X = x1_space();
  CHECK(is_t0(X));
  CHECK(!is_t1(X));
  CHECK(!is_regular(X));
  CHECK(!is_completely_regular(X));
}

TEST_CASE("complete separation goes through weak components") {
  FinSpace two = disjoint_union(sierpinski(), sierpinski());
  CHECK(completely_separated(two, 3, 12));
  CHECK(!completely_separated(two, 1, 2));
  CHECK(!completely_separated(x1_space(), 1, 2));
}

TEST_CASE("t0 reflection identifies topologically equal points") {
  FinSpace X = make_space(2, {0, 3});  // indiscrete
  Reflection r = reflect(X, Axiom::T0);
  CHECK(r.target.n == 1);
  CHECK(reflect(sierpinski(), Axiom::T0).target.n == 2);
}

TEST_CASE("reflections of the generic extension over two open points") {
  FinSpace X = x1_space();
  for (Axiom a : {Axiom::T1, Axiom::T2, Axiom::Urysohn, Axiom::FH, Axiom::T35})
    CHECK(reflect(X, a).target.n == 1);
  // The completely regular reflection keeps the carrier but forgets the
  // topology.
  Reflection creg = reflect(X, Axiom::CReg);
  CHECK(creg.target.n == 3);
  CHECK(same_space(creg.target, indiscrete_space(3)));
  Reflection reg = reflect(X, Axiom::Reg);
  CHECK(same_space(reg.target, indiscrete_space(3)));
}

TEST_CASE("reflections of the dual extension") {
  FinSpace X = x2_space();
  CHECK(reflect(X, Axiom::T1).target.n == 1);
  CHECK(reflect(X, Axiom::T0).target.n == 3);
}

TEST_CASE("all engines agree where they apply") {
  for (const FinSpace& X :
       {sierpinski(), x1_space(), x2_space(), indiscrete_space(3)}) {
    Reflection t1d = reflect(X, Axiom::T1, Method::Direct);
    Reflection t1p = reflect(X, Axiom::T1, Method::Partitions);
    CHECK(t1d.kernel() == t1p.kernel());
    CHECK(is_homeomorphic(t1d.target, t1p.target).has_value());

    Reflection t2d = reflect(X, Axiom::T2, Method::Direct);
    Reflection t2c = reflect(X, Axiom::T2, Method::ClosedRel);
    Reflection t2p = reflect(X, Axiom::T2, Method::Partitions);
    CHECK(t2d.kernel() == t2p.kernel());
    CHECK(t2c.kernel() == t2p.kernel());
  }
}

TEST_CASE("method preconditions") {
  FinSpace S = sierpinski();
  CHECK_THROWS_AS(reflect(S, builtin(Axiom::CReg), Method::Direct), Error);
  CHECK_THROWS_AS(reflect(S, builtin(Axiom::CReg), Method::Partitions), Error);
  CHECK_THROWS_AS(reflect(S, builtin(Axiom::T1), Method::ClosedRel), Error);
  CHECK_NOTHROW(reflect(S, builtin(Axiom::T1), Method::Generated));
}

TEST_CASE("smallest closed equivalence") {
  ClosedRelation diag = smallest_closed_equivalence(discrete_space(3));
  CHECK(diag.is_diagonal());

  ClosedRelation r = smallest_closed_equivalence(sierpinski());
  CHECK(!r.is_diagonal());
  CHECK(r.to_partition().block_count() == 1);
  CHECK(relation_closed_in_square(sierpinski(), r.rows));
}

TEST_CASE("universal property verification") {
  FinSpace X = x1_space();
  Reflection r = reflect(X, Axiom::T1);
  CHECK(verify_universal_property(r, builtin(Axiom::T1)).ok);

  // A wrong candidate: the identity arrow into a non-member.
  Reflection fake{X, X, {0, 1, 2}, "t1", Method::Direct, 0};
  UniversalPropertyResult u = verify_universal_property(fake, builtin(Axiom::T1));
  CHECK(!u.ok);

  // A member target that identifies too much fails the factorization.
  Reflection collapsed{sierpinski(), discrete_space(1), {0, 0}, "t0",
                       Method::Direct, 0};
  CHECK(!verify_universal_property(collapsed, builtin(Axiom::T0)).ok);
}

TEST_CASE("composing nested reflections") {
  CHECK(compose_reflections_check(x1_space(), Axiom::T0, Axiom::T1));
  CHECK(compose_reflections_check(x2_space(), Axiom::T2, Axiom::T35));
  CHECK_THROWS_AS(compose_reflections_check(x1_space(), Axiom::T1, Axiom::T0),
                  Error);
}

TEST_CASE("class-open sets") {
  FinSpace X = x1_space();
  std::vector<Mask> t1open = c_open_sets(X, Axiom::T1);
  CHECK(t1open == std::vector<Mask>{0, 7});
  CHECK(c_open_sets(X, Axiom::T0) == open_sets(X));
  CHECK(is_c_open(X, 7, builtin(Axiom::T1)));
  CHECK(!is_c_open(X, 3, builtin(Axiom::T1)));
  CHECK(is_t1_closed(X, 0));
  CHECK(is_t1_closed(X, 7));
  CHECK(!is_t1_closed(X, 4));
}

TEST_CASE("oset topology agrees with the reflection preimages") {
  for (const FinSpace& X : {sierpinski(), x1_space(), x2_space()})
    for (Axiom a : kAllAxioms)
      CHECK(oset_topology(X, builtin(a)) == c_open_sets(X, builtin(a)));
  CHECK(le_subspace_check(x1_space(), builtin(Axiom::T0)));
  CHECK(le_subspace_check(x1_space(), builtin(Axiom::T1)));
}

TEST_CASE("product preservation for t1 on a generic pair") {
  std::vector<FinSpace> pair = {x1_space(), sierpinski()};
  ProductComparison pc = product_preservation(pair, Axiom::T1);
  CHECK(pc.mu_well_defined);
  CHECK(pc.is_homeo);
}

TEST_CASE("subspace preservation and the two conditions") {
  FinSpace X = x1_space();
  CHECK(!preserves_subspace(X, 3, Axiom::T1));
  auto [c1, c2] = pr_subspace_criterion(X, 3, Axiom::T1);
  CHECK(!c1);
  CHECK(preserves_subspace(X, 3, Axiom::T0));
  CHECK(preserves_subspace(X, 5, Axiom::T1));
  CHECK_THROWS_AS(preserves_subspace(X, 0, Axiom::T1), Error);
  // c2 is reported but never contradicts the conjunction.
  CHECK(preserves_subspace(X, 3, Axiom::T1) == (c1 && c2));
}

TEST_CASE("membership in a generated class") {
  std::vector<FinSpace> gens = {sierpinski()};
  CHECK(in_generated_class(sierpinski(), gens));
  CHECK(in_generated_class(discrete_space(2), gens));
  CHECK(in_generated_class(x1_space(), gens));  // every t0 space qualifies
  CHECK(!in_generated_class(indiscrete_space(2), gens));
}

TEST_CASE("bounded extension of subspace maps") {
  std::vector<FinSpace> gens = {sierpinski()};
  FinSpace X = x1_space();
  // {a,p} sits inside the class generated by the two-point connected space.
  CHECK(is_a_embedded(X, 5, gens));
  CHECK_THROWS_AS(is_a_embedded(X, 0, gens), Error);
}

TEST_CASE("coincidence of reflections") {
  FinSpace X = x1_space();
  CHECK(coincide(X, Axiom::T1, Axiom::T35));
  CHECK(coincide_criterion(X, Axiom::T1, Axiom::T35));
  CHECK(!coincide(X, Axiom::T0, Axiom::T1));
  CHECK_THROWS_AS(coincide(X, Axiom::CReg, Axiom::T35), Error);
  CHECK_THROWS_AS(coincide(X, Axiom::T35, Axiom::T1), Error);
  CHECK(t1_closed_separation(X));
  CHECK(t1_closed_separation(discrete_space(3)));
}

TEST_CASE("nesting table") {
  CHECK(class_nested_in(Axiom::T35, Axiom::T0));
  CHECK(class_nested_in(Axiom::T2, Axiom::T1));
  CHECK(class_nested_in(Axiom::T35, Axiom::CReg));
  CHECK(class_nested_in(Axiom::CReg, Axiom::Reg));
  CHECK(!class_nested_in(Axiom::Reg, Axiom::T0));
  // The table records the general containments, so t1 is not inside t2 even
  // though their finite members coincide.
  CHECK(!class_nested_in(Axiom::T1, Axiom::T2));
}

TEST_CASE("mutations disable the caches and break the engines") {
  FinSpace S = sierpinski();
  set_mutation("t1-skip-closure", true);
  Reflection broken = reflect(S, Axiom::T1, Method::Direct);
  set_mutation("t1-skip-closure", false);
  CHECK(broken.target.n == 2);  // merging skipped entirely
  CHECK(reflect(S, Axiom::T1, Method::Direct).target.n == 1);

  set_mutation("scr-skip-alternation", true);
  CHECK(smallest_closed_equivalence(S).is_diagonal());
  set_mutation("scr-skip-alternation", false);
  CHECK(!smallest_closed_equivalence(S).is_diagonal());

  CHECK_THROWS_AS(set_mutation("no-such-mutation", true), Error);
}
