#include <doctest.h>

#include "finref/algebra.hpp"
#include "finref/mutate.hpp"

using namespace finref;

TEST_CASE("term parsing round-trips") {
  const Signature& g = group_signature();
  Term t = parse_term(g, "mul(mul(x,y),z)");
  CHECK(term_to_string(t) == "mul(mul(x,y),z)");
  Term c = parse_term(g, "mul(x,e)");
  CHECK(c.children[1].kind == Term::Kind::Const);

  Equation eq = parse_equation(g, "mul(x,inv(x))=e");
  CHECK(eq.vars == std::vector<std::string>{"x"});

  CHECK_THROWS_AS(parse_term(g, "mul(x)"), Error);     // arity mismatch
  CHECK_THROWS_AS(parse_term(g, "mul(x,y"), Error);    // missing paren
  CHECK_THROWS_AS(parse_equation(g, "mul(x,y)"), Error);  // no equals sign
}

TEST_CASE("evaluation in small groups") {
  Structure z2 = cyclic_group(2);
  Term t = parse_term(z2.sig, "mul(x,inv(x))");
  CHECK(eval_term(z2, t, {{"x", 1}}) == 0);

  Structure z4 = cyclic_group(4);
  CHECK(z4.apply("mul", std::vector<int>{3, 2}) == 1);
  CHECK(z4.apply("inv", std::vector<int>{1}) == 3);
  CHECK(z4.constant("e") == 0);
}

TEST_CASE("equation checking finds counterexamples") {
  Structure z4 = cyclic_group(4);
  CHECK(satisfies(z4).ok);

  // Break associativity in one cell and keep the deferred construction.
  auto tables = z4.tables;
  tables["mul"][1 * 4 + 1] = 3;
  Structure broken = make_structure(z4.sig, 4, z4.const_values, tables, false);
  SatisfiesResult r = satisfies(broken);
  CHECK(!r.ok);
  CHECK(!r.witness.empty());
  CHECK_THROWS_AS(make_structure(z4.sig, 4, z4.const_values, tables), Error);
}

TEST_CASE("make_structure validates shapes") {
  const Signature& g = group_signature();
  Structure z2 = cyclic_group(2);
  auto tables = z2.tables;
  tables["mul"].pop_back();
  CHECK_THROWS_AS(make_structure(g, 2, z2.const_values, tables), Error);
  tables = z2.tables;
  tables["mul"][0] = 7;  // out of carrier range
  CHECK_THROWS_AS(make_structure(g, 2, z2.const_values, tables), Error);
  CHECK_THROWS_AS(make_structure(g, 2, {}, z2.tables), Error);  // e missing
}

TEST_CASE("homomorphisms") {
  Structure z4 = cyclic_group(4);
  Structure z2 = cyclic_group(2);
  CHECK(is_homomorphism({0, 1, 0, 1}, z4, z2));   // reduction mod 2
  CHECK(!is_homomorphism({1, 0, 1, 0}, z4, z2));  // moves the identity
  CHECK(!is_homomorphism({0, 1}, z2, z4));  // 1+1 differs across the carriers
  CHECK(is_homomorphism({0, 2}, z2, z4));
}

TEST_CASE("congruences of the four-element cyclic group") {
  Structure z4 = cyclic_group(4);
  auto cong = all_congruences(z4);
  CHECK(cong.size() == 3);

  Partition cosets = make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)});
  CHECK(is_congruence(z4, cosets));
  Partition bad = make_partition(4, {bit(0) | bit(1), bit(2) | bit(3)});
  CHECK(!is_congruence(z4, bad));
  CongruenceResult d = congruence_detail(z4, bad);
  CHECK(!d.ok);
  CHECK(!d.witness.empty());
}

TEST_CASE("quotient structures") {
  Structure z4 = cyclic_group(4);
  Partition cosets = make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)});
  QuotientStructure q = quotient_structure(z4, cosets);
  CHECK(q.structure.n == 2);
  CHECK(satisfies(q.structure).ok);
  CHECK(algebra_isomorphic(q.structure, cyclic_group(2)).has_value());
  CHECK(is_homomorphism(q.projection, z4, q.structure));

  Partition bad = make_partition(4, {bit(0) | bit(1), bit(2) | bit(3)});
  CHECK_THROWS_AS(quotient_structure(z4, bad), Error);
}

TEST_CASE("the congruence gate can be mutated away") {
  Structure z4 = cyclic_group(4);
  Partition bad = make_partition(4, {bit(0) | bit(1), bit(2) | bit(3)});
  set_mutation("quotient-skip-congruence", true);
  QuotientStructure q = quotient_structure(z4, bad);
  set_mutation("quotient-skip-congruence", false);
  // The unguarded quotient is built from block representatives, so the
  // projection stops being a homomorphism.
  CHECK(!is_homomorphism(q.projection, z4, q.structure));
}

TEST_CASE("generated congruences") {
  Structure z4 = cyclic_group(4);
  Partition g = congruence_generated(z4, {{0, 2}});
  CHECK(g == make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)}));
  CHECK(congruence_generated(z4, {{1, 2}}) == total_partition(4));
  CHECK(congruence_generated(z4, {}) == identity_partition(4));
}

TEST_CASE("first isomorphism") {
  Structure z4 = cyclic_group(4);
  Structure z2 = cyclic_group(2);
  FirstIsomorphism fi = first_isomorphism(z4, z2, {0, 1, 0, 1});
  CHECK(fi.kernel.block_count() == 2);
  CHECK(fi.quotient.structure.n == 2);
  CHECK(fi.induced == std::vector<int>{0, 1});
  CHECK(is_homomorphism(fi.induced, fi.quotient.structure, z2));

  FirstIsomorphism id = first_isomorphism(z4, z4, {0, 1, 2, 3});
  CHECK(id.kernel == identity_partition(4));

  FirstIsomorphism cst = first_isomorphism(z4, z2, {0, 0, 0, 0});
  CHECK(cst.quotient.structure.n == 1);

  CHECK_THROWS_AS(first_isomorphism(z4, z2, {1, 0, 1, 0}), Error);
}

TEST_CASE("group catalogues") {
  // Labeled structures: the identity element can sit anywhere.
  CHECK(all_groups_of(1).size() == 1);
  CHECK(all_groups_of(2).size() == 2);
  CHECK(all_groups_of(3).size() == 3);
  CHECK(all_groups_of(4).size() == 16);  // 12 cyclic + 4 Klein relabelings
  for (const Structure& G : all_groups_of(4)) CHECK(satisfies(G).ok);
  CHECK(!algebra_isomorphic(cyclic_group(4), klein_group()).has_value());

  Structure s3 = sym3();
  CHECK(satisfies(s3).ok);
  // Noncommutative: (01)(02) != (02)(01).
  CHECK(s3.apply("mul", std::vector<int>{1, 2}) !=
        s3.apply("mul", std::vector<int>{2, 1}));
  CHECK(all_congruences(s3).size() == 3);  // trivial, A3 cosets, total
}
