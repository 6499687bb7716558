#include <doctest.h>

#include "finref/category.hpp"
#include "finref/io.hpp"

using namespace finref;

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fx(const char* name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("space fixtures load") {
  FinSpace S = space_from_json(load_json(fx("sierpinski.json")));
  CHECK(S.n == 2);
  CHECK(same_space(S, sierpinski()));
  CHECK(S.labels[1] == "top");

  FinSpace X1 = space_from_json(load_json(fx("x1.json")));
  CHECK(X1.n == 3);
  CHECK(open_set_count(X1) == 5);
  CHECK(is_t0(X1));

  FinSpace X2 = space_from_json(load_json(fx("x2.json")));
  CHECK(X2.min_open[2] == bit(2));

  CHECK(same_space(space_from_json(load_json(fx("i2.json"))),
                   indiscrete_space(2)));
  CHECK(same_space(space_from_json(load_json(fx("d2.json"))),
                   discrete_space(2)));
}

TEST_CASE("the broken fixture is rejected as a topology") {
  Json doc = load_json(fx("bad.json"));
  CHECK_THROWS_AS(space_from_json(doc), Error);
  try {
    space_from_json(doc);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotATopology);
  }
}

TEST_CASE("space round-trip") {
  FinSpace X = space_from_json(load_json(fx("x1.json")));
  FinSpace Y = space_from_json(space_to_json(X));
  CHECK(same_space(X, Y));
  CHECK(X.labels == Y.labels);
}

TEST_CASE("malformed space documents") {
  CHECK_THROWS_AS(space_from_json(parse_json("{}")), Error);
  CHECK_THROWS_AS(space_from_json(parse_json(R"({"points":["a"]})")), Error);
  CHECK_THROWS_AS(
      space_from_json(parse_json(R"({"points":["a"],"opens":[[],[2]]})")),
      Error);  // index out of range
  CHECK_THROWS_AS(load_json(fx("no-such-file.json")), Error);
  CHECK_THROWS_AS(parse_json("{not json"), Error);
}

TEST_CASE("map documents with inline spaces") {
  Json doc = parse_json(R"({
    "dom": {"points": ["x", "y"], "opens": [[], [1], [0, 1]]},
    "cod": {"points": ["x", "y"], "opens": [[], [1], [0, 1]]},
    "table": [0, 1]
  })");
  CMap f = map_from_json(doc);
  CHECK(is_continuous(f));
  CMap g = map_from_json(map_to_json(f));
  CHECK(g.table == f.table);
  doc["table"] = {0, 5};
  CHECK_THROWS_AS(map_from_json(doc), Error);
}

TEST_CASE("partition round-trip") {
  Partition p = make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)});
  CHECK(partition_from_json(partition_to_json(p)) == p);
  CHECK_THROWS_AS(
      partition_from_json(parse_json(R"({"n":3,"blocks":[[0,1]]})")), Error);
}

TEST_CASE("algebra fixtures") {
  TopStructure T = topstructure_from_json(load_json(fx("z4-coset.json")));
  CHECK(T.alg.n == 4);
  CHECK(algebra_isomorphic(T.alg, cyclic_group(4)).has_value());
  CHECK(open_set_count(T.space) == 4);

  TopStructure I = topstructure_from_json(load_json(fx("z2-indiscrete.json")));
  CHECK(I.alg.n == 2);
  CHECK(same_space(I.space, indiscrete_space(2)));
}

TEST_CASE("structure round-trip keeps nested tables") {
  Structure s3 = sym3();
  Structure back = structure_from_json(structure_to_json(s3));
  CHECK(back.n == 6);
  CHECK(back.tables == s3.tables);
  CHECK(back.const_values == s3.const_values);

  Json doc = structure_to_json(cyclic_group(2));
  doc["tables"]["mul"] = {{0, 1}, {1, 5}};
  CHECK_THROWS_AS(structure_from_json(doc), Error);
}

TEST_CASE("maltsev round-trip") {
  std::vector<int> phi(8);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) phi[(x * 2 + y) * 2 + z] = x ^ y ^ z;
  MaltsevWitness W = is_maltsev(indiscrete_space(2), phi);
  MaltsevWitness back = maltsev_from_json(maltsev_to_json(W));
  CHECK(back.phi == W.phi);
  CHECK(same_space(back.space, W.space));
}

TEST_CASE("reflection reports") {
  FinSpace X = space_from_json(load_json(fx("x1.json")));
  Json rep = reflection_report(reflect(X, Axiom::T1));
  CHECK(rep["axiom"] == "t1");
  CHECK(rep["target"]["points"].size() == 1);
  CHECK(rep["quotient"] == true);
  CHECK(rep["open"] == true);
  CHECK(rep["arrow"].size() == 3);
}
