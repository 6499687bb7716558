#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finref/category.hpp"
#include "finref/enumerate.hpp"
#include "finref/space.hpp"

namespace finref {

enum class Method { Auto, Direct, Partitions, ClosedRel, Generated };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

// The reflection of a space into an epireflective class: the target space
// and the surjective continuous reflection arrow.
struct Reflection {
  FinSpace source;
  FinSpace target;
  std::vector<int> arrow_table;
  std::string axiom;
  Method method_used = Method::Auto;
  int iterations = 0;  // closed-relation rounds used by the t2 engine

  CMap arrow() const { return CMap{source, target, arrow_table}; }
  Partition kernel() const { return kernel_partition(arrow_table, source.n); }
};

Reflection reflect(const FinSpace& X, const CategorySpec& C,
                   Method method = Method::Auto);
// Built-in axiom entry point, memoized on (space, axiom, method).
Reflection reflect(const FinSpace& X, Axiom a, Method method = Method::Auto);

// A reflexive symmetric relation on a space, stored by row masks.
struct ClosedRelation {
  FinSpace base;
  std::vector<Mask> rows;  // rows[x] = {y : x R y}

  bool related(int x, int y) const { return contains(rows[x], y); }
  bool is_diagonal() const;
  Partition to_partition() const;  // requires an equivalence
};

// Least relation that is both an equivalence and topologically closed in
// the square of X; alternates closure in the product with the
// symmetric-transitive closure until a fixpoint.
ClosedRelation smallest_closed_equivalence(const FinSpace& X);

bool relation_closed_in_square(const FinSpace& X,
                               const std::vector<Mask>& rows);

struct UniversalPropertyResult {
  bool ok = false;
  // Failing test object and map, when ok is false.
  std::optional<std::pair<FinSpace, std::vector<int>>> certificate;
  std::string detail;
};

// Checks the factorization property of R against every member of C with at
// most |source| points (enough: the class is hereditary, so the image of
// any map lands in a member of that size).
UniversalPropertyResult verify_universal_property(const Reflection& R,
                                                  const CategorySpec& C);

// True iff reflecting through C1 and then C2 realizes the C2-reflection.
bool compose_reflections_check(const FinSpace& X, Axiom c1, Axiom c2);

// The topology {arrow^{-1}(U) : U open in the reflection target}, i.e. the
// C-open subsets of X.
std::vector<Mask> c_open_sets(const FinSpace& X, const CategorySpec& C);
std::vector<Mask> c_open_sets(const FinSpace& X, Axiom a);
bool is_c_open(const FinSpace& X, Mask A, const CategorySpec& C);

// Topology generated by the osets of all continuous maps into members of C
// with at most |X| points; and the analogue over a generator family.
std::vector<Mask> oset_topology(const FinSpace& X, const CategorySpec& C);
std::vector<Mask> oset_topology_from(const FinSpace& X,
                                     const std::vector<FinSpace>& gens);
// Asserts the oset topology, the reflection-preimage topology and (when
// generators are present) the generator-oset topology all agree.
bool le_subspace_check(const FinSpace& X, const CategorySpec& C);

struct ProductComparison {
  std::vector<FinSpace> factors;
  std::string axiom;
  Reflection product_reflection;
  std::vector<Reflection> factor_reflections;
  std::vector<int> mu_table;  // reflect(prod).target -> product of targets
  bool mu_well_defined = false;
  bool is_homeo = false;
  bool arrows_open = false;  // every reflection arrow involved is open
};

ProductComparison product_preservation(std::span<const FinSpace> Xs, Axiom a);

bool preserves_subspace(const FinSpace& X, Mask A, Axiom a);
// (arrow separation transfer, trace condition); their conjunction must
// match preserves_subspace.
std::pair<bool, bool> pr_subspace_criterion(const FinSpace& X, Mask A,
                                            Axiom a);

bool is_t1_closed(const FinSpace& X, Mask A);

// Membership in the smallest epireflective class generated by gens:
// continuous maps into the generators separate points and their osets
// generate the topology.
bool in_generated_class(const FinSpace& Y, const std::vector<FinSpace>& gens);

// Bounded extension search; true only when every map from A into a
// generator extends over X into some member of the generated class of at
// most size_bound points that contains the generator as a subspace.  A
// negative answer means "not witnessed within the bound".
bool is_a_embedded(const FinSpace& X, Mask A,
                   const std::vector<FinSpace>& gens, int size_bound = -1);

// Both classes must be nested in t0 and E nested in C.
bool coincide(const FinSpace& X, Axiom c, Axiom e);
bool coincide_criterion(const FinSpace& X, Axiom c, Axiom e);

// Every t1-closed subset is completely separated from every outside point.
bool t1_closed_separation(const FinSpace& X);

// Members of a built-in class with exactly n points, cached.
const std::vector<const FinSpace*>& members_of(Axiom a, int n);

}  // namespace finref
