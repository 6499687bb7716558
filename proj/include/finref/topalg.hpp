#pragma once

#include <string>
#include <vector>

#include "finref/algebra.hpp"
#include "finref/category.hpp"
#include "finref/reflect.hpp"
#include "finref/space.hpp"

namespace finref {

// An algebraic structure carrying a topology on the same carrier.
struct TopStructure {
  Structure alg;
  FinSpace space;
};

TopStructure make_topstructure(Structure alg, FinSpace space);

enum class ContinuityMode { Topological, Semitopological, Neither };
const char* mode_name(ContinuityMode m);

// Joint continuity is continuity from the n-fold product topology, separate
// continuity is continuity from the cross topology on the same carrier.
bool op_jointly_continuous(const TopStructure& T, const std::string& op);
bool op_separately_continuous(const TopStructure& T, const std::string& op);
ContinuityMode continuity_mode(const TopStructure& T);

// Pushes the structure along the reflection arrow: the kernel must be a
// congruence (violations surface as KernelNotCongruence) and the result is
// checked to be at least semitopological.
TopStructure induced_reflection_structure(const TopStructure& T,
                                          const CategorySpec& C);
TopStructure induced_reflection_structure(const TopStructure& T, Axiom a);

// Whether the map induced between the reflected structures by a continuous
// homomorphism f is again a continuous homomorphism.
bool reflect_morphism_check(const TopStructure& A, const TopStructure& B,
                            const std::vector<int>& f, Axiom a);

struct MaltsevWitness {
  FinSpace space;
  std::vector<int> phi;  // flattened ternary table, row-major
  ContinuityMode mode = ContinuityMode::Neither;

  int apply(int x, int y, int z) const {
    return phi[(x * space.n + y) * space.n + z];
  }
  // The witness table as a one-operation structure, for congruence checks.
  Structure as_structure() const;
};

// Validates phi(x,x,y) = phi(y,x,x) = y for all pairs; throws NotMaltsev
// with a witness pair otherwise.
MaltsevWitness is_maltsev(const FinSpace& space, const std::vector<int>& phi);

// Openness of the projection onto a quotient by a phi-congruence.
bool maltsev_quotient_open(const MaltsevWitness& W, const Partition& P);
// Openness of the reflection arrow; C must be closed under supertopologies.
bool maltsev_reflection_open(const MaltsevWitness& W, const CategorySpec& C);
bool maltsev_reflection_open(const MaltsevWitness& W, Axiom a);

struct GroupPredicates {
  bool left_topological = false;
  bool right_topological = false;
  bool semitopological = false;
  bool topological = false;
};
// Requires the group signature.
GroupPredicates group_predicates(const TopStructure& T);

// Intersection of all topologically closed subgroups; requires at least one
// continuous translation family.
Mask smallest_closed_subgroup(const TopStructure& T);
// Quotient by the coset partition of that subgroup.
TopStructure t1_reflection_group(const TopStructure& T);

}  // namespace finref
