#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finref/space.hpp"

namespace finref {

// An epireflective class of finite spaces: a membership predicate plus the
// flags the engines dispatch on.  Built-ins cover the separation axioms.
struct CategorySpec {
  std::string name;
  std::function<bool(const FinSpace&)> member;
  bool closed_under_supertopologies = false;
  bool hereditary = true;
  bool productive = true;
  std::vector<FinSpace> generators;  // optional

  bool contains(const FinSpace& X) const { return member(X); }
};

enum class Axiom { T0, T1, T2, Urysohn, FH, Reg, CReg, T35 };

inline constexpr Axiom kAllAxioms[] = {Axiom::T0,  Axiom::T1,   Axiom::T2,
                                       Axiom::Urysohn, Axiom::FH, Axiom::Reg,
                                       Axiom::CReg, Axiom::T35};
// The axioms whose classes are closed under supertopologies.
inline constexpr Axiom kQuotientAxioms[] = {Axiom::T0, Axiom::T1, Axiom::T2,
                                            Axiom::Urysohn, Axiom::FH};

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);
const CategorySpec& builtin(Axiom a);
const CategorySpec& builtin(const std::string& name);  // UnknownAxiom on miss

// Point-set separation predicates, evaluated exactly.
bool is_t0(const FinSpace& X);
bool is_t1(const FinSpace& X);
bool is_t2(const FinSpace& X);
bool is_urysohn(const FinSpace& X);
bool is_functionally_hausdorff(const FinSpace& X);
bool is_regular(const FinSpace& X);
bool is_completely_regular(const FinSpace& X);
bool is_t35(const FinSpace& X);

bool check_axiom(const FinSpace& X, const std::string& axiom);
bool check_axiom(const FinSpace& X, Axiom a);

// True iff a continuous map into the two-point discrete space sends A to 0
// and B to 1.  On finite spaces this matches the real-valued definition: a
// continuous real map has finite image and a threshold between values makes
// the 0/1 collapse continuous.
bool completely_separated(const FinSpace& X, Mask A, Mask B);

// Static nesting table on built-ins: true iff every finite member of inner
// satisfies outer.  Validated exhaustively by the harness.
bool class_nested_in(Axiom inner, Axiom outer);

}  // namespace finref
