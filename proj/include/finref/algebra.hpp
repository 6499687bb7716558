#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finref/error.hpp"
#include "finref/space.hpp"

namespace finref {

// A term over a signature: a variable, a constant, or an operation applied
// to arity-many children.
struct Term {
  enum class Kind { Var, Const, Op } kind = Kind::Var;
  std::string name;
  std::vector<Term> children;
};

struct Equation {
  Term lhs, rhs;
  std::vector<std::string> vars;  // sorted, deduplicated
  std::string text;               // original "lhs=rhs" form
};

struct OpSym {
  std::string name;
  int arity = 0;  // at least 1; constants are listed separately
};

struct Signature {
  std::vector<std::string> constants;
  std::vector<OpSym> ops;
  std::vector<Equation> equations;

  bool has_constant(const std::string& name) const;
  const OpSym* find_op(const std::string& name) const;
  bool operator==(const Signature& other) const;
};

// Prefix application syntax: identifiers, commas, parentheses; identifiers
// naming signature constants or operations bind to those, anything else is
// a variable.  "mul(mul(x,y),z)=mul(x,mul(y,z))".
Term parse_term(const Signature& sig, const std::string& text);
Equation parse_equation(const Signature& sig, const std::string& text);
std::string term_to_string(const Term& t);

// A finite algebraic structure: carrier {0..n-1}, a value per constant and
// a flattened row-major table per operation (leftmost argument slowest).
struct Structure {
  Signature sig;
  int n = 0;
  std::map<std::string, int> const_values;
  std::map<std::string, std::vector<int>> tables;

  int constant(const std::string& name) const;
  int apply(const std::string& op, std::span<const int> args) const;
};

// Validates ranges and (unless deferred) that the equations hold.
Structure make_structure(Signature sig, int n,
                         std::map<std::string, int> const_values,
                         std::map<std::string, std::vector<int>> tables,
                         bool check_equations = true);

int eval_term(const Structure& U, const Term& t,
              const std::map<std::string, int>& env);

struct SatisfiesResult {
  bool ok = true;
  std::string equation;                 // failing equation, when not ok
  std::map<std::string, int> witness;   // failing assignment
};
// Exhaustive over all assignments of carrier elements to variables.
SatisfiesResult satisfies(const Structure& U);

bool is_homomorphism(const std::vector<int>& table, const Structure& U,
                     const Structure& V);

struct CongruenceResult {
  bool ok = true;
  std::map<std::string, bool> per_op;  // which operations P respects
  std::string witness;                 // first violation, human readable
};
bool is_congruence(const Structure& U, const Partition& P);
CongruenceResult congruence_detail(const Structure& U, const Partition& P);

struct QuotientStructure {
  Structure structure;          // carrier = blocks of the partition
  std::vector<int> projection;  // element -> block index
  Partition partition;
};
// Requires is_congruence(U, P); the congruence-skipping mutation disables
// that precondition for the negative controls.
QuotientStructure quotient_structure(const Structure& U, const Partition& P);

// Guarded exhaustive filter over all partitions of the carrier.
std::vector<Partition> all_congruences(const Structure& U);
// Least congruence containing the pairs, by merge-saturation.
Partition congruence_generated(const Structure& U,
                               const std::vector<std::pair<int, int>>& pairs);

struct FirstIsomorphism {
  Partition kernel;
  QuotientStructure quotient;
  std::vector<int> induced;  // injective homomorphism quotient -> V
};
FirstIsomorphism first_isomorphism(const Structure& U, const Structure& V,
                                   const std::vector<int>& f);

// Witness bijective homomorphism, or nullopt.
std::optional<std::vector<int>> algebra_isomorphic(const Structure& U,
                                                   const Structure& V);

// The (mul/2, inv/1, e/0) signature with the five group equations.
const Signature& group_signature();
Structure cyclic_group(int n);  // Z_n, addition mod n
Structure klein_group();        // Z2 x Z2
Structure sym3();               // symmetric group on 3 letters
// Every group structure on {0..n-1} over the group signature, n <= 6.
std::vector<Structure> all_groups_of(int n);

}  // namespace finref
