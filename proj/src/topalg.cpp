#include "finref/topalg.hpp"

#include <algorithm>

namespace finref {

TopStructure make_topstructure(Structure alg, FinSpace space) {
  if (alg.n != space.n)
    throw Error(ErrorKind::InputError,
                "algebra and space carriers differ in size");
  return TopStructure{std::move(alg), std::move(space)};
}

const char* mode_name(ContinuityMode m) {
  switch (m) {
    case ContinuityMode::Topological: return "topological";
    case ContinuityMode::Semitopological: return "semitopological";
    case ContinuityMode::Neither: return "neither";
  }
  return "?";
}

namespace {

// The flattened operation table is a map out of the k-fold power carrier;
// its row-major layout matches the product indexing.
bool op_continuous_from(const TopStructure& T, const std::string& op,
                        bool joint) {
  const OpSym* sym = T.alg.sig.find_op(op);
  if (!sym)
    throw Error(ErrorKind::SignatureMismatch, "no operation \"" + op + "\"");
  std::vector<FinSpace> factors(sym->arity, T.space);
  FinSpace dom = joint ? product(factors).space : cross_product(factors);
  return is_continuous(CMap{dom, T.space, T.alg.tables.at(op)});
}

}  // namespace

bool op_jointly_continuous(const TopStructure& T, const std::string& op) {
  return op_continuous_from(T, op, true);
}

bool op_separately_continuous(const TopStructure& T, const std::string& op) {
  return op_continuous_from(T, op, false);
}

ContinuityMode continuity_mode(const TopStructure& T) {
  bool joint = true, separate = true;
  for (const OpSym& op : T.alg.sig.ops) {
    if (joint && !op_jointly_continuous(T, op.name)) joint = false;
    if (!joint && !op_separately_continuous(T, op.name)) {
      separate = false;
      break;
    }
  }
  if (joint) return ContinuityMode::Topological;
  return separate ? ContinuityMode::Semitopological : ContinuityMode::Neither;
}

TopStructure induced_reflection_structure(const TopStructure& T,
                                          const CategorySpec& C) {
  if (continuity_mode(T) == ContinuityMode::Neither)
    throw Error(ErrorKind::InputError,
                "structure is not even semitopological");
  Reflection r = reflect(T.space, C);
  Partition kernel = r.kernel();
  if (!is_congruence(T.alg, kernel))
    throw Error(ErrorKind::KernelNotCongruence,
                "reflection kernel is not a congruence for " + C.name);
  QuotientStructure q = quotient_structure(T.alg, kernel);
  TopStructure out{std::move(q.structure), r.target};
  if (continuity_mode(out) == ContinuityMode::Neither)
    throw Error(ErrorKind::InputError,
                "induced structure lost separate continuity");
  return out;
}

TopStructure induced_reflection_structure(const TopStructure& T, Axiom a) {
  return induced_reflection_structure(T, builtin(a));
}

bool reflect_morphism_check(const TopStructure& A, const TopStructure& B,
                            const std::vector<int>& f, Axiom a) {
  if (!is_homomorphism(f, A.alg, B.alg) ||
      !is_continuous(CMap{A.space, B.space, f}))
    throw Error(ErrorKind::NotAHomomorphism,
                "map is not a continuous homomorphism");
  TopStructure ra = induced_reflection_structure(A, a);
  TopStructure rb = induced_reflection_structure(B, a);
  Reflection rA = reflect(A.space, a);
  Reflection rB = reflect(B.space, a);
  std::vector<int> rf(rA.target.n, -1);
  for (int x = 0; x < A.space.n; ++x) {
    int& slot = rf[rA.arrow_table[x]];
    int v = rB.arrow_table[f[x]];
    if (slot == -1)
      slot = v;
    else if (slot != v)
      return false;
  }
  return is_homomorphism(rf, ra.alg, rb.alg) &&
         is_continuous(CMap{ra.space, rb.space, rf});
}

Structure MaltsevWitness::as_structure() const {
  Signature sig;
  sig.ops = {{"phi", 3}};
  return make_structure(sig, space.n, {}, {{"phi", phi}}, false);
}

MaltsevWitness is_maltsev(const FinSpace& space, const std::vector<int>& phi) {
  const int n = space.n;
  if (static_cast<int>(phi.size()) != n * n * n)
    throw Error(ErrorKind::InputError, "ternary table has the wrong size");
  for (int v : phi)
    if (v < 0 || v >= n)
      throw Error(ErrorKind::InputError, "ternary table entry out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (phi[(x * n + x) * n + y] != y || phi[(y * n + x) * n + x] != y)
        throw Error(ErrorKind::NotMaltsev,
                    "identity fails at (x=" + std::to_string(x) +
                        ", y=" + std::to_string(y) + ")");
    }
  MaltsevWitness W{space, phi, ContinuityMode::Neither};
  std::vector<FinSpace> cube(3, space);
  if (is_continuous(CMap{product(cube).space, space, phi}))
    W.mode = ContinuityMode::Topological;
  else if (is_continuous(CMap{cross_product(cube), space, phi}))
    W.mode = ContinuityMode::Semitopological;
  return W;
}

bool maltsev_quotient_open(const MaltsevWitness& W, const Partition& P) {
  Structure S = W.as_structure();
  if (!is_congruence(S, P))
    throw Error(ErrorKind::NotACongruence,
                "partition is not a phi-congruence");
  return is_open_map(quotient(W.space, P).projection);
}

bool maltsev_reflection_open(const MaltsevWitness& W, const CategorySpec& C) {
  if (!C.closed_under_supertopologies)
    throw Error(ErrorKind::MethodUnsupported,
                "openness theorem needs a class closed under supertopologies");
  return is_open_map(reflect(W.space, C).arrow());
}

bool maltsev_reflection_open(const MaltsevWitness& W, Axiom a) {
  return maltsev_reflection_open(W, builtin(a));
}

namespace {

void require_group(const TopStructure& T) {
  if (!(T.alg.sig == group_signature()))
    throw Error(ErrorKind::SignatureMismatch,
                "operation requires the group signature");
}

}  // namespace

GroupPredicates group_predicates(const TopStructure& T) {
  require_group(T);
  const int n = T.alg.n;
  const std::vector<int>& mul = T.alg.tables.at("mul");
  GroupPredicates out;
  out.left_topological = out.right_topological = true;
  for (int a = 0; a < n; ++a) {
    std::vector<int> left(n), right(n);
    for (int x = 0; x < n; ++x) {
      left[x] = mul[a * n + x];
      right[x] = mul[x * n + a];
    }
    if (!is_continuous(CMap{T.space, T.space, left}))
      out.left_topological = false;
    if (!is_continuous(CMap{T.space, T.space, right}))
      out.right_topological = false;
  }
  out.semitopological = out.left_topological && out.right_topological;
  out.topological = out.semitopological &&
                    op_jointly_continuous(T, "mul") &&
                    is_continuous(CMap{T.space, T.space, T.alg.tables.at("inv")});
  return out;
}

Mask smallest_closed_subgroup(const TopStructure& T) {
  require_group(T);
  GroupPredicates p = group_predicates(T);
  if (!p.left_topological && !p.right_topological)
    throw Error(ErrorKind::InputError,
                "no continuous translation family");
  const int n = T.alg.n;
  const std::vector<int>& mul = T.alg.tables.at("mul");
  const std::vector<int>& inv = T.alg.tables.at("inv");
  Mask H = full_mask(n);
  for (Mask S = 0; S < full_mask(n) + 1 && n < 64; ++S) {
    if (!contains(S, T.alg.constant("e"))) continue;
    bool subgroup = true;
    for (int a : bits_of(S)) {
      if (!contains(S, inv[a])) {
        subgroup = false;
        break;
      }
      for (int b : bits_of(S))
        if (!contains(S, mul[a * n + b])) {
          subgroup = false;
          break;
        }
      if (!subgroup) break;
    }
    if (subgroup && is_closed(T.space, S)) H &= S;
  }
  return H;
}

TopStructure t1_reflection_group(const TopStructure& T) {
  Mask H = smallest_closed_subgroup(T);
  const int n = T.alg.n;
  const std::vector<int>& mul = T.alg.tables.at("mul");
  // Left cosets xH; H comes out normal here, so they form a congruence.
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    Mask coset = 0;
    for (int h : bits_of(H)) coset |= bit(mul[x * n + h]);
    ids[x] = lowest_bit(coset);
  }
  Partition P = partition_from_ids(ids);
  QuotientStructure q = quotient_structure(T.alg, P);
  QuotientResult qs = quotient(T.space, P);
  return TopStructure{std::move(q.structure), std::move(qs.space)};
}

}  // namespace finref
