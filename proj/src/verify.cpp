#include "finref/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <set>

#include "finref/algebra.hpp"
#include "finref/category.hpp"
#include "finref/enumerate.hpp"
#include "finref/reflect.hpp"
#include "finref/topalg.hpp"

namespace finref {

namespace {

Json space_instance(const FinSpace& X) {
  return Json{{"space", space_to_json(X)}};
}

FinSpace get_space(const Json& inst, const char* key = "space") {
  return space_from_json(inst.at(key));
}

void yield_spaces(int lo, int hi,
                  const std::function<void(const Json&)>& yield) {
  for (int n = lo; n <= hi; ++n)
    for (const FinSpace& X : all_spaces_of(n)) yield(space_instance(X));
}

// Nested ordered pairs (c, e) with e's class contained in c's.
std::vector<std::pair<Axiom, Axiom>> nested_pairs(bool within_t0) {
  std::vector<std::pair<Axiom, Axiom>> out;
  for (Axiom c : kAllAxioms)
    for (Axiom e : kAllAxioms) {
      if (c == e || !class_nested_in(e, c)) continue;
      if (within_t0 &&
          (!class_nested_in(c, Axiom::T0) || !class_nested_in(e, Axiom::T0)))
        continue;
      out.push_back({c, e});
    }
  return out;
}

// Monotone-table continuity without building CMap copies.
bool table_continuous(const std::vector<Mask>& dom_min,
                      const std::vector<int>& t,
                      const std::vector<Mask>& cod_min) {
  const int n = static_cast<int>(dom_min.size());
  for (int x = 0; x < n; ++x) {
    Mask m = dom_min[x];
    while (m) {
      int y = lowest_bit(m);
      m &= m - 1;
      if (!contains(cod_min[t[x]], t[y])) return false;
    }
  }
  return true;
}

// Does the pair of arrows induce a homeomorphism between the targets?
std::optional<std::string> arrows_commute_homeo(const Reflection& a,
                                                const Reflection& b) {
  std::vector<int> h(a.target.n, -1);
  for (int x = 0; x < a.source.n; ++x) {
    int& slot = h[a.arrow_table[x]];
    if (slot == -1)
      slot = b.arrow_table[x];
    else if (slot != b.arrow_table[x])
      return "induced map ill-defined";
  }
  CMap hm{a.target, b.target, h};
  MapPredicates p = map_predicates(hm);
  if (!p.injective || !p.surjective) return "induced map not bijective";
  if (!p.continuous || !is_open_map(hm)) return "induced map not bicontinuous";
  return std::nullopt;
}

// ---- Mal'tsev table machinery -------------------------------------------

// Streams all ternary tables satisfying phi(x,x,y) = phi(y,x,x) = y by
// filling only the unconstrained cells (a != b and b != c).
void for_each_maltsev_table(int n,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> phi(n * n * n, 0);
  std::vector<int> free;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int idx = (a * n + b) * n + c;
        if (a == b)
          phi[idx] = c;
        else if (b == c)
          phi[idx] = a;
        else
          free.push_back(idx);
      }
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == free.size()) {
      fn(phi);
      return;
    }
    for (int v = 0; v < n; ++v) {
      phi[free[i]] = v;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
}

std::string key_of(const FinSpace& X) {
  std::string k = std::to_string(X.n);
  for (Mask m : X.min_open) k += ":" + std::to_string(m);
  return k;
}

// First separately continuous Mal'tsev table on X, memoized.
const std::optional<std::vector<int>>& admissible_witness(const FinSpace& X) {
  static std::map<std::string, std::optional<std::vector<int>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key_of(X));
  if (it != cache.end()) return it->second;
  std::optional<std::vector<int>> found;
  if (X.n >= 1 && X.n <= 3) {
    std::vector<FinSpace> cube(3, X);
    FinSpace cross = cross_product(cube);
    for_each_maltsev_table(X.n, [&](const std::vector<int>& phi) {
      if (!found && table_continuous(cross.min_open, phi, X.min_open))
        found = phi;
    });
  }
  return cache.emplace(key_of(X), std::move(found)).first->second;
}

Json nested_phi(const std::vector<int>& phi, int n) {
  Json a = Json::array();
  for (int x = 0; x < n; ++x) {
    Json b = Json::array();
    for (int y = 0; y < n; ++y) {
      Json c = Json::array();
      for (int z = 0; z < n; ++z) c.push_back(phi[(x * n + y) * n + z]);
      b.push_back(c);
    }
    a.push_back(b);
  }
  return a;
}

// ---- property checks -----------------------------------------------------

std::optional<Json> check_cross_oracle(const Json& inst) {
  int n = inst.at("n").get<int>();
  std::size_t a = count_topologies(n), b = count_preorders(n);
  if (a == b) return std::nullopt;
  Json bad = inst;
  bad["topology_count"] = a;
  bad["preorder_count"] = b;
  return bad;
}

std::optional<Json> check_reflect_universal(const Json& inst) {
  FinSpace X = get_space(inst);
  Axiom a = *axiom_from_name(inst.at("axiom").get<std::string>());
  const CategorySpec& C = builtin(a);
  Reflection r = reflect(X, a);
  auto fail = [&](const std::string& why) {
    Json bad = inst;
    bad["reason"] = why;
    return bad;
  };
  if (!C.member(r.target)) return fail("target not in class");
  Reflection r2 = reflect(r.target, a);
  CMap a2 = r2.arrow();
  MapPredicates p2 = map_predicates(a2);
  if (!p2.injective || !p2.surjective || !is_open_map(a2))
    return fail("not idempotent");
  UniversalPropertyResult u = verify_universal_property(r, C);
  if (!u.ok) return fail("universal property: " + u.detail);
  return std::nullopt;
}

std::optional<Json> check_quotient_arrow(const Json& inst) {
  FinSpace X = get_space(inst);
  Axiom a = *axiom_from_name(inst.at("axiom").get<std::string>());
  if (is_quotient_map(reflect(X, a).arrow())) return std::nullopt;
  return inst;
}

std::optional<Json> check_engine_agreement(const Json& inst) {
  FinSpace X = get_space(inst);
  struct Case {
    Axiom axiom;
    Method method;
  };
  for (Case c : {Case{Axiom::T1, Method::Direct}, Case{Axiom::T2, Method::Direct},
                 Case{Axiom::T2, Method::ClosedRel}}) {
    Reflection lhs = reflect(X, c.axiom, c.method);
    Reflection rhs = reflect(X, c.axiom, Method::Partitions);
    if (auto why = arrows_commute_homeo(lhs, rhs)) {
      Json bad = inst;
      bad["axiom"] = axiom_name(c.axiom);
      bad["method"] = method_name(c.method);
      bad["reason"] = *why;
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_compose(const Json& inst) {
  FinSpace X = get_space(inst);
  for (auto [c, e] : nested_pairs(false)) {
    if (!compose_reflections_check(X, c, e)) {
      Json bad = inst;
      bad["outer"] = axiom_name(c);
      bad["inner"] = axiom_name(e);
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_oset(const Json& inst) {
  FinSpace X = get_space(inst);
  for (Axiom a : kAllAxioms) {
    const CategorySpec& C = builtin(a);
    if (oset_topology(X, C) != c_open_sets(X, C) ||
        (!C.generators.empty() && !le_subspace_check(X, C))) {
      Json bad = inst;
      bad["axiom"] = axiom_name(a);
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_nesting(const Json& inst) {
  int n = inst.at("n").get<int>();
  for (const FinSpace& X : all_spaces_of(n)) {
    bool member[8];
    for (int i = 0; i < 8; ++i) member[i] = check_axiom(X, kAllAxioms[i]);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (class_nested_in(kAllAxioms[i], kAllAxioms[j]) && member[i] &&
            !member[j]) {
          Json bad = space_instance(X);
          bad["n"] = n;
          bad["inner"] = axiom_name(kAllAxioms[i]);
          bad["outer"] = axiom_name(kAllAxioms[j]);
          return bad;
        }
  }
  return std::nullopt;
}

std::optional<Json> check_t0_subspace(const Json& inst) {
  FinSpace X = get_space(inst);
  for (Mask A = 1; A <= X.full(); ++A)
    if (!preserves_subspace(X, A, Axiom::T0)) {
      Json bad = inst;
      bad["subset"] = bits_of(A);
      return bad;
    }
  return std::nullopt;
}

std::optional<Json> check_subspace_criterion(const Json& inst) {
  FinSpace X = get_space(inst);
  for (Mask A = 1; A <= X.full(); ++A)
    for (Axiom a : kAllAxioms) {
      auto [c1, c2] = pr_subspace_criterion(X, A, a);
      if (preserves_subspace(X, A, a) != (c1 && c2)) {
        Json bad = inst;
        bad["subset"] = bits_of(A);
        bad["axiom"] = axiom_name(a);
        return bad;
      }
    }
  return std::nullopt;
}

std::optional<Json> check_coincide(const Json& inst) {
  FinSpace X = get_space(inst);
  for (auto [c, e] : nested_pairs(true)) {
    if (coincide(X, c, e) != coincide_criterion(X, c, e)) {
      Json bad = inst;
      bad["coarse"] = axiom_name(c);
      bad["fine"] = axiom_name(e);
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_t1_closed_separation(const Json& inst) {
  FinSpace X = get_space(inst);
  if (t1_closed_separation(X) == coincide(X, Axiom::T1, Axiom::T35)) return std::nullopt;
  return inst;
}

// ---- algebra checks ------------------------------------------------------

std::optional<Json> check_z4(const Json&) {
  Structure z4 = cyclic_group(4);
  std::vector<Partition> cs = all_congruences(z4);
  std::vector<Partition> want = {
      identity_partition(4),
      make_partition(4, {bit(0) | bit(2), bit(1) | bit(3)}),
      total_partition(4)};
  auto found = [&](const Partition& p) {
    return std::find(cs.begin(), cs.end(), p) != cs.end();
  };
  if (cs.size() == 3 && found(want[0]) && found(want[1]) && found(want[2]))
    return std::nullopt;
  return Json{{"reason", "congruences of the 4-cycle are off"},
              {"count", cs.size()}};
}

std::optional<Json> check_lattice(const Json& inst) {
  Structure U = structure_from_json(inst.at("algebra"));
  std::vector<Partition> cs = all_congruences(U);
  for (const Partition& p : cs)
    for (const Partition& q : cs) {
      if (!is_congruence(U, meet(p, q)))
        return Json{{"algebra", inst.at("algebra")},
                    {"reason", "meet not a congruence"}};
      // Join via generation from the union of the two relations.
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < U.n; ++x)
        for (int y = x + 1; y < U.n; ++y)
          if (p.related(x, y) || q.related(x, y)) pairs.push_back({x, y});
      Partition j = congruence_generated(U, pairs);
      if (!is_congruence(U, j) || !refines(p, j) || !refines(q, j))
        return Json{{"algebra", inst.at("algebra")},
                    {"reason", "join not an upper bound"}};
      // Least upper bound among congruences.
      for (const Partition& r : cs)
        if (refines(p, r) && refines(q, r) && !refines(j, r))
          return Json{{"algebra", inst.at("algebra")},
                      {"reason", "join not least"}};
    }
  return std::nullopt;
}

std::optional<Json> check_quotient_gate(const Json& inst) {
  Structure U = structure_from_json(inst.at("algebra"));
  std::optional<Json> bad;
  for_each_partition(U.n, [&](const Partition& P) {
    if (bad) return;
    bool congruent = is_congruence(U, P);
    bool threw = false;
    try {
      QuotientStructure q = quotient_structure(U, P);
      if (congruent) {
        if (!satisfies(q.structure).ok ||
            !is_homomorphism(q.projection, U, q.structure)) {
          bad = Json{{"algebra", inst.at("algebra")},
                     {"partition", partition_to_json(P)},
                     {"reason", "quotient broke the equations"}};
          return;
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotACongruence) throw;
      threw = true;
    }
    if (threw == congruent)
      bad = Json{{"algebra", inst.at("algebra")},
                 {"partition", partition_to_json(P)},
                 {"reason", congruent ? "congruence rejected"
                                      : "non-congruence accepted"}};
  });
  return bad;
}

std::optional<Json> check_first_iso(const Json& inst) {
  Structure U = structure_from_json(inst.at("algebra"));
  Structure V = structure_from_json(inst.at("algebra_b"));
  std::optional<Json> bad;
  std::vector<int> f(U.n, 0);
  while (true) {
    bool hom;
    try {
      hom = is_homomorphism(f, U, V);
    } catch (const Error&) {
      hom = false;
    }
    if (hom) {
      FirstIsomorphism iso = first_isomorphism(U, V, f);
      bool inj = true;
      for (std::size_t i = 0; i < iso.induced.size() && inj; ++i)
        for (std::size_t j = i + 1; j < iso.induced.size(); ++j)
          if (iso.induced[i] == iso.induced[j]) inj = false;
      bool factors = true;
      for (int x = 0; x < U.n; ++x)
        if (iso.induced[iso.quotient.projection[x]] != f[x]) factors = false;
      if (!inj || !factors ||
          !is_homomorphism(iso.induced, iso.quotient.structure, V))
        return Json{{"algebra", inst.at("algebra")},
                    {"algebra_b", inst.at("algebra_b")},
                    {"map", f}};
    }
    int i = U.n - 1;
    while (i >= 0 && f[i] == V.n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return bad;
}

std::optional<Json> check_cosets(const Json& inst) {
  Structure G = structure_from_json(inst.at("algebra"));
  const std::vector<int>& mul = G.tables.at("mul");
  int e = G.constant("e");
  for (const Partition& P : all_congruences(G)) {
    Mask H = P.blocks[P.block_of(e)];
    for (int x = 0; x < G.n; ++x) {
      Mask coset = 0;
      for (int h : bits_of(H)) coset |= bit(mul[x * G.n + h]);
      if (coset != P.blocks[P.block_of(x)])
        return Json{{"algebra", inst.at("algebra")},
                    {"partition", partition_to_json(P)},
                    {"element", x}};
    }
  }
  return std::nullopt;
}

std::optional<Json> check_generated(const Json& inst) {
  Structure U = structure_from_json(inst.at("algebra"));
  std::vector<Partition> cs = all_congruences(U);
  auto least_containing = [&](int a, int b) {
    Partition best = total_partition(U.n);
    for (const Partition& p : cs)
      if ((a == b || p.related(a, b)) && refines(p, best)) best = p;
    return best;
  };
  if (congruence_generated(U, {}) != identity_partition(U.n))
    return Json{{"algebra", inst.at("algebra")}, {"pair", Json::array()}};
  for (int a = 0; a < U.n; ++a)
    for (int b = a + 1; b < U.n; ++b)
      if (congruence_generated(U, {{a, b}}) != least_containing(a, b))
        return Json{{"algebra", inst.at("algebra")},
                    {"pair", Json::array({a, b})}};
  return std::nullopt;
}

// ---- maltsev / group checks ---------------------------------------------

std::optional<Json> check_maltsev_open(const Json& inst) {
  FinSpace X = get_space(inst);
  const int n = X.n;
  if (n < 1 || n > 3) return std::nullopt;
  std::vector<FinSpace> cube(3, X);
  FinSpace cross = cross_product(cube);
  // Quotient openness depends only on the partition; precompute it.
  struct Part {
    std::vector<int> ids;
    Partition p;
    bool open;
  };
  std::vector<Part> parts;
  for_each_partition(n, [&](const Partition& P) {
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) ids[x] = P.block_of(x);
    parts.push_back({std::move(ids), P, is_open_map(quotient(X, P).projection)});
  });
  std::optional<Json> bad;
  bool any_witness = false;
  std::vector<int> first;
  for_each_maltsev_table(n, [&](const std::vector<int>& phi) {
    if (bad) return;
    if (!table_continuous(cross.min_open, phi, X.min_open)) return;
    if (!any_witness) {
      any_witness = true;
      first = phi;
    }
    for (const Part& part : parts) {
      // Is this partition a phi-congruence?
      bool cong = true;
      for (int idx = 0; idx < n * n * n && cong; ++idx) {
        int c = idx % n, b = (idx / n) % n, a = idx / (n * n);
        int args[3] = {a, b, c};
        for (int slot = 0; slot < 3 && cong; ++slot)
          for (int y = 0; y < n; ++y) {
            if (y == args[slot] || part.ids[y] != part.ids[args[slot]])
              continue;
            int alt[3] = {args[0], args[1], args[2]};
            alt[slot] = y;
            int v = phi[(alt[0] * n + alt[1]) * n + alt[2]];
            if (part.ids[v] != part.ids[phi[idx]]) {
              cong = false;
              break;
            }
          }
      }
      if (cong && !part.open) {
        Json b2 = inst;
        b2["phi"] = nested_phi(phi, n);
        b2["partition"] = partition_to_json(part.p);
        b2["reason"] = "congruence quotient not open";
        bad = b2;
        return;
      }
    }
  });
  if (bad) return bad;
  if (any_witness) {
    for (Axiom a : kQuotientAxioms)
      if (!is_open_map(reflect(X, a).arrow())) {
        Json b2 = inst;
        b2["phi"] = nested_phi(first, n);
        b2["axiom"] = axiom_name(a);
        b2["reason"] = "reflection arrow not open";
        return b2;
      }
    // The induced ternary operation on each reflection stays jointly
    // continuous when the witness is jointly continuous.
    std::vector<FinSpace> pcube(3, X);
    FinSpace joint = product(pcube).space;
    for_each_maltsev_table(n, [&](const std::vector<int>& phi) {
      if (bad) return;
      if (!table_continuous(joint.min_open, phi, X.min_open)) return;
      MaltsevWitness W{X, phi, ContinuityMode::Topological};
      Structure S = W.as_structure();
      for (Axiom a : {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::FH}) {
        Reflection r = reflect(X, a);
        Partition k = r.kernel();
        if (!is_congruence(S, k)) {
          Json b2 = inst;
          b2["phi"] = nested_phi(phi, n);
          b2["axiom"] = axiom_name(a);
          b2["reason"] = "reflection kernel not a phi-congruence";
          bad = b2;
          return;
        }
        QuotientStructure q = quotient_structure(S, k);
        TopStructure T{std::move(q.structure), r.target};
        if (!op_jointly_continuous(T, "phi")) {
          Json b2 = inst;
          b2["phi"] = nested_phi(phi, n);
          b2["axiom"] = axiom_name(a);
          b2["reason"] = "induced operation lost joint continuity";
          bad = b2;
          return;
        }
      }
    });
  }
  return bad;
}

std::optional<Json> check_maltsev_products(const Json& inst) {
  FinSpace X = get_space(inst, "space");
  FinSpace Y = get_space(inst, "space_b");
  if (!admissible_witness(X) || !admissible_witness(Y)) return std::nullopt;
  std::vector<FinSpace> pair = {X, Y};
  for (Axiom a : kQuotientAxioms) {
    ProductComparison pc = product_preservation(pair, a);
    if (!pc.mu_well_defined || !pc.is_homeo) {
      Json bad = inst;
      bad["axiom"] = axiom_name(a);
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_group_semitop(const Json& inst) {
  Structure G = structure_from_json(inst.at("algebra"));
  std::optional<Json> bad;
  for (const FinSpace& X : all_spaces_of(G.n)) {
    TopStructure T{G, X};
    if (continuity_mode(T) == ContinuityMode::Neither) continue;
    for (Axiom a : kQuotientAxioms) {
      try {
        TopStructure R = induced_reflection_structure(T, a);
        if (continuity_mode(R) == ContinuityMode::Neither)
          throw Error(ErrorKind::InputError, "mode lost");
      } catch (const Error&) {
        Json b2 = inst;
        b2["space"] = space_to_json(X);
        b2["axiom"] = axiom_name(a);
        return b2;
      }
    }
  }
  return bad;
}

std::optional<Json> check_group_t0_t2(const Json& inst) {
  Structure G = structure_from_json(inst.at("algebra"));
  for (const FinSpace& X : all_spaces_of(G.n)) {
    TopStructure T{G, X};
    if (!group_predicates(T).topological) continue;
    FinSpace target = reflect(X, Axiom::T0).target;
    if (!is_t2(target) || !is_t35(target)) {
      Json bad = inst;
      bad["space"] = space_to_json(X);
      return bad;
    }
  }
  return std::nullopt;
}

// Topologies with at most two proper open sets on n points: the nested and
// the complementary families, plus the indiscrete one.
std::vector<FinSpace> few_open_topologies(int n) {
  std::vector<FinSpace> out;
  auto from_family = [&](const std::vector<Mask>& fam) {
    std::vector<Mask> m(n, full_mask(n));
    for (int x = 0; x < n; ++x)
      for (Mask u : fam)
        if (contains(u, x)) m[x] &= u;
    out.push_back(space_from_min_open(std::move(m)));
  };
  from_family({});
  for (Mask a = 1; a < full_mask(n); ++a) {
    from_family({a});
    for (Mask b = a + 1; b < full_mask(n); ++b)
      if (subset_of(a, b) || ((a & b) == 0 && (a | b) == full_mask(n)))
        from_family({a, b});
  }
  return out;
}

std::optional<Json> check_t1_group(const Json& inst) {
  Structure G = structure_from_json(inst.at("algebra"));
  for (const FinSpace& X : few_open_topologies(G.n)) {
    TopStructure T{G, X};
    if (!group_predicates(T).left_topological) continue;
    TopStructure via_subgroup = t1_reflection_group(T);
    TopStructure via_reflection = induced_reflection_structure(T, Axiom::T1);
    // Must agree up to a simultaneous isomorphism-homeomorphism.
    bool match = false;
    if (via_subgroup.alg.n == via_reflection.alg.n) {
      std::vector<int> perm(via_subgroup.alg.n);
      for (int i = 0; i < via_subgroup.alg.n; ++i) perm[i] = i;
      do {
        if (!is_homomorphism(perm, via_subgroup.alg, via_reflection.alg))
          continue;
        bool homeo = true;
        for (int i = 0; i < via_subgroup.alg.n && homeo; ++i)
          for (int j = 0; j < via_subgroup.alg.n; ++j)
            if (contains(via_subgroup.space.min_open[i], j) !=
                contains(via_reflection.space.min_open[perm[i]], perm[j])) {
              homeo = false;
              break;
            }
        if (homeo) {
          match = true;
          break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (!match) {
      Json bad = inst;
      bad["space"] = space_to_json(X);
      return bad;
    }
  }
  return std::nullopt;
}

std::optional<Json> check_reflect_morphism(const Json& inst) {
  TopStructure A = topstructure_from_json(inst.at("dom"));
  TopStructure B = topstructure_from_json(inst.at("cod"));
  if (continuity_mode(A) == ContinuityMode::Neither ||
      continuity_mode(B) == ContinuityMode::Neither)
    return std::nullopt;
  std::vector<int> f(A.alg.n, 0);
  while (true) {
    bool ok = is_homomorphism(f, A.alg, B.alg) &&
              is_continuous(CMap{A.space, B.space, f});
    if (ok) {
      for (Axiom a : kQuotientAxioms)
        if (!reflect_morphism_check(A, B, f, a)) {
          Json bad = inst;
          bad["map"] = f;
          bad["axiom"] = axiom_name(a);
          return bad;
        }
    }
    int i = A.alg.n - 1;
    while (i >= 0 && f[i] == B.alg.n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return std::nullopt;
}

// ---- registry ------------------------------------------------------------

std::vector<Property> build_properties() {
  std::vector<Property> ps;
  auto add = [&](std::string id, std::string suite, std::string law,
                 auto enumerate, auto check) {
    ps.push_back(Property{std::move(id), std::move(suite), std::move(law),
                          enumerate, check});
  };

  auto each_n = [](int lo) {
    return [lo](int max, const std::function<void(const Json&)>& yield) {
      for (int n = lo; n <= max; ++n) yield(Json{{"n", n}});
    };
  };
  auto spaces = [](int cap) {
    return [cap](int max, const std::function<void(const Json&)>& yield) {
      yield_spaces(0, std::min(max, cap), yield);
    };
  };
  auto spaces_with_axioms = [](int cap, std::span<const Axiom> axioms) {
    std::vector<Axiom> list(axioms.begin(), axioms.end());
    return [cap, list](int max, const std::function<void(const Json&)>& yield) {
      for (int n = 0; n <= std::min(max, cap); ++n)
        for (const FinSpace& X : all_spaces_of(n))
          for (Axiom a : list) {
            Json inst = space_instance(X);
            inst["axiom"] = axiom_name(a);
            yield(inst);
          }
    };
  };
  auto groups = [](int lo, int cap) {
    return [lo, cap](int max, const std::function<void(const Json&)>& yield) {
      for (int n = lo; n <= std::min(max, cap); ++n)
        for (const Structure& G : all_groups_of(n))
          yield(Json{{"algebra", structure_to_json(G)}});
    };
  };

  add("enumerator-cross-oracle", "reflection",
      "labeled topology counts agree between the family and preorder "
      "enumerators",
      each_n(0), check_cross_oracle);
  add("reflect-universal", "reflection",
      "reflections land in the class, are idempotent and satisfy the "
      "universal property",
      spaces_with_axioms(64, kAllAxioms), check_reflect_universal);
  add("reflect-quotient-arrow", "reflection",
      "arrows into supertopology-closed classes are quotient maps",
      spaces_with_axioms(64, kQuotientAxioms), check_quotient_arrow);
  add("engine-agreement", "reflection",
      "direct and iterative engines match the partitions oracle",
      spaces(64), check_engine_agreement);
  add("compose-reflections", "reflection",
      "reflecting into a class then a nested class equals reflecting "
      "directly",
      spaces(3), check_compose);
  add("oset-topology", "reflection",
      "the oset topology equals the preimage topology of the reflection",
      spaces(3), check_oset);
  add("nesting-oracle", "reflection",
      "the static class nesting table never contradicts pointwise membership",
      each_n(0), check_nesting);

  add("t0-subspace-preserved", "subspace",
      "every subspace reflection embeds into the ambient one for t0",
      spaces(64), check_t0_subspace);
  add("subspace-criterion", "subspace",
      "subspace preservation matches the two-condition criterion",
      spaces(3), check_subspace_criterion);

  add("coincide-criterion", "coincidence",
      "reflection coincidence matches the open-family criterion",
      spaces(64), check_coincide);
  add("t1-closed-separation", "coincidence",
      "complete separation from t1-closed sets characterizes t1/t35 "
      "coincidence",
      spaces(64), check_t1_closed_separation);

  add("z4-congruences", "algebra",
      "the 4-cycle has exactly identity, coset and total congruences",
      [](int, const std::function<void(const Json&)>& yield) {
        yield(Json::object());
      },
      check_z4);
  add("congruence-lattice", "algebra",
      "congruences form a lattice under meet and generated join",
      groups(1, 4), check_lattice);
  add("quotient-congruence-gate", "algebra",
      "quotients accept exactly congruences and preserve the equations",
      groups(1, 4), check_quotient_gate);
  add("first-isomorphism", "algebra",
      "every homomorphism factors as an injective map after its kernel "
      "quotient",
      [](int max, const std::function<void(const Json&)>& yield) {
        for (int n = 1; n <= std::min(max, 4); ++n)
          for (int m = 1; m <= std::min(max, 4); ++m)
            for (const Structure& U : all_groups_of(n))
              for (const Structure& V : all_groups_of(m))
                yield(Json{{"algebra", structure_to_json(U)},
                           {"algebra_b", structure_to_json(V)}});
      },
      check_first_iso);
  add("congruence-cosets", "algebra",
      "group congruence blocks are the cosets of the identity block",
      groups(1, 6), check_cosets);
  add("congruence-generated", "algebra",
      "generated congruences are the least congruences containing the pairs",
      groups(1, 4), check_generated);

  add("maltsev-open", "maltsev",
      "congruence quotients and reflection arrows of Mal'tsev spaces are "
      "open; induced operations stay jointly continuous",
      spaces(3), check_maltsev_open);
  add("maltsev-products", "maltsev",
      "reflections preserve binary products of Mal'tsev spaces",
      [](int max, const std::function<void(const Json&)>& yield) {
        int cap = std::min(max, 3);
        for (int n = 1; n <= cap; ++n)
          for (const FinSpace& X : all_spaces_of(n))
            for (int m = n; m <= cap; ++m)
              for (const FinSpace& Y : all_spaces_of(m)) {
                Json inst = space_instance(X);
                inst["space_b"] = space_to_json(Y);
                yield(inst);
              }
      },
      check_maltsev_products);
  add("group-reflection-semitopological", "maltsev",
      "reflection kernels of semitopological groups are congruences and the "
      "induced structures stay semitopological",
      groups(1, 4), check_group_semitop);
  add("group-t0-t2", "maltsev",
      "t0 reflections of finite topological groups are t2 and t35",
      groups(1, 4), check_group_t0_t2);
  add("t1-group-subgroup", "maltsev",
      "the closed-subgroup quotient realizes the t1 reflection of a group",
      [](int, const std::function<void(const Json&)>& yield) {
        for (int n = 1; n <= 6; ++n)
          for (const Structure& G : all_groups_of(n))
            yield(Json{{"algebra", structure_to_json(G)}});
      },
      check_t1_group);
  add("reflect-morphism", "maltsev",
      "continuous homomorphisms descend to the induced reflection "
      "structures",
      [](int max, const std::function<void(const Json&)>& yield) {
        int cap = std::min(max, 2);
        for (int n = 1; n <= cap; ++n)
          for (int m = 1; m <= cap; ++m)
            for (const Structure& G : all_groups_of(n))
              for (const Structure& H : all_groups_of(m))
                for (const FinSpace& X : all_spaces_of(n))
                  for (const FinSpace& Y : all_spaces_of(m))
                    yield(Json{
                        {"dom",
                         {{"algebra", structure_to_json(G)},
                          {"space", space_to_json(X)}}},
                        {"cod",
                         {{"algebra", structure_to_json(H)},
                          {"space", space_to_json(Y)}}}});
      },
      check_reflect_morphism);

  return ps;
}

}  // namespace

const std::vector<Property>& all_properties() {
  static const std::vector<Property> ps = build_properties();
  return ps;
}

const Property* find_property(const std::string& id) {
  for (const Property& p : all_properties())
    if (p.id == id) return &p;
  return nullptr;
}

PropertyResult run_property(const Property& p, int max_points) {
  PropertyResult res;
  res.id = p.id;
  res.law = p.law;
  auto start = std::chrono::steady_clock::now();
  p.enumerate(max_points, [&](const Json& inst) {
    if (!res.passed) return;
    ++res.instances;
    if (auto cx = p.check(inst)) {
      res.passed = false;
      res.counterexample = *cx;
    }
  });
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

VerificationReport run_suite(const std::string& suite, int max_points,
                             int jobs) {
  VerificationReport report;
  report.suite = suite;
  report.max_points = max_points;
  std::vector<const Property*> selected;
  for (const Property& p : all_properties())
    if (suite == "all" || p.suite == suite) selected.push_back(&p);
  if (selected.empty() && suite != "all")
    throw Error(ErrorKind::InputError, "unknown suite: " + suite);
  if (jobs <= 1) {
    for (const Property* p : selected)
      report.results.push_back(run_property(*p, max_points));
  } else {
    std::vector<std::future<PropertyResult>> futures;
    for (const Property* p : selected)
      futures.push_back(std::async(std::launch::async, [p, max_points] {
        return run_property(*p, max_points);
      }));
    for (auto& f : futures) report.results.push_back(f.get());
  }
  for (const PropertyResult& r : report.results)
    report.ok = report.ok && r.passed;
  return report;
}

Json report_to_json(const VerificationReport& r) {
  Json props = Json::array();
  for (const PropertyResult& p : r.results) {
    Json entry{{"id", p.id},
               {"law", p.law},
               {"instances", p.instances},
               {"passed", p.passed},
               {"seconds", p.seconds}};
    if (!p.passed) entry["counterexample"] = p.counterexample;
    props.push_back(entry);
  }
  return Json{{"suite", r.suite},
              {"max_points", r.max_points},
              {"ok", r.ok},
              {"properties", props}};
}

bool replay(const std::string& property_id, const Json& instance) {
  const Property* p = find_property(property_id);
  if (!p)
    throw Error(ErrorKind::InputError, "unknown property: " + property_id);
  return !p->check(instance).has_value();
}

}  // namespace finref
