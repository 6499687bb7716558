#include "finref/reflect.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "finref/mutate.hpp"

namespace finref {

const char* method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Direct: return "direct";
    case Method::Partitions: return "partitions";
    case Method::ClosedRel: return "closed-rel";
    case Method::Generated: return "generated";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : {Method::Auto, Method::Direct, Method::Partitions,
                   Method::ClosedRel, Method::Generated})
    if (name == method_name(m)) return m;
  return std::nullopt;
}

bool ClosedRelation::is_diagonal() const {
  for (int x = 0; x < base.n; ++x)
    if (rows[x] != bit(x)) return false;
  return true;
}

Partition ClosedRelation::to_partition() const {
  std::vector<int> ids(base.n);
  for (int x = 0; x < base.n; ++x) ids[x] = lowest_bit(rows[x]);
  return partition_from_ids(ids);
}

bool relation_closed_in_square(const FinSpace& X,
                               const std::vector<Mask>& rows) {
  // (x,y) lies in the closure iff the open box around it meets the relation.
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < X.n; ++y) {
      if (contains(rows[x], y)) continue;
      for (int u : bits_of(X.min_open[x]))
        if (rows[u] & X.min_open[y]) return false;
    }
  return true;
}

ClosedRelation smallest_closed_equivalence(const FinSpace& X) {
  std::vector<Mask> rows(X.n);
  for (int x = 0; x < X.n; ++x) rows[x] = bit(x);
  bool changed = true;
  while (changed) {
    changed = false;
    if (!mutations().scr_skip_closure_step) {
      // Topological closure in the product square.
      std::vector<Mask> next = rows;
      for (int x = 0; x < X.n; ++x)
        for (int y = 0; y < X.n; ++y) {
          if (contains(next[x], y)) continue;
          for (int u : bits_of(X.min_open[x]))
            if (rows[u] & X.min_open[y]) {
              next[x] |= bit(y);
              changed = true;
              break;
            }
        }
      rows = std::move(next);
    }
    // Symmetric-transitive closure (reflexivity is preserved throughout).
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < X.n; ++x)
        for (int y : bits_of(rows[x])) {
          if (!contains(rows[y], x)) {
            rows[y] |= bit(x);
            grew = changed = true;
          }
          if (!subset_of(rows[y], rows[x])) {
            rows[x] |= rows[y];
            grew = changed = true;
          }
        }
    }
  }
  return ClosedRelation{X, std::move(rows)};
}

namespace {

Reflection finish_from_partition(const FinSpace& X, const Partition& P,
                                 const std::string& axiom, Method used,
                                 int iterations = 0) {
  QuotientResult q = quotient(X, P);
  return Reflection{X, std::move(q.space), std::move(q.projection.table),
                    axiom, used, iterations};
}

// Kolmogorov quotient: identify points with equal minimal opens.
Partition t0_kernel(const FinSpace& X) {
  std::vector<int> ids(X.n);
  for (int x = 0; x < X.n; ++x) {
    ids[x] = x;
    for (int y = 0; y < x; ++y)
      if (X.min_open[y] == X.min_open[x]) {
        ids[x] = ids[y];
        break;
      }
  }
  return partition_from_ids(ids);
}

// Finest partition all of whose blocks are closed: merging a block with
// everything its closure touches is forced in any closed-block partition,
// so the least fixpoint of that rule is the intersection of them all.
Partition t1_kernel(const FinSpace& X) {
  std::vector<int> ids(X.n);
  std::iota(ids.begin(), ids.end(), 0);
  if (mutations().t1_skip_closed_filter)
    return partition_from_ids(ids);  // fault injection: no merging at all
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < X.n; ++b) {
      Mask block = 0;
      for (int x = 0; x < X.n; ++x)
        if (ids[x] == b) block |= bit(x);
      if (!block) continue;
      Mask cl = closure(X, block);
      if (cl == block) continue;
      for (int x : bits_of(cl)) {
        int from = ids[x];
        if (from == b) continue;
        for (int y = 0; y < X.n; ++y)
          if (ids[y] == from) ids[y] = b;
      }
      changed = true;
    }
  }
  return partition_from_ids(ids);
}

Reflection t2_reflect(const FinSpace& X, const std::string& axiom,
                      Method used) {
  FinSpace cur = X;
  std::vector<int> arrow(X.n);
  std::iota(arrow.begin(), arrow.end(), 0);
  int rounds = 0;
  while (true) {
    ClosedRelation R = smallest_closed_equivalence(cur);
    if (R.is_diagonal()) break;
    ++rounds;
    QuotientResult q = quotient(cur, R.to_partition());
    for (int x = 0; x < X.n; ++x) arrow[x] = q.projection.table[arrow[x]];
    cur = q.space;
  }
  // Re-quotient the source by the composite kernel for canonical labels.
  Reflection out = finish_from_partition(X, kernel_partition(arrow, X.n),
                                         axiom, used, rounds);
  return out;
}

Partition partitions_kernel(const FinSpace& X, const CategorySpec& C) {
  // Intersection of all equivalence relations whose quotient lies in C.
  std::vector<Mask> rows(X.n);
  for (int x = 0; x < X.n; ++x) rows[x] = X.full();
  bool any = false;
  for_each_partition(X.n, [&](const Partition& P) {
    QuotientResult q = quotient(X, P);
    if (!C.member(q.space)) return;
    any = true;
    for (int x = 0; x < X.n; ++x) rows[x] &= P.blocks[P.block_of(x)];
  });
  if (!any)
    throw Error(ErrorKind::ReflectionNotInClass,
                "no quotient of the space lies in " + C.name);
  std::vector<int> ids(X.n);
  for (int x = 0; x < X.n; ++x) ids[x] = lowest_bit(rows[x]);
  return partition_from_ids(ids);
}

struct OsetData {
  std::vector<std::vector<int>> maps;   // tables of continuous maps into members
  std::vector<Mask> subbase;            // preimages of codomain minimal opens
};

// All continuous maps from X into members of C with at most |X| points,
// together with their oset subbase.  Hereditary classes make this size
// bound sufficient: images of X land in members of size at most |X|.
OsetData collect_member_maps(const FinSpace& X, const CategorySpec& C) {
  OsetData out;
  std::set<Mask> subbase;
  int top = std::max(X.n, 1);
  for (int sz = 1; sz <= top; ++sz) {
    for (const FinSpace& Y : all_spaces_of(sz)) {
      if (!C.member(Y)) continue;
      for_each_cmap(X, Y, [&](const CMap& f) {
        out.maps.push_back(f.table);
        // Preimages of the minimal opens, which generate Y's topology.
        for (int y = 0; y < Y.n; ++y) {
          Mask pre = 0;
          for (int x = 0; x < X.n; ++x)
            if (contains(Y.min_open[y], f.table[x])) pre |= bit(x);
          subbase.insert(pre);
        }
      });
    }
  }
  out.subbase.assign(subbase.begin(), subbase.end());
  return out;
}

FinSpace topology_from_subbase(int n, const std::vector<Mask>& subbase,
                               std::vector<std::string> labels = {}) {
  std::vector<Mask> m(n, full_mask(n));
  for (int x = 0; x < n; ++x)
    for (Mask s : subbase)
      if (contains(s, x)) m[x] &= s;
  return space_from_min_open(std::move(m), std::move(labels));
}

Reflection generated_reflect(const FinSpace& X, const CategorySpec& C,
                             const std::string& axiom, Method used) {
  OsetData data = collect_member_maps(X, C);
  // Identify points no map into the class separates.
  std::vector<int> ids(X.n);
  for (int x = 0; x < X.n; ++x) {
    ids[x] = x;
    for (int y = 0; y < x; ++y) {
      bool agree = true;
      for (const auto& t : data.maps)
        if (t[x] != t[y]) {
          agree = false;
          break;
        }
      if (agree) {
        ids[x] = ids[y];
        break;
      }
    }
  }
  Partition P = partition_from_ids(ids);
  std::vector<int> proj(X.n);
  for (int x = 0; x < X.n; ++x) proj[x] = P.block_of(x);
  // Push the oset subbase down; every oset is a union of fibers.
  std::vector<Mask> pushed;
  for (Mask s : data.subbase) {
    Mask down = 0;
    for (int x : bits_of(s)) down |= bit(proj[x]);
    pushed.push_back(down);
  }
  std::vector<std::string> labels;
  if (!X.labels.empty())
    for (Mask b : P.blocks) labels.push_back(X.labels[lowest_bit(b)]);
  FinSpace target =
      topology_from_subbase(P.block_count(), pushed, std::move(labels));
  return Reflection{X, std::move(target), std::move(proj), axiom, used, 0};
}

std::string space_key(const FinSpace& X) {
  std::string key = std::to_string(X.n);
  for (Mask m : X.min_open) {
    key += ':';
    key += std::to_string(m);
  }
  return key;
}

bool is_builtin_axiom(const CategorySpec& C, Axiom a) {
  return C.name == axiom_name(a);
}

}  // namespace

Reflection reflect(const FinSpace& X, const CategorySpec& C, Method method) {
  Method chosen = method;
  bool direct_capable = is_builtin_axiom(C, Axiom::T0) ||
                        is_builtin_axiom(C, Axiom::T1) ||
                        is_builtin_axiom(C, Axiom::T2);
  if (chosen == Method::Auto) {
    if (direct_capable)
      chosen = Method::Direct;
    else if (C.closed_under_supertopologies)
      chosen = Method::Partitions;
    else
      chosen = Method::Generated;
  }
  switch (chosen) {
    case Method::Direct: {
      if (!direct_capable)
        throw Error(ErrorKind::MethodUnsupported,
                    "direct engine only covers t0, t1, t2 (got " + C.name +
                        ")");
      if (is_builtin_axiom(C, Axiom::T0))
        return finish_from_partition(X, t0_kernel(X), C.name, Method::Direct);
      if (is_builtin_axiom(C, Axiom::T1))
        return finish_from_partition(X, t1_kernel(X), C.name, Method::Direct);
      return t2_reflect(X, C.name, Method::Direct);
    }
    case Method::ClosedRel: {
      if (!C.closed_under_supertopologies)
        throw Error(ErrorKind::MethodUnsupported,
                    "closed-rel requires a class closed under supertopologies");
      if (!is_builtin_axiom(C, Axiom::T2))
        throw Error(ErrorKind::MethodUnsupported,
                    "the closed-relation iteration realizes the t2 reflection "
                    "only");
      return t2_reflect(X, C.name, Method::ClosedRel);
    }
    case Method::Partitions: {
      if (!C.closed_under_supertopologies)
        throw Error(ErrorKind::MethodUnsupported,
                    "partitions engine requires a class closed under "
                    "supertopologies");
      Reflection out = finish_from_partition(X, partitions_kernel(X, C),
                                             C.name, Method::Partitions);
      if (!C.member(out.target))
        throw Error(ErrorKind::ReflectionNotInClass,
                    "partitions engine produced a target outside " + C.name);
      return out;
    }
    case Method::Generated: {
      if (!C.hereditary || !C.productive)
        throw Error(ErrorKind::MethodUnsupported,
                    "generated engine requires a hereditary productive class");
      Reflection out = generated_reflect(X, C, C.name, Method::Generated);
      if (!C.member(out.target))
        throw Error(ErrorKind::ReflectionNotInClass,
                    "generated engine produced a target outside " + C.name);
      return out;
    }
    case Method::Auto: break;
  }
  throw Error(ErrorKind::MethodUnsupported, "unreachable method dispatch");
}

Reflection reflect(const FinSpace& X, Axiom a, Method method) {
  if (mutations().any()) return reflect(X, builtin(a), method);
  static std::map<std::string, Reflection> cache;
  static std::mutex mu;
  std::string key = space_key(X) + "|" + axiom_name(a) + "|" +
                    method_name(method);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      Reflection r = it->second;
      r.source = X;  // restore caller labels
      return r;
    }
  }
  Reflection r = reflect(X, builtin(a), method);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), r);
  return r;
}

UniversalPropertyResult verify_universal_property(const Reflection& R,
                                                  const CategorySpec& C) {
  UniversalPropertyResult res;
  if (!C.member(R.target)) {
    res.detail = "target is not a member of " + C.name;
    return res;
  }
  const CMap arrow = R.arrow();
  if (!is_continuous(arrow) || !is_surjective(arrow)) {
    res.detail = "arrow is not a continuous surjection";
    return res;
  }
  for (int sz = R.source.n == 0 ? 0 : 1; sz <= R.source.n; ++sz) {
    for (const FinSpace& Y : all_spaces_of(sz)) {
      if (!C.member(Y)) continue;
      bool failed = false;
      for_each_cmap(R.source, Y, [&](const CMap& f) {
        if (failed) return;
        // The factoring map is forced by surjectivity of the arrow.
        std::vector<int> g(R.target.n, -1);
        for (int x = 0; x < R.source.n; ++x) {
          int t = R.arrow_table[x];
          if (g[t] == -1)
            g[t] = f.table[x];
          else if (g[t] != f.table[x])
            failed = true;  // no well-defined factorization
        }
        if (!failed && !is_continuous(CMap{R.target, Y, g})) failed = true;
        if (failed) res.certificate = {Y, f.table};
      });
      if (failed) {
        res.detail = "no continuous factorization through the target";
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

bool compose_reflections_check(const FinSpace& X, Axiom c1, Axiom c2) {
  if (!class_nested_in(c2, c1))
    throw Error(ErrorKind::NotNested, std::string(axiom_name(c2)) +
                                          " is not nested in " +
                                          axiom_name(c1));
  Reflection r1 = reflect(X, c1);
  Reflection r2 = reflect(r1.target, c2);
  Reflection direct = reflect(X, c2);
  std::vector<int> t(r2.target.n, -1);
  for (int x = 0; x < X.n; ++x) {
    int via = r2.arrow_table[r1.arrow_table[x]];
    if (t[via] == -1)
      t[via] = direct.arrow_table[x];
    else if (t[via] != direct.arrow_table[x])
      return false;
  }
  CMap h{r2.target, direct.target, t};
  MapPredicates p = map_predicates(h);
  return p.injective && p.surjective && p.continuous && is_open_map(h);
}

std::vector<Mask> c_open_sets(const FinSpace& X, const CategorySpec& C) {
  Reflection r = reflect(X, C);
  std::vector<Mask> fam;
  for (Mask u : open_sets(r.target)) {
    Mask pre = 0;
    for (int x = 0; x < X.n; ++x)
      if (contains(u, r.arrow_table[x])) pre |= bit(x);
    fam.push_back(pre);
  }
  std::sort(fam.begin(), fam.end(), canonical_set_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

std::vector<Mask> c_open_sets(const FinSpace& X, Axiom a) {
  return c_open_sets(X, builtin(a));
}

bool is_c_open(const FinSpace& X, Mask A, const CategorySpec& C) {
  Reflection r = reflect(X, C);
  // Saturated with respect to the arrow and open image.
  Mask img = 0;
  for (int x : bits_of(A)) img |= bit(r.arrow_table[x]);
  for (int x = 0; x < X.n; ++x)
    if (contains(img, r.arrow_table[x]) && !contains(A, x)) return false;
  return is_open(r.target, img);
}

std::vector<Mask> oset_topology_from(const FinSpace& X,
                                     const std::vector<FinSpace>& gens) {
  std::set<Mask> subbase;
  for (const FinSpace& Z : gens)
    for_each_cmap(X, Z, [&](const CMap& f) {
      for (int y = 0; y < Z.n; ++y) {
        Mask pre = 0;
        for (int x = 0; x < X.n; ++x)
          if (contains(Z.min_open[y], f.table[x])) pre |= bit(x);
        subbase.insert(pre);
      }
    });
  FinSpace T = topology_from_subbase(
      X.n, std::vector<Mask>(subbase.begin(), subbase.end()));
  return open_sets(T);
}

std::vector<Mask> oset_topology(const FinSpace& X, const CategorySpec& C) {
  OsetData data = collect_member_maps(X, C);
  FinSpace T = topology_from_subbase(X.n, data.subbase);
  return open_sets(T);
}

bool le_subspace_check(const FinSpace& X, const CategorySpec& C) {
  std::vector<Mask> a = oset_topology(X, C);
  std::vector<Mask> b = c_open_sets(X, C);
  if (a != b) return false;
  if (!C.generators.empty() && oset_topology_from(X, C.generators) != b)
    return false;
  return true;
}

ProductComparison product_preservation(std::span<const FinSpace> Xs,
                                       Axiom a) {
  ProductComparison out;
  out.axiom = axiom_name(a);
  out.factors.assign(Xs.begin(), Xs.end());
  ProductSpace P = product(Xs);
  out.product_reflection = reflect(P.space, a);
  std::vector<FinSpace> targets;
  std::vector<int> sizes;
  for (const FinSpace& X : Xs) {
    out.factor_reflections.push_back(reflect(X, a));
    targets.push_back(out.factor_reflections.back().target);
    sizes.push_back(targets.back().n);
  }
  ProductSpace Q = product(targets);
  const Reflection& rp = out.product_reflection;
  out.mu_table.assign(rp.target.n, -1);
  out.mu_well_defined = true;
  std::vector<int> psizes;
  for (const FinSpace& X : Xs) psizes.push_back(X.n);
  for (int x = 0; x < P.space.n; ++x) {
    auto coords = product_coords(psizes, x);
    std::vector<int> tc(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
      tc[i] = out.factor_reflections[i].arrow_table[coords[i]];
    int value = product_index(sizes, tc);
    int& slot = out.mu_table[rp.arrow_table[x]];
    if (slot == -1)
      slot = value;
    else if (slot != value)
      out.mu_well_defined = false;
  }
  if (!out.mu_well_defined) return out;
  CMap mu{rp.target, Q.space, out.mu_table};
  MapPredicates mp = map_predicates(mu);
  out.is_homeo = mp.injective && mp.surjective && mp.continuous &&
                 is_open_map(mu);
  out.arrows_open = is_open_map(rp.arrow());
  for (const Reflection& r : out.factor_reflections)
    out.arrows_open = out.arrows_open && is_open_map(r.arrow());
  return out;
}

namespace {

struct SubspaceComparison {
  bool well_defined = false;
  bool preserved = false;
};

SubspaceComparison compare_subspace_reflection(const FinSpace& X, Mask A,
                                               Axiom a) {
  SubspaceComparison out;
  SubspaceResult sub = subspace(X, A);
  Reflection rA = reflect(sub.space, a);
  Reflection rX = reflect(X, a);
  std::vector<int> h(rA.target.n, -1);
  for (int i = 0; i < sub.space.n; ++i) {
    int lhs = rA.arrow_table[i];
    int rhs = rX.arrow_table[sub.points[i]];
    if (h[lhs] == -1)
      h[lhs] = rhs;
    else if (h[lhs] != rhs)
      return out;  // the canonical map is ill-defined; cannot be an embedding
  }
  out.well_defined = true;
  CMap hm{rA.target, rX.target, h};
  if (!is_injective(hm) || !is_continuous(hm)) return out;
  Mask image = hm.image(rA.target.full());
  SubspaceResult img = subspace(rX.target, image);
  // h must carry the reflected subspace homeomorphically onto its image.
  std::vector<int> where(rX.target.n, -1);
  for (int i = 0; i < img.space.n; ++i) where[img.points[i]] = i;
  for (int i = 0; i < rA.target.n; ++i)
    for (int j = 0; j < rA.target.n; ++j)
      if (contains(rA.target.min_open[i], j) !=
          contains(img.space.min_open[where[h[i]]], where[h[j]]))
        return out;
  out.preserved = true;
  return out;
}

}  // namespace

bool preserves_subspace(const FinSpace& X, Mask A, Axiom a) {
  if (A == 0) throw Error(ErrorKind::EmptySubset, "empty subspace");
  return compare_subspace_reflection(X, A, a).preserved;
}

std::pair<bool, bool> pr_subspace_criterion(const FinSpace& X, Mask A,
                                            Axiom a) {
  if (A == 0) throw Error(ErrorKind::EmptySubset, "empty subspace");
  SubspaceResult sub = subspace(X, A);
  Reflection rA = reflect(sub.space, a);
  Reflection rX = reflect(X, a);
  bool cond1 = true;
  for (int i = 0; i < sub.space.n && cond1; ++i)
    for (int j = 0; j < sub.space.n; ++j)
      if (rA.arrow_table[i] != rA.arrow_table[j] &&
          rX.arrow_table[sub.points[i]] == rX.arrow_table[sub.points[j]]) {
        cond1 = false;
        break;
      }
  std::vector<Mask> famA = c_open_sets(sub.space, a);
  std::vector<Mask> famX = c_open_sets(X, a);
  bool cond2 = true;
  for (Mask F : famA) {
    Mask lifted = 0;
    for (int i : bits_of(F)) lifted |= bit(sub.points[i]);
    bool traced = false;
    for (Mask E : famX)
      if ((E & A) == lifted) {
        traced = true;
        break;
      }
    if (!traced) {
      cond2 = false;
      break;
    }
  }
  return {cond1, cond2};
}

bool is_t1_closed(const FinSpace& X, Mask A) {
  return is_c_open(X, X.full() & ~A, builtin(Axiom::T1));
}

bool in_generated_class(const FinSpace& Y,
                        const std::vector<FinSpace>& gens) {
  if (Y.n == 0) return true;
  std::set<Mask> subbase;
  std::vector<std::vector<int>> tables;
  for (const FinSpace& Z : gens)
    for_each_cmap(Y, Z, [&](const CMap& f) {
      tables.push_back(f.table);
      for (int z = 0; z < Z.n; ++z) {
        Mask pre = 0;
        for (int y = 0; y < Y.n; ++y)
          if (contains(Z.min_open[z], f.table[y])) pre |= bit(y);
        subbase.insert(pre);
      }
    });
  for (int y = 0; y < Y.n; ++y)
    for (int y2 = y + 1; y2 < Y.n; ++y2) {
      bool separated = false;
      for (const auto& t : tables)
        if (t[y] != t[y2]) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  FinSpace T = topology_from_subbase(
      Y.n, std::vector<Mask>(subbase.begin(), subbase.end()));
  return T.min_open == Y.min_open;
}

namespace {

// Continuous extension search with some values pinned.
bool extension_exists(const FinSpace& X, const FinSpace& Y,
                      const std::vector<int>& forced) {
  std::vector<int> table(X.n, -1);
  auto dfs = [&](auto&& self, int x) -> bool {
    if (x == X.n) return true;
    int lo = 0, hi = Y.n - 1;
    if (forced[x] >= 0) lo = hi = forced[x];
    for (int v = lo; v <= hi; ++v) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (contains(X.min_open[x], y) && !contains(Y.min_open[v], table[y]))
          ok = false;
        if (contains(X.min_open[y], x) && !contains(Y.min_open[table[y]], v))
          ok = false;
      }
      if (!ok) continue;
      table[x] = v;
      if (self(self, x + 1)) return true;
    }
    table[x] = -1;
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace

bool is_a_embedded(const FinSpace& X, Mask A,
                   const std::vector<FinSpace>& gens, int size_bound) {
  if (A == 0) throw Error(ErrorKind::EmptySubset, "empty subset");
  int largest = 0;
  for (const FinSpace& Z : gens) largest = std::max(largest, Z.n);
  if (size_bound < 0) size_bound = X.n + largest;
  SubspaceResult sub = subspace(X, A);
  for (const FinSpace& Z : gens) {
    bool all_extend = true;
    for_each_cmap(sub.space, Z, [&](const CMap& f) {
      if (!all_extend) return;
      bool found = false;
      for (int sz = Z.n; sz <= size_bound && !found; ++sz) {
        for (const FinSpace& Y : all_spaces_of(sz)) {
          if (found) break;
          if (!in_generated_class(Y, gens)) continue;
          // Embeddings of the generator into the candidate codomain.
          for_each_cmap(Z, Y, [&](const CMap& e) {
            if (found || !is_injective(e)) return;
            for (int z = 0; z < Z.n; ++z)
              for (int z2 = 0; z2 < Z.n; ++z2)
                if (contains(Z.min_open[z], z2) !=
                    contains(Y.min_open[e.table[z]], e.table[z2]))
                  return;  // not a subspace copy
            std::vector<int> forced(X.n, -1);
            for (int i = 0; i < sub.space.n; ++i)
              forced[sub.points[i]] = e.table[f.table[i]];
            if (extension_exists(X, Y, forced)) found = true;
          });
        }
      }
      if (!found) all_extend = false;
    });
    if (!all_extend) return false;
  }
  return true;
}

namespace {

void check_coincide_pre(Axiom c, Axiom e) {
  if (!class_nested_in(c, Axiom::T0) || !class_nested_in(e, Axiom::T0))
    throw Error(ErrorKind::NotT0Contained,
                "coincidence requires both classes nested in t0");
  if (!class_nested_in(e, c))
    throw Error(ErrorKind::NotNested, std::string(axiom_name(e)) +
                                          " is not nested in " +
                                          axiom_name(c));
}

}  // namespace

bool coincide(const FinSpace& X, Axiom c, Axiom e) {
  check_coincide_pre(c, e);
  Reflection rc = reflect(X, c);
  Reflection re = reflect(X, e);
  std::vector<int> t(rc.target.n, -1);
  for (int x = 0; x < X.n; ++x) {
    int& slot = t[rc.arrow_table[x]];
    if (slot == -1)
      slot = re.arrow_table[x];
    else if (slot != re.arrow_table[x])
      return false;
  }
  CMap h{rc.target, re.target, t};
  MapPredicates p = map_predicates(h);
  return p.injective && p.surjective && p.continuous && is_open_map(h);
}

bool coincide_criterion(const FinSpace& X, Axiom c, Axiom e) {
  check_coincide_pre(c, e);
  std::vector<Mask> fc = c_open_sets(X, c);
  std::vector<Mask> fe = c_open_sets(X, e);
  std::set<Mask> es(fe.begin(), fe.end());
  for (Mask u : fc)
    if (!es.count(u)) return false;
  return true;
}

bool t1_closed_separation(const FinSpace& X) {
  std::vector<Mask> t1open = c_open_sets(X, Axiom::T1);
  for (Mask u : t1open) {
    Mask F = X.full() & ~u;  // a t1-closed set
    for (int x : bits_of(u))
      if (!completely_separated(X, F, bit(x))) return false;
  }
  return true;
}

const std::vector<const FinSpace*>& members_of(Axiom a, int n) {
  static std::map<std::pair<int, int>, std::vector<const FinSpace*>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(a), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<const FinSpace*> v;
    const CategorySpec& C = builtin(a);
    for (const FinSpace& X : all_spaces_of(n))
      if (C.member(X)) v.push_back(&X);
    it = cache.emplace(key, std::move(v)).first;
  }
  return it->second;
}

}  // namespace finref
