#include "finref/space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace finref {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::UnknownAxiom: return "UnknownAxiom";
    case ErrorKind::MethodUnsupported: return "MethodUnsupported";
    case ErrorKind::ReflectionNotInClass: return "ReflectionNotInClass";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotT0Contained: return "NotT0Contained";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::KernelNotCongruence: return "KernelNotCongruence";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::NotMaltsev: return "NotMaltsev";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::InputError: return "InputError";
  }
  return "Error";
}

std::string FinSpace::label(int i) const {
  if (!labels.empty()) return labels[i];
  return std::to_string(i);
}

static std::string set_to_string(const FinSpace& X, Mask A) {
  std::string s = "{";
  bool first = true;
  for (int i : bits_of(A)) {
    if (!first) s += ",";
    s += X.label(i);
    first = false;
  }
  return s + "}";
}

FinSpace make_space(int n, std::vector<Mask> opens,
                    std::vector<std::string> labels) {
  if (n < 0 || n > kMaxPoints)
    throw Error(ErrorKind::SizeLimit, "point count out of range");
  const Mask full = full_mask(n);
  for (Mask u : opens)
    if (!subset_of(u, full))
      throw Error(ErrorKind::NotATopology, "open set outside the point range");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  std::unordered_set<Mask> family(opens.begin(), opens.end());
  FinSpace dummy{n, {}, labels};
  if (!family.count(0))
    throw Error(ErrorKind::NotATopology, "the empty set is missing");
  if (!family.count(full))
    throw Error(ErrorKind::NotATopology, "the full set is missing");
  for (Mask u : opens)
    for (Mask v : opens) {
      if (!family.count(u | v))
        throw Error(ErrorKind::NotATopology,
                    "union of " + set_to_string(dummy, u) + " and " +
                        set_to_string(dummy, v) + " is not in the family");
      if (!family.count(u & v))
        throw Error(ErrorKind::NotATopology,
                    "intersection of " + set_to_string(dummy, u) + " and " +
                        set_to_string(dummy, v) + " is not in the family");
    }
  std::vector<Mask> min_open(n, 0);
  for (int x = 0; x < n; ++x) {
    Mask m = full;
    for (Mask u : opens)
      if (contains(u, x)) m &= u;
    min_open[x] = m;
  }
  // The family contains every min-open (finite intersection closure), but the
  // family may be a strict subfamily of all up-sets; that is fine, the opens
  // it lists and the up-sets of min_open coincide only when the family is the
  // whole topology.  Validate that the family is exactly the up-set family.
  for (Mask u : opens)
    for (int x : bits_of(u))
      if (!subset_of(min_open[x], u))
        throw Error(ErrorKind::NotATopology, "internal: min-open not minimal");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::InputError, "label count does not match points");
  // Closure under binary unions and intersections makes the family exactly
  // the up-set family of the derived preorder, so nothing else to validate.
  return FinSpace{n, std::move(min_open), std::move(labels)};
}

FinSpace space_from_min_open(std::vector<Mask> min_open,
                             std::vector<std::string> labels) {
  int n = static_cast<int>(min_open.size());
  if (n > kMaxPoints) throw Error(ErrorKind::SizeLimit, "too many points");
  for (int x = 0; x < n; ++x) {
    if (!contains(min_open[x], x))
      throw Error(ErrorKind::NotATopology, "x not in its minimal open set");
    for (int y : bits_of(min_open[x]))
      if (!subset_of(min_open[y], min_open[x]))
        throw Error(ErrorKind::NotATopology,
                    "minimal opens are not a preorder");
  }
  return FinSpace{n, std::move(min_open), std::move(labels)};
}

std::vector<Mask> open_sets(const FinSpace& X) {
  if (X.n > 22)
    throw Error(ErrorKind::SizeLimit, "open-set family too large to list");
  // BFS over unions of minimal opens.
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> frontier{0}, all{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask u : frontier)
      for (int x = 0; x < X.n; ++x) {
        Mask v = u | X.min_open[x];
        if (seen.insert(v).second) {
          next.push_back(v);
          all.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), canonical_set_less);
  return all;
}

std::size_t open_set_count(const FinSpace& X) {
  if (X.n <= 22) return open_sets(X).size();
  throw Error(ErrorKind::SizeLimit, "open-set family too large to count");
}

bool is_open(const FinSpace& X, Mask A) {
  for (int x : bits_of(A))
    if (!subset_of(X.min_open[x], A)) return false;
  return true;
}

bool is_closed(const FinSpace& X, Mask A) {
  return is_open(X, X.full() & ~A);
}

Mask closure(const FinSpace& X, Mask A) {
  Mask c = 0;
  for (int x = 0; x < X.n; ++x)
    if (X.min_open[x] & A) c |= bit(x);
  return c;
}

Mask open_hull(const FinSpace& X, Mask A) {
  Mask h = 0;
  for (int x : bits_of(A)) h |= X.min_open[x];
  return h;
}

std::vector<Mask> weak_components(const FinSpace& X) {
  std::vector<int> comp(X.n, -1);
  int c = 0;
  for (int s = 0; s < X.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < X.n; ++y) {
        if (comp[y] >= 0) continue;
        if (contains(X.min_open[x], y) || contains(X.min_open[y], x)) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  std::vector<Mask> out(c, 0);
  for (int x = 0; x < X.n; ++x) out[comp[x]] |= bit(x);
  return out;
}

bool same_space(const FinSpace& X, const FinSpace& Y) {
  return X.n == Y.n && X.min_open == Y.min_open;
}

FinSpace discrete_space(int n) {
  std::vector<Mask> m(n);
  for (int i = 0; i < n; ++i) m[i] = bit(i);
  return FinSpace{n, std::move(m), {}};
}

FinSpace indiscrete_space(int n) {
  std::vector<Mask> m(n, full_mask(n));
  if (n == 0) m.clear();
  return FinSpace{n, std::move(m), {}};
}

FinSpace sierpinski() {
  return FinSpace{2, {full_mask(2), bit(1)}, {}};
}

Mask CMap::image(Mask A) const {
  Mask out = 0;
  for (int x : bits_of(A)) out |= bit(table[x]);
  return out;
}

CMap identity_map(const FinSpace& X) {
  std::vector<int> t(X.n);
  std::iota(t.begin(), t.end(), 0);
  return CMap{X, X, std::move(t)};
}

CMap compose(const CMap& g, const CMap& f) {
  std::vector<int> t(f.dom.n);
  for (int x = 0; x < f.dom.n; ++x) t[x] = g.table[f.table[x]];
  return CMap{f.dom, g.cod, std::move(t)};
}

bool is_continuous(const CMap& f) {
  for (int x = 0; x < f.dom.n; ++x) {
    Mask target = f.cod.min_open[f.table[x]];
    for (int y : bits_of(f.dom.min_open[x]))
      if (!contains(target, f.table[y])) return false;
  }
  return true;
}

bool is_open_map(const CMap& f) {
  for (int x = 0; x < f.dom.n; ++x)
    if (!is_open(f.cod, f.image(f.dom.min_open[x]))) return false;
  return true;
}

bool is_injective(const CMap& f) {
  Mask seen = 0;
  for (int v : f.table) {
    if (contains(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

bool is_surjective(const CMap& f) {
  Mask seen = 0;
  for (int v : f.table) seen |= bit(v);
  return seen == f.cod.full();
}

std::vector<Mask> final_min_open(const FinSpace& dom,
                                 const std::vector<int>& table, int cod_n) {
  std::vector<Mask> out(cod_n, 0);
  for (int b = 0; b < cod_n; ++b) {
    Mask v = bit(b);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < dom.n; ++x) {
        if (!contains(v, table[x])) continue;
        for (int y : bits_of(dom.min_open[x]))
          if (!contains(v, table[y])) {
            v |= bit(table[y]);
            grew = true;
          }
      }
    }
    out[b] = v;
  }
  return out;
}

bool is_quotient_map(const CMap& f) {
  if (!is_surjective(f) || !is_continuous(f)) return false;
  return final_min_open(f.dom, f.table, f.cod.n) == f.cod.min_open;
}

MapPredicates map_predicates(const CMap& f) {
  return MapPredicates{is_continuous(f), is_open_map(f), is_quotient_map(f),
                       is_injective(f), is_surjective(f)};
}

int Partition::block_of(int x) const {
  for (int b = 0; b < block_count(); ++b)
    if (contains(blocks[b], x)) return b;
  return -1;
}

Partition make_partition(int n, std::vector<Mask> blocks) {
  Mask covered = 0;
  for (Mask b : blocks) {
    if (b == 0) throw Error(ErrorKind::InvalidPartition, "empty block");
    if (covered & b)
      throw Error(ErrorKind::InvalidPartition, "blocks are not disjoint");
    covered |= b;
  }
  if (covered != full_mask(n))
    throw Error(ErrorKind::InvalidPartition, "blocks do not cover the points");
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
  return Partition{n, std::move(blocks)};
}

Partition partition_from_ids(const std::vector<int>& block_id) {
  int n = static_cast<int>(block_id.size());
  std::map<int, Mask> by_id;
  for (int x = 0; x < n; ++x) by_id[block_id[x]] |= bit(x);
  std::vector<Mask> blocks;
  for (auto& [_, b] : by_id) blocks.push_back(b);
  return make_partition(n, std::move(blocks));
}

Partition identity_partition(int n) {
  std::vector<Mask> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = bit(i);
  return Partition{n, std::move(blocks)};
}

Partition total_partition(int n) {
  if (n == 0) return Partition{0, {}};
  return Partition{n, {full_mask(n)}};
}

Partition kernel_partition(const std::vector<int>& table, int n) {
  std::vector<int> ids(table.begin(), table.end());
  ids.resize(n);
  return partition_from_ids(ids);
}

Partition meet(const Partition& a, const Partition& b) {
  std::vector<int> ids(a.n);
  for (int x = 0; x < a.n; ++x)
    ids[x] = a.block_of(x) * (b.block_count() + 1) + b.block_of(x);
  return partition_from_ids(ids);
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parent(a.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const Partition* p : {&a, &b})
    for (Mask blk : p->blocks) {
      auto pts = bits_of(blk);
      for (std::size_t i = 1; i < pts.size(); ++i) unite(pts[0], pts[i]);
    }
  std::vector<int> ids(a.n);
  for (int x = 0; x < a.n; ++x) ids[x] = find(x);
  return partition_from_ids(ids);
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (Mask b : fine.blocks) {
    int c = coarse.block_of(lowest_bit(b));
    if (!subset_of(b, coarse.blocks[c])) return false;
  }
  return true;
}

int product_index(std::span<const int> sizes, std::span<const int> coords) {
  int idx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + coords[i];
  return idx;
}

std::vector<int> product_coords(std::span<const int> sizes, int index) {
  std::vector<int> c(sizes.size());
  for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
    c[i] = index % sizes[i];
    index /= sizes[i];
  }
  return c;
}

static std::vector<int> factor_sizes(std::span<const FinSpace> factors) {
  std::vector<int> sizes;
  long long total = 1;
  for (const FinSpace& f : factors) {
    sizes.push_back(f.n);
    total *= std::max(f.n, 1);
    if (total > kMaxPoints)
      throw Error(ErrorKind::SizeLimit, "product carrier exceeds 64 points");
  }
  return sizes;
}

ProductSpace product(std::span<const FinSpace> factors) {
  if (factors.empty())
    throw Error(ErrorKind::InputError, "product of an empty list");
  std::vector<int> sizes = factor_sizes(factors);
  long long total = 1;
  for (int s : sizes) total *= s;
  int n = static_cast<int>(total);
  std::vector<Mask> m(n, 0);
  std::vector<std::string> labels(n);
  for (int p = 0; p < n; ++p) {
    auto pc = product_coords(sizes, p);
    std::string lab;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      lab += (i ? "," : "(") + factors[i].label(pc[i]);
    }
    labels[p] = lab + ")";
    for (int q = 0; q < n; ++q) {
      auto qc = product_coords(sizes, q);
      bool in = true;
      for (std::size_t i = 0; i < factors.size() && in; ++i)
        in = contains(factors[i].min_open[pc[i]], qc[i]);
      if (in) m[p] |= bit(q);
    }
  }
  FinSpace P{n, std::move(m), std::move(labels)};
  ProductSpace out{P, {}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<int> t(n);
    for (int p = 0; p < n; ++p) t[p] = product_coords(sizes, p)[i];
    out.projections.push_back(CMap{P, factors[i], std::move(t)});
  }
  return out;
}

ProductSpace product(const FinSpace& a, const FinSpace& b) {
  FinSpace fs[2] = {a, b};
  return product(std::span<const FinSpace>(fs, 2));
}

FinSpace cross_product(std::span<const FinSpace> factors) {
  if (factors.empty())
    throw Error(ErrorKind::InputError, "cross product of an empty list");
  std::vector<int> sizes = factor_sizes(factors);
  long long total = 1;
  for (int s : sizes) total *= s;
  int n = static_cast<int>(total);
  std::vector<Mask> m(n, 0);
  for (int p = 0; p < n; ++p) {
    Mask v = bit(p);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int q : bits_of(v)) {
        auto qc = product_coords(sizes, q);
        for (std::size_t i = 0; i < factors.size(); ++i) {
          auto rc = qc;
          for (int val : bits_of(factors[i].min_open[qc[i]])) {
            rc[i] = val;
            int r = product_index(sizes, rc);
            if (!contains(v, r)) {
              v |= bit(r);
              grew = true;
            }
          }
        }
      }
    }
    m[p] = v;
  }
  return space_from_min_open(std::move(m));
}

FinSpace cross_product(const FinSpace& a, const FinSpace& b) {
  FinSpace fs[2] = {a, b};
  return cross_product(std::span<const FinSpace>(fs, 2));
}

SubspaceResult subspace(const FinSpace& X, Mask A) {
  if (A == 0) throw Error(ErrorKind::EmptySubset, "subspace of the empty set");
  std::vector<int> points = bits_of(A);
  int k = static_cast<int>(points.size());
  std::vector<int> index(X.n, -1);
  for (int i = 0; i < k; ++i) index[points[i]] = i;
  std::vector<Mask> m(k, 0);
  std::vector<std::string> labels;
  if (!X.labels.empty())
    for (int p : points) labels.push_back(X.labels[p]);
  for (int i = 0; i < k; ++i)
    for (int y : bits_of(X.min_open[points[i]] & A)) m[i] |= bit(index[y]);
  FinSpace S = space_from_min_open(std::move(m), std::move(labels));
  CMap incl{S, X, points};
  return SubspaceResult{std::move(S), std::move(incl), std::move(points)};
}

QuotientResult quotient(const FinSpace& X, const Partition& P) {
  if (P.n != X.n)
    throw Error(ErrorKind::InvalidPartition, "partition on the wrong carrier");
  std::vector<int> proj(X.n);
  for (int x = 0; x < X.n; ++x) proj[x] = P.block_of(x);
  std::vector<Mask> m = final_min_open(X, proj, P.block_count());
  std::vector<std::string> labels;
  if (!X.labels.empty())
    for (Mask b : P.blocks) labels.push_back(X.labels[lowest_bit(b)]);
  FinSpace Q = space_from_min_open(std::move(m), std::move(labels));
  CMap pr{X, Q, std::move(proj)};
  return QuotientResult{std::move(Q), std::move(pr), P};
}

FinSpace disjoint_union(const FinSpace& a, const FinSpace& b) {
  if (a.n + b.n > kMaxPoints)
    throw Error(ErrorKind::SizeLimit, "disjoint union exceeds 64 points");
  std::vector<Mask> m;
  for (Mask u : a.min_open) m.push_back(u);
  for (Mask u : b.min_open) m.push_back(u << a.n);
  return space_from_min_open(std::move(m));
}

namespace {

// Backtracking over specialization-preorder isomorphisms; candidates are
// pruned by min-open and point-closure sizes.
bool homeo_search(const FinSpace& X, const FinSpace& Y, std::vector<int>& map,
                  Mask& used, int x) {
  if (x == X.n) return true;
  for (int y = 0; y < Y.n; ++y) {
    if (contains(used, y)) continue;
    if (popcount(X.min_open[x]) != popcount(Y.min_open[y])) continue;
    if (popcount(closure(X, bit(x))) != popcount(closure(Y, bit(y)))) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (contains(X.min_open[z], x) != contains(Y.min_open[map[z]], y)) ok = false;
      if (contains(X.min_open[x], z) != contains(Y.min_open[y], map[z])) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used |= bit(y);
    if (homeo_search(X, Y, map, used, x + 1)) return true;
    used &= ~bit(y);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_homeomorphic(const FinSpace& X,
                                                const FinSpace& Y) {
  if (X.n != Y.n) return std::nullopt;
  std::vector<int> map(X.n, -1);
  Mask used = 0;
  if (homeo_search(X, Y, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace finref
