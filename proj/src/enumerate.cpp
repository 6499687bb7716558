#include "finref/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

namespace finref {

int enumeration_guard() {
  static int guard = [] {
    if (const char* env = std::getenv("FINREF_MAX_POINTS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 5;
  }();
  return guard;
}

static void check_guard(int n, int guard) {
  if (guard < 0) guard = enumeration_guard();
  if (n > guard)
    throw Error(ErrorKind::SizeLimit, "enumeration bound exceeded (n=" +
                                          std::to_string(n) + ", guard=" +
                                          std::to_string(guard) + ")");
}

namespace {

using Family = std::vector<Mask>;  // sorted proper nonempty opens

// Union/intersection closure of a family of proper subsets of full; results
// equal to 0 or full are dropped (always present implicitly).
Family close_family(Family f, Mask full) {
  std::set<Mask> s(f.begin(), f.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(s.begin(), s.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        for (Mask v : {Mask(cur[i] | cur[j]), Mask(cur[i] & cur[j])})
          if (v != 0 && v != full && s.insert(v).second) grew = true;
  }
  return Family(s.begin(), s.end());
}

FinSpace space_from_family(int n, const Family& f) {
  const Mask full = full_mask(n);
  std::vector<Mask> min_open(n);
  for (int x = 0; x < n; ++x) {
    Mask m = full;
    for (Mask u : f)
      if (contains(u, x)) m &= u;
    min_open[x] = m;
  }
  return FinSpace{n, std::move(min_open), {}};
}

void topology_dfs(int n, const Family& family, Mask start,
                  const std::function<void(const FinSpace&)>& fn) {
  fn(space_from_family(n, family));
  const Mask full = full_mask(n);
  for (Mask s = start; s < full; ++s) {
    if (std::binary_search(family.begin(), family.end(), s)) continue;
    Family ext = family;
    ext.push_back(s);
    ext = close_family(std::move(ext), full);
    // Canonical growth: closing must not force a set below s that the
    // family does not already hold.
    bool canonical = true;
    for (Mask v : ext)
      if (v < s && !std::binary_search(family.begin(), family.end(), v)) {
        canonical = false;
        break;
      }
    if (canonical) topology_dfs(n, ext, s + 1, fn);
  }
}

}  // namespace

void for_each_topology(int n, const std::function<void(const FinSpace&)>& fn,
                       int guard) {
  check_guard(n, guard);
  topology_dfs(n, {}, 1, fn);
}

void for_each_preorder(int n,
                       const std::function<void(const std::vector<Mask>&)>& fn,
                       int guard) {
  check_guard(n, guard);
  std::vector<std::pair<int, int>> offdiag;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) offdiag.emplace_back(x, y);
  const std::uint64_t total = std::uint64_t{1} << offdiag.size();
  std::vector<Mask> rel(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int x = 0; x < n; ++x) rel[x] = bit(x);
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if ((code >> i) & 1) rel[offdiag[i].first] |= bit(offdiag[i].second);
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y : bits_of(rel[x])) {
        if (!subset_of(rel[y], rel[x])) {
          transitive = false;
          break;
        }
      }
    if (transitive) fn(rel);
  }
}

std::size_t count_topologies(int n, int guard) {
  std::size_t c = 0;
  for_each_topology(n, [&](const FinSpace&) { ++c; }, guard);
  return c;
}

std::size_t count_preorders(int n, int guard) {
  std::size_t c = 0;
  for_each_preorder(n, [&](const std::vector<Mask>&) { ++c; }, guard);
  return c;
}

const std::vector<FinSpace>& all_spaces_of(int n) {
  static std::map<int, std::vector<FinSpace>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<FinSpace> v;
    for_each_topology(n, [&](const FinSpace& X) { v.push_back(X); },
                      std::max(n, enumeration_guard()));
    it = cache.emplace(n, std::move(v)).first;
  }
  return it->second;
}

const std::vector<FinSpace>& all_spaces_up_to(int max_n) {
  static std::map<int, std::vector<FinSpace>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(max_n);
    if (it != cache.end()) return it->second;
  }
  std::vector<FinSpace> v;
  for (int n = 0; n <= max_n; ++n)
    for (const FinSpace& X : all_spaces_of(n)) v.push_back(X);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(max_n, std::move(v)).first->second;
}

namespace {

void cmap_dfs(const FinSpace& X, const FinSpace& Y, std::vector<int>& table,
              int x, const std::function<void(const CMap&)>& fn) {
  if (x == X.n) {
    fn(CMap{X, Y, table});
    return;
  }
  for (int v = 0; v < Y.n; ++v) {
    bool ok = true;
    for (int y = 0; y <= x && ok; ++y) {
      if (y < x && contains(X.min_open[x], y) &&
          !contains(Y.min_open[v], table[y]))
        ok = false;
      if (y < x && contains(X.min_open[y], x) &&
          !contains(Y.min_open[table[y]], v))
        ok = false;
    }
    if (!ok) continue;
    table[x] = v;
    cmap_dfs(X, Y, table, x + 1, fn);
  }
}

}  // namespace

void for_each_cmap(const FinSpace& X, const FinSpace& Y,
                   const std::function<void(const CMap&)>& fn) {
  if (Y.n == 0) {
    if (X.n == 0) fn(CMap{X, Y, {}});
    return;
  }
  std::vector<int> table(X.n, 0);
  cmap_dfs(X, Y, table, 0, fn);
}

std::vector<CMap> continuous_maps(const FinSpace& X, const FinSpace& Y) {
  std::vector<CMap> out;
  for_each_cmap(X, Y, [&](const CMap& f) { out.push_back(f); });
  return out;
}

namespace {

void rgs_dfs(int n, std::vector<int>& a, int i, int max_used,
             const std::function<void(const Partition&)>& fn) {
  if (i == n) {
    fn(partition_from_ids(a));
    return;
  }
  for (int v = 0; v <= max_used + 1; ++v) {
    a[i] = v;
    rgs_dfs(n, a, i + 1, std::max(max_used, v), fn);
  }
}

}  // namespace

void for_each_partition(int n,
                        const std::function<void(const Partition&)>& fn) {
  if (n == 0) {
    fn(Partition{0, {}});
    return;
  }
  std::vector<int> a(n, 0);
  rgs_dfs(n, a, 1, 0, fn);
}

std::size_t count_partitions(int n) {
  std::size_t c = 0;
  for_each_partition(n, [&](const Partition&) { ++c; });
  return c;
}

}  // namespace finref
