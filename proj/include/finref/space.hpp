#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finref/error.hpp"
#include "finref/sets.hpp"

namespace finref {

// Hard cap for direct constructions; subsets are single 64-bit masks.
inline constexpr int kMaxPoints = 64;

// A finite topological space.  Every topology on a finite set is Alexandrov,
// so it is stored through its minimal open sets: min_open[x] is the
// intersection of all open sets containing x, and a set U is open iff
// min_open[x] is contained in U for every x in U.  The derived specialization
// preorder is x <= y iff y belongs to min_open[x]; this orientation is a
// convention, the theory works for either choice.
struct FinSpace {
  int n = 0;
  std::vector<Mask> min_open;        // size n
  std::vector<std::string> labels;   // empty or size n

  Mask full() const { return full_mask(n); }
  bool leq(int x, int y) const { return contains(min_open[x], y); }
  std::string label(int i) const;
};

// Validates an explicit open-set family (empty set and full set present,
// closure under binary union and intersection) and derives min-opens.
// Throws NotATopology with a witness pair on failure.
FinSpace make_space(int n, std::vector<Mask> opens,
                    std::vector<std::string> labels = {});

// Builds a space from minimal open sets; checks x in m[x] and
// y in m[x] => m[y] subset of m[x].
FinSpace space_from_min_open(std::vector<Mask> min_open,
                             std::vector<std::string> labels = {});

// Canonical open-set family, ordered by size then lexicographically.
// Enumerates all up-sets; guarded, the family can have 2^n members.
std::vector<Mask> open_sets(const FinSpace& X);
std::size_t open_set_count(const FinSpace& X);

bool is_open(const FinSpace& X, Mask A);
bool is_closed(const FinSpace& X, Mask A);
Mask closure(const FinSpace& X, Mask A);
// Smallest open superset of A.
Mask open_hull(const FinSpace& X, Mask A);
// Partition of the points into weak components of the specialization
// preorder; the clopen subsets are exactly the unions of these.
std::vector<Mask> weak_components(const FinSpace& X);

bool same_space(const FinSpace& X, const FinSpace& Y);  // identical min-opens

FinSpace discrete_space(int n);
FinSpace indiscrete_space(int n);
FinSpace sierpinski();  // opens {}, {1}, {0,1}

// A map between finite spaces, given by its value table.
struct CMap {
  FinSpace dom;
  FinSpace cod;
  std::vector<int> table;  // size dom.n, values in [0, cod.n)

  int operator()(int x) const { return table[x]; }
  Mask image(Mask A) const;
};

CMap identity_map(const FinSpace& X);
CMap compose(const CMap& g, const CMap& f);  // g after f

bool is_continuous(const CMap& f);
bool is_open_map(const CMap& f);
bool is_injective(const CMap& f);
bool is_surjective(const CMap& f);
bool is_quotient_map(const CMap& f);

struct MapPredicates {
  bool continuous, open, quotient, injective, surjective;
};
MapPredicates map_predicates(const CMap& f);

// Minimal open sets of the final topology induced by a surjection f on the
// codomain carrier: the finest topology making f continuous.
std::vector<Mask> final_min_open(const FinSpace& dom,
                                 const std::vector<int>& table, int cod_n);

// An equivalence relation on {0..n-1} stored as its blocks, sorted by least
// element.  Also serves as a candidate congruence.
struct Partition {
  int n = 0;
  std::vector<Mask> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int block_of(int x) const;
  bool related(int x, int y) const { return block_of(x) == block_of(y); }
  bool operator==(const Partition&) const = default;
};

Partition make_partition(int n, std::vector<Mask> blocks);
Partition partition_from_ids(const std::vector<int>& block_id);
Partition identity_partition(int n);
Partition total_partition(int n);
Partition kernel_partition(const std::vector<int>& table, int n);
// Pairwise-meet: x ~ y iff related in both.
Partition meet(const Partition& a, const Partition& b);
// Finest common coarsening: transitive closure of the union.
Partition join(const Partition& a, const Partition& b);
bool refines(const Partition& fine, const Partition& coarse);

// Constructions.  Product carriers are indexed row-major with the leftmost
// factor slowest.
struct ProductSpace {
  FinSpace space;
  std::vector<CMap> projections;
};
ProductSpace product(std::span<const FinSpace> factors);
ProductSpace product(const FinSpace& a, const FinSpace& b);
// Same carrier, a set is open iff it absorbs every coordinate cross-slice;
// maps out of it are continuous iff separately continuous.
FinSpace cross_product(std::span<const FinSpace> factors);
FinSpace cross_product(const FinSpace& a, const FinSpace& b);

int product_index(std::span<const int> sizes, std::span<const int> coords);
std::vector<int> product_coords(std::span<const int> sizes, int index);

struct SubspaceResult {
  FinSpace space;
  CMap inclusion;
  std::vector<int> points;  // subspace index -> ambient point
};
SubspaceResult subspace(const FinSpace& X, Mask A);

struct QuotientResult {
  FinSpace space;  // points are the partition blocks
  CMap projection;
  Partition partition;
};
QuotientResult quotient(const FinSpace& X, const Partition& P);

FinSpace disjoint_union(const FinSpace& a, const FinSpace& b);

// Witness bijection preserving opens both ways, or nullopt.
std::optional<std::vector<int>> is_homeomorphic(const FinSpace& X,
                                                const FinSpace& Y);

}  // namespace finref
