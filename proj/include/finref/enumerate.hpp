#pragma once

#include <functional>
#include <vector>

#include "finref/space.hpp"

namespace finref {

// Default cap for exhaustive enumeration; FINREF_MAX_POINTS overrides.
int enumeration_guard();

// Streams every labeled topology on n points exactly once.  Grows
// union/intersection-closed set families over a canonical search: proper
// open sets are added in increasing numeric order and each addition is
// closed under unions and intersections; a branch is pruned when closing
// forces a set smaller than the one just added.  Independent of the
// preorder route below.
void for_each_topology(int n, const std::function<void(const FinSpace&)>& fn,
                       int guard = -1);

// Streams every reflexive-transitive relation on n points, as the matrix of
// row masks rel[x] = {y : x <= y}.  Filters all off-diagonal bit patterns.
void for_each_preorder(int n,
                       const std::function<void(const std::vector<Mask>&)>& fn,
                       int guard = -1);

std::size_t count_topologies(int n, int guard = -1);
std::size_t count_preorders(int n, int guard = -1);

// All labeled topologies with at most max_n points, cached per bound.
const std::vector<FinSpace>& all_spaces_up_to(int max_n);
const std::vector<FinSpace>& all_spaces_of(int n);

// Streams exactly the continuous maps X -> Y once each, tables in
// lexicographic order; backtracking over monotone assignments.
void for_each_cmap(const FinSpace& X, const FinSpace& Y,
                   const std::function<void(const CMap&)>& fn);
std::vector<CMap> continuous_maps(const FinSpace& X, const FinSpace& Y);

// Streams every partition of {0..n-1} once, in restricted-growth-string
// order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::size_t count_partitions(int n);

}  // namespace finref
