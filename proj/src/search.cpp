#include "finref/search.hpp"

#include <algorithm>

#include "finref/algebra.hpp"
#include "finref/category.hpp"
#include "finref/enumerate.hpp"
#include "finref/reflect.hpp"
#include "finref/topalg.hpp"

namespace finref {

namespace {

void check_bound(int max_points) {
  if (max_points > 5)
    throw Error(ErrorKind::SizeLimit, "search bound capped at 5");
}

std::vector<Finding> separate_not_joint(int max_points) {
  std::vector<Finding> out;
  // Group structures over all topologies on the carrier.
  for (int n = 1; n <= std::min(max_points, 4); ++n)
    for (const Structure& G : all_groups_of(n))
      for (const FinSpace& X : all_spaces_of(n)) {
        TopStructure T{G, X};
        if (continuity_mode(T) == ContinuityMode::Semitopological)
          out.push_back(Finding{"separate-not-joint",
                                topstructure_to_json(T),
                                "group operations separately but not jointly "
                                "continuous"});
      }
  // Mal'tsev witnesses, via the identity-respecting table stream.
  for (int n = 1; n <= std::min(max_points, 3); ++n)
    for (const FinSpace& X : all_spaces_of(n)) {
      std::vector<FinSpace> cube(3, X);
      FinSpace cross = cross_product(cube);
      FinSpace joint = product(cube).space;
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
          if (is_continuous(CMap{cross, X, phi}) &&
              !is_continuous(CMap{joint, X, phi})) {
            MaltsevWitness W{X, phi, ContinuityMode::Semitopological};
            out.push_back(Finding{"separate-not-joint", maltsev_to_json(W),
                                  "Mal'tsev operation separately but not "
                                  "jointly continuous"});
          }
          return;
        }
        for (int v = 0; v < n; ++v) {
          phi[free[i]] = v;
          self(self, i + 1);
        }
      };
      dfs(dfs, 0);
    }
  return out;
}

std::vector<Finding> t1_product_failure(int max_points) {
  std::vector<Finding> out;
  for (int n = 1; n <= max_points; ++n)
    for (const FinSpace& X : all_spaces_of(n))
      for (int m = n; m <= max_points; ++m) {
        if (n * m > 16) continue;  // keep the direct engine in range
        for (const FinSpace& Y : all_spaces_of(m)) {
          std::vector<FinSpace> pair = {X, Y};
          ProductComparison pc = product_preservation(pair, Axiom::T1);
          if (!pc.mu_well_defined || !pc.is_homeo)
            out.push_back(Finding{
                "t1-product-failure",
                Json{{"space", space_to_json(X)},
                     {"space_b", space_to_json(Y)}},
                pc.mu_well_defined ? "comparison map is not a homeomorphism"
                                   : "comparison map is ill-defined"});
        }
      }
  return out;
}

std::vector<Finding> subspace_failure(int max_points) {
  std::vector<Finding> out;
  for (int n = 1; n <= max_points; ++n)
    for (const FinSpace& X : all_spaces_of(n))
      for (Mask A = 1; A < X.full(); ++A)
        for (Axiom a : kAllAxioms)
          if (!preserves_subspace(X, A, a))
            out.push_back(Finding{
                "subspace-failure",
                Json{{"space", space_to_json(X)},
                     {"subset", bits_of(A)},
                     {"axiom", axiom_name(a)}},
                "subspace reflection does not embed into the ambient one"});
  return out;
}

}  // namespace

std::vector<Finding> run_search(const std::string& target, int max_points) {
  check_bound(max_points);
  if (target == "separate-not-joint") return separate_not_joint(max_points);
  if (target == "t1-product-failure") return t1_product_failure(max_points);
  if (target == "subspace-failure") return subspace_failure(max_points);
  throw Error(ErrorKind::InputError, "unknown search target: " + target);
}

}  // namespace finref
