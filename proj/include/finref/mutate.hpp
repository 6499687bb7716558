#pragma once

#include <string>
#include <vector>

namespace finref {

// Test-only fault injection for the negative controls of the verification
// harness.  All flags default to off; engines consult them explicitly and
// result caches are bypassed while any flag is set.
struct Mutations {
  bool t1_skip_closed_filter = false;   // t1 engine: skip the closed-class merge
  bool scr_skip_closure_step = false;   // smallest closed equivalence: skip the
                                        // topological closure alternation
  bool quotient_skip_congruence_check = false;  // algebra quotient: skip the
                                                // congruence precondition
  bool any() const {
    return t1_skip_closed_filter || scr_skip_closure_step ||
           quotient_skip_congruence_check;
  }
};

Mutations& mutations();
void set_mutation(const std::string& name, bool on);
const std::vector<std::string>& mutation_names();

}  // namespace finref
