#include "finref/mutate.hpp"

#include "finref/error.hpp"

namespace finref {

Mutations& mutations() {
  static Mutations m;
  return m;
}

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names = {
      "t1-skip-closure", "scr-skip-alternation", "quotient-skip-congruence"};
  return names;
}

void set_mutation(const std::string& name, bool on) {
  Mutations& m = mutations();
  if (name == "t1-skip-closure")
    m.t1_skip_closed_filter = on;
  else if (name == "scr-skip-alternation")
    m.scr_skip_closure_step = on;
  else if (name == "quotient-skip-congruence")
    m.quotient_skip_congruence_check = on;
  else
    throw Error(ErrorKind::InputError, "unknown mutation: " + name);
}

}  // namespace finref
