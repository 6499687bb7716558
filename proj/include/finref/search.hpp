#pragma once

#include <string>
#include <vector>

#include "finref/io.hpp"

namespace finref {

struct Finding {
  std::string target;
  Json documents;  // replayable inputs exhibiting the phenomenon
  std::string note;
};

// Targets: separate-not-joint, t1-product-failure, subspace-failure.
std::vector<Finding> run_search(const std::string& target, int max_points);

}  // namespace finref
