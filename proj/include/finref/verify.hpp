#pragma once

#include <functional>
#include <string>
#include <vector>

#include "finref/io.hpp"

namespace finref {

// A verification property: a named law, an instance stream, and a checker.
// Checkers return nullopt on success or a replayable counterexample
// document; replaying feeds that document back into the same checker.
struct Property {
  std::string id;
  std::string suite;  // reflection|algebra|maltsev|subspace|coincidence
  std::string law;    // one-line statement of what is being verified
  std::function<void(int max_points,
                     const std::function<void(const Json&)>& yield)>
      enumerate;
  std::function<std::optional<Json>(const Json& instance)> check;
};

const std::vector<Property>& all_properties();
const Property* find_property(const std::string& id);

struct PropertyResult {
  std::string id;
  std::string law;
  std::size_t instances = 0;
  bool passed = true;
  Json counterexample;  // null unless failed
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  int max_points = 0;
  bool ok = true;
  std::vector<PropertyResult> results;
};

PropertyResult run_property(const Property& p, int max_points);
// suite "all" runs everything; jobs > 1 fans properties out to threads,
// result order stays canonical.
VerificationReport run_suite(const std::string& suite, int max_points,
                             int jobs = 1);
Json report_to_json(const VerificationReport& r);

// Reruns a stored counterexample; true means the property passes on it now.
bool replay(const std::string& property_id, const Json& instance);

}  // namespace finref
