#pragma once

#include <string>

#include <json.hpp>

#include "finref/algebra.hpp"
#include "finref/reflect.hpp"
#include "finref/space.hpp"
#include "finref/topalg.hpp"

namespace finref {

using Json = nlohmann::json;

// All parsers throw Error(InputError) on malformed documents and propagate
// the domain errors of the underlying constructors (NotATopology etc).
Json load_json(const std::string& path);
Json parse_json(const std::string& text);

// {"points": ["a","b"], "opens": [[], [0], [0,1]]}; indices refer to the
// points array order.
Json space_to_json(const FinSpace& X);
FinSpace space_from_json(const Json& doc);

// {"dom": <space|path>, "cod": <space|path>, "table": [..]}
Json map_to_json(const CMap& f);
CMap map_from_json(const Json& doc);

Json partition_to_json(const Partition& P);
Partition partition_from_json(const Json& doc);

// {"signature": {...}, "carrier": n, "constants": {...}, "tables": {...}};
// an arity-k table is a k-nested array.
Json structure_to_json(const Structure& U);
Structure structure_from_json(const Json& doc);

// {"algebra": <algebra|path>, "space": <space|path>}
Json topstructure_to_json(const TopStructure& T);
TopStructure topstructure_from_json(const Json& doc);

// {"space": <space|path>, "phi": [[[...]]]}
Json maltsev_to_json(const MaltsevWitness& W);
MaltsevWitness maltsev_from_json(const Json& doc);

// {"axiom", "method", "target", "arrow", "quotient", "open"}
Json reflection_report(const Reflection& R);

}  // namespace finref
