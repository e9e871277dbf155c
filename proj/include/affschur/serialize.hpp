#pragma once

// JSON encodings shared by the suites and the command line tool.
//   segment          {"center": "<FieldElem>", "length": k}
//   multisegment     [segment, ...]
//   dominant tuple   [[root, ...], ...]  one root list per polynomial
//   polynomial in u  ["c_0", "c_1", ...]

#include <vector>

#include "json.hpp"

#include "affschur/combinatorics.hpp"
#include "affschur/drinfeld.hpp"
#include "affschur/scalar.hpp"

namespace affschur {

using Json = nlohmann::ordered_json;

Json to_json(const Composition& c);
Json to_json(const Partition& p);
Json to_json(const IndexTuple& i);
Json to_json(const Multisegment& s);
Json to_json(const DominantTuple& q);
Json to_json(const UPoly& p);
Json to_json(const std::vector<FieldElem>& xs);

// All throw ParseError on structurally invalid input and DomainError on
// mathematically invalid values (zero center, non-positive length).
FieldElem field_elem_from_json(const Json& j, const Param& param);
Multisegment multisegment_from_json(const Json& j, const Param& param);
DominantTuple tuple_from_json(const Json& j, const Param& param);
// Either a list of center strings or {"centers": [...]}.
std::vector<FieldElem> grid_from_json(const Json& j, const Param& param);

}  // namespace affschur
