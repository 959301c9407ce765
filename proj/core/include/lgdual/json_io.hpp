#pragma once

// JSON exchange formats. Rationals are strings "p/q" ("p" when q = 1);
// naturals are JSON integers (strings of digits past 64 bits). Object key
// order is preserved so serialisation is byte-stable.

#include <nlohmann/json.hpp>

#include "lgdual/adc.hpp"
#include "lgdual/aspace.hpp"
#include "lgdual/draft.hpp"
#include "lgdual/lgroup.hpp"
#include "lgdual/pwl.hpp"
#include "lgdual/rational.hpp"

namespace lgdual::io {

using Json = nlohmann::ordered_json;

// All parse_* functions throw InputError on malformed documents.
Json to_json(const Rat& r);
Rat parse_rat(const Json& j);

Json to_json(const DivNat& d);
DivNat parse_divnat(const Json& j);

Json to_json(const Int& z);
Int parse_int(const Json& j);

Json to_json(const RatRegion& region);
RatRegion parse_region(const Json& j);

Json to_json(const AdcSet& s);

Json to_json(const FinASpace& x);
FinASpace parse_space(const Json& j);

Json subset_to_json(const FinASpace& x, const PointSet& s);
PointSet parse_subset(const FinASpace& x, const Json& j);

// {"source": space, "target": space, "map": {"x": "y", ...}}
Json to_json(const AMapFin& f);
AMapFin parse_amap(const Json& j);

Json to_json(const Draft& d);
Draft parse_draft(const Json& j);

Json to_json(const RatFunction& f);
// Values are keyed by the labels of `space`.
RatFunction parse_rat_function(const Json& j, const FinASpace& space);

// {"label": "p/q", ...} over the carrier of `space`.
Json values_to_json(const FinASpace& space, const FnValues& v);
FnValues parse_values(const Json& j, const FinASpace& space);

Json to_json(const FnGroup& g);
FnGroup parse_group(const Json& j);

// {"gen": 1}, {"const": "2"}, {"+": [a, b]}, {"-": [a]} or {"-": [a, b]},
// {"*": ["3", a]}, {"∨": [a, b]}, {"∧": [a, b]}.
Json to_json(const GroupTerm& t);
GroupTerm parse_term(const Json& j);

Json to_json(const IntPwl& f);
IntPwl parse_pwl(const Json& j);

Json to_json(const DraftDiagnostic& d, const FinASpace& x);
Json to_json(const ANormalReport& r, const FinASpace& x);
Json to_json(const SwReport& r, const FinASpace& x);
Json to_json(const EtaReport& r);
Json to_json(const MaxSpectrum& m);
Json to_json(const CompletenessReport& r, const FinASpace& x);

// Parses text as JSON, mapping syntax errors to InputError.
Json parse_document(const std::string& text);

}  // namespace lgdual::io
