// jsonio.hpp -- JSON views of profiles and reports.  Rationals serialise as
// strings "p/q" (bare "p" when integral); integers as bare numbers.

#ifndef THREEFOLD_JSONIO_HPP
#define THREEFOLD_JSONIO_HPP

#include <json.hpp>

#include "threefold/basket.hpp"
#include "threefold/blowup.hpp"
#include "threefold/verifier.hpp"

namespace threefold {

using nlohmann::json;

json rational_json(const Rational& q);

json profile_to_json(const ContractionProfile& p);

// Schema: {"a":int,"n":int,"E3":"p/q","basket":[{"r":int,"b":int,"v":int,"e":int}]}.
// A present "e_c2" key is ignored; the constant is always re-derived.
ContractionProfile profile_from_json(const json& j);

json chart_report_to_json(const ChartReport& ch);
json verify_report_to_json(const VerifyReport& rep);

}  // namespace threefold

#endif
