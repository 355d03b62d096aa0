#pragma once

#include <string>

#include <json.hpp>

#include "cobar/scenario.hpp"

namespace cobar::io {

using json = nlohmann::json;

// Rationals travel as canonical "p/q" strings, infinities as "inf".

json complex_to_json(const IntervalComplex& c);
IntervalComplex complex_from_json(const json& j);

json map_to_json(const GradedMap& m);
GradedMap map_from_json(const json& j);

json barcode_to_json(const Barcode& b);
Barcode barcode_from_json(const json& j);

json twisted_to_json(const TwistedComplex& t);
TwistedComplex twisted_from_json(const json& j);

json movie_to_json(const Movie& m);
Movie movie_from_json(const json& j);

json region_to_json(const ShadowRegion& r);
ShadowRegion region_from_json(const json& j);

json actions_to_json(const ActionData& a);
ActionData actions_from_json(const json& j);

json scenario_to_json(const CobordismScenario& sc);
CobordismScenario scenario_from_json(const json& j);

json step_function_to_json(const StepFunction& f);
json compression_to_json(const CompressionResult& c);
json end_shifts_to_json(const EndShifts& s);
json distance_report_to_json(const DistanceReport& r, int decimals = -1);
json rigidity_report_to_json(const RigidityReport& r, int decimals = -1);

// Deterministic rendering: nlohmann objects iterate in sorted key order, so a
// fixed-indent dump is byte-stable for equal values.
std::string dump_canonical(const json& j);
json parse_text(const std::string& text);   // throws error("SchemaError")
json load_file(const std::string& path);    // throws error("SchemaError")

}  // namespace cobar::io
