#ifndef MCURVE_CENSUS_JSON_HPP
#define MCURVE_CENSUS_JSON_HPP

#include <string>
#include <string_view>

#include "mcurve/census.hpp"
#include "mcurve/diagnostics.hpp"

namespace mcurve {

/// Census JSON schema:
/// {"n":..,"g":..,"regions":[
///   {"kind":"U","i":1,"above":..,"below":..,
///    "loops":{"count":..,"side":"left"|"right"|"none"}},
///   {"kind":"G","i":..,"c_curves":..,
///    "visible_genus":{"count":..,"side":..},
///    "invisible_genus":{"count":..,"side":..},
///    "diag_upper":..,"diag_lower":..,
///    "twist":{"total":..,"m":..,"t":..,"base":..},
///    "vis_above":..,"vis_below":..,"invis_above":..,"invis_below":..,
///    "side_crossing":{"marker":"n"|"k","value":..}},
///   {"kind":"GStar","c_curves":..,"visible_genus":..,"invisible_genus":..,
///    "twist":{...}}]}
std::string census_to_json(const MultiCurveCensus& census, int indent = -1);

Result<MultiCurveCensus> census_from_json(std::string_view text);

}  // namespace mcurve

#endif
