#ifndef MCURVE_MCURVE_HPP
#define MCURVE_MCURVE_HPP

#include "mcurve/census.hpp"
#include "mcurve/census_json.hpp"
#include "mcurve/coordinates.hpp"
#include "mcurve/decoder.hpp"
#include "mcurve/diagnostics.hpp"
#include "mcurve/encoder.hpp"
#include "mcurve/generator.hpp"
#include "mcurve/render.hpp"
#include "mcurve/surface.hpp"

#endif
