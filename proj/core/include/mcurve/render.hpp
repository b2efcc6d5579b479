#ifndef MCURVE_RENDER_HPP
#define MCURVE_RENDER_HPP

#include <string>

#include "mcurve/census.hpp"
#include "mcurve/diagnostics.hpp"

namespace mcurve {

/// Static schematic of a census: one vertical lane per region, one
/// polyline per path component.  Strands are drawn schematically (not
/// isotopy-accurate); twist components carry t bump marks.
struct RenderSpec {
    MultiCurveCensus census;
    int width = 0;   ///< 0: derived from region count and strand spacing
    int height = 0;  ///< 0: derived
    bool show_labels = true;
    int strand_spacing = 8;
};

/// SVG 1.1 document.  Each region is a <g class="region"> whose <polyline>
/// count equals the region's component total; identical specs produce
/// byte-identical output.  Fails with InconsistentCensus when the census
/// does not pass consistency_check.
Result<std::string> render_svg(const RenderSpec& spec);

/// Plain-text table, one row per region with every component count and the
/// twist distribution.
std::string render_summary(const MultiCurveCensus& census);

}  // namespace mcurve

#endif
