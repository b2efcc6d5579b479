#include "mcurve/census.hpp"

namespace mcurve {

const char* to_string(Side side) {
    switch (side) {
        case Side::None:  return "none";
        case Side::Left:  return "left";
        case Side::Right: return "right";
    }
    return "none";
}

const char* to_string(CrossMarker marker) {
    return marker == CrossMarker::N ? "n" : "k";
}

std::int64_t region_component_total(const PunctureCensus& u) {
    return u.above + u.below + u.loop_count;
}

std::int64_t region_component_total(const GenusCensus& gc) {
    return gc.c_curves + gc.visible_genus + gc.invisible_genus + gc.upper_diag +
           gc.lower_diag + gc.twist.component_count() + gc.vis_above + gc.vis_below +
           gc.invis_above + gc.invis_below;
}

std::int64_t region_component_total(const HandleCensus& h) {
    return h.c_curves + h.visible_genus + h.invisible_genus + h.twist.component_count();
}

bool MultiCurveCensus::is_empty() const {
    for (const PunctureCensus& u : puncture)
        if (region_component_total(u) != 0) return false;
    for (const GenusCensus& gc : genus)
        if (region_component_total(gc) != 0) return false;
    return region_component_total(handle) == 0;
}

}  // namespace mcurve
