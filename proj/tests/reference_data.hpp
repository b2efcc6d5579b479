#ifndef MCURVE_TESTS_REFERENCE_DATA_HPP
#define MCURVE_TESTS_REFERENCE_DATA_HPP

// Golden data for the worked (3,3) examples used across the test suites.

#include <mcurve/mcurve.hpp>

namespace refdata {

inline constexpr mcurve::SurfaceSig kSig33{3, 3};

inline constexpr const char* kExampleVectorText =
    "(6, 2, 4, 2, 5, 1; 8, 6, 4, 6, 7, 2; 3, 0; 5, 4, 6, 6; 4, 1, 0, 0; 2, 5, 3; 3, 3; 0)";
inline constexpr const char* kExampleSignsText = "+,-,0";

inline constexpr const char* kFigureVectorText =
    "(5, 2, 5, 2, 4, 3; 7, 5, 7, 1, 5, 5; 5, 3; 6, 3, 5, 2; 4, 1, 4, 1; 2, 2, 3; 2, 0; 3)";

inline mcurve::CoordVector example_vector() {
    auto v = mcurve::parse_vector(kExampleVectorText, kSig33);
    return *v.value;
}

inline mcurve::TwistSigns example_signs() {
    auto s = mcurve::parse_signs(kExampleSignsText, kSig33);
    return *s.value;
}

inline mcurve::CoordVector figure_vector() {
    auto v = mcurve::parse_vector(kFigureVectorText, kSig33);
    return *v.value;
}

/// The fully worked census of the example vector under signs (+,-,0).
inline mcurve::MultiCurveCensus example_census() {
    using namespace mcurve;
    MultiCurveCensus census;
    census.sig = kSig33;
    census.puncture = {
        {1, 5, 1, 1, Side::Right},
        {2, 3, 1, 1, Side::Right},
        {3, 4, 0, 1, Side::Left},
    };
    GenusCensus g1;
    g1.index = 1;
    g1.c_curves = 0;
    g1.visible_genus = 0;
    g1.visible_side = Side::None;
    g1.invisible_genus = 1;
    g1.invisible_side = Side::Right;
    g1.upper_diag = 0;
    g1.lower_diag = 2;
    g1.twist = {+1, 0, 1, 1};
    g1.vis_above = 4;
    g1.vis_below = 1;
    g1.invis_above = 3;
    g1.invis_below = 0;
    g1.cross_marker = CrossMarker::N;
    g1.side_crossing = 2;

    GenusCensus g2;
    g2.index = 2;
    g2.c_curves = 0;
    g2.visible_genus = 1;
    g2.visible_side = Side::Right;
    g2.invisible_genus = 0;
    g2.invisible_side = Side::None;
    g2.upper_diag = 0;
    g2.lower_diag = 0;
    g2.twist = {-4, 1, 1, 2};
    g2.vis_above = 1;
    g2.vis_below = 1;
    g2.invis_above = 0;
    g2.invis_below = 0;
    g2.cross_marker = CrossMarker::K;
    g2.side_crossing = 3;

    census.genus = {g1, g2};
    census.handle.c_curves = 2;
    census.handle.visible_genus = 1;
    census.handle.invisible_genus = 0;
    census.handle.twist = {0, 0, 0, 0};
    return census;
}

}  // namespace refdata

#endif
