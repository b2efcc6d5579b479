#ifndef MCURVE_CENSUS_HPP
#define MCURVE_CENSUS_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "mcurve/surface.hpp"

namespace mcurve {

enum class Side { None, Left, Right };
const char* to_string(Side side);

/// Path components of one puncture region U_i: strands passing above or
/// below the puncture, plus loop components hugging one wall.
struct PunctureCensus {
    int index = 1;                 ///< 1..n
    std::int64_t above = 0;        ///< crossings of alpha_{2i-1} by through-strands
    std::int64_t below = 0;        ///< crossings of alpha_{2i}
    std::int64_t loop_count = 0;   ///< |b_i|
    Side loop_side = Side::None;   ///< Left: both ends on beta_{i+1}; Right: on beta_i

    friend bool operator==(const PunctureCensus&, const PunctureCensus&) = default;
};

/// Exact multiset of twist numbers in one handle region.  All components
/// twist in the same direction and their twist numbers differ by at most
/// one, so the distribution is (m components with t+1 twists, base
/// components with t twists); total = signed sum of twist numbers.
struct TwistDistribution {
    std::int64_t total = 0;  ///< signed total twist number T
    std::int64_t m = 0;      ///< components with t+1 twists (0 <= m < m+base)
    std::int64_t t = 0;      ///< smaller twist number
    std::int64_t base = 0;   ///< components with t twists

    std::int64_t component_count() const { return m + base; }
    std::int64_t magnitude() const { return total < 0 ? -total : total; }

    friend bool operator==(const TwistDistribution&, const TwistDistribution&) = default;
};

/// Which side-crossing count is stored for a G_i region: N when
/// beta_{n+i} <= beta_{n+i+1} (value = crossings of twist+diagonal
/// components on beta_{n+i+1}), K otherwise (value = crossings on
/// beta_{n+i}).  At equality the canonical marker is N.
enum class CrossMarker { N, K };
const char* to_string(CrossMarker marker);

/// Path components of handle region G_i (1 <= i <= g-1).
struct GenusCensus {
    int index = 1;

    std::int64_t c_curves = 0;  ///< components isotopic to the longitude c_i

    std::int64_t visible_genus = 0;  ///< l_i
    Side visible_side = Side::None;
    std::int64_t invisible_genus = 0;  ///< l'_i
    Side invisible_side = Side::None;

    std::int64_t upper_diag = 0;  ///< d^u_{2i-1}
    std::int64_t lower_diag = 0;  ///< d^l_{2i}

    TwistDistribution twist;

    std::int64_t vis_above = 0;    ///< u^va_{2i-1}
    std::int64_t vis_below = 0;    ///< u^vb_{2i}
    std::int64_t invis_above = 0;  ///< u^v'a_{2i-1}
    std::int64_t invis_below = 0;  ///< u^v'b_{2i}

    CrossMarker cross_marker = CrossMarker::N;
    std::int64_t side_crossing = 0;  ///< n_i or k_i per cross_marker

    /// The c_i coordinate: twist components plus diagonals.
    std::int64_t cutting_total() const {
        return twist.component_count() + upper_diag + lower_diag;
    }
    /// Twist components whose visible end lies on beta_{n+i+1}.
    std::int64_t twists_ending_right() const {
        const std::int64_t d = upper_diag + lower_diag;
        return cross_marker == CrossMarker::N ? side_crossing - d
                                              : cutting_total() - side_crossing - d;
    }

    friend bool operator==(const GenusCensus&, const GenusCensus&) = default;
};

/// Path components of the outermost handle region G*: longitude curves,
/// visible/invisible genus components (no left/right variants here) and
/// twist components.  G* admits no diagonal components.
struct HandleCensus {
    std::int64_t c_curves = 0;  ///< components isotopic to c*
    std::int64_t visible_genus = 0;
    std::int64_t invisible_genus = 0;
    TwistDistribution twist;

    std::int64_t cutting_total() const { return twist.component_count(); }

    friend bool operator==(const HandleCensus&, const HandleCensus&) = default;
};

/// Complete component census of a multicurve: one entry per region.
/// Together with the surface signature this determines the multicurve up
/// to isotopy.
struct MultiCurveCensus {
    SurfaceSig sig;
    std::vector<PunctureCensus> puncture;  ///< length n
    std::vector<GenusCensus> genus;        ///< length g-1
    HandleCensus handle;

    bool is_empty() const;  ///< every component count is zero

    friend bool operator==(const MultiCurveCensus&, const MultiCurveCensus&) = default;
};

/// Total number of path components in one region (used by render).
std::int64_t region_component_total(const PunctureCensus& u);
std::int64_t region_component_total(const GenusCensus& gc);
std::int64_t region_component_total(const HandleCensus& h);

}  // namespace mcurve

#endif
