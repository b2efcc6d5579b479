#ifndef MCURVE_SURFACE_HPP
#define MCURVE_SURFACE_HPP

#include <string>
#include <vector>

namespace mcurve {

/// Signature of the supported surface: genus g with n punctures and one
/// boundary component.  All index ranges of the coordinate system are
/// functions of (n, g).
struct SurfaceSig {
    int n = 1;  ///< punctures, n >= 1
    int g = 1;  ///< genus, g >= 1

    bool valid() const { return n >= 1 && g >= 1; }
    friend bool operator==(const SurfaceSig&, const SurfaceSig&) = default;
};

/// Number of coordinates: 3n + 8g - 5.
int coord_dimension(SurfaceSig sig);

/// The eight coordinate groups, in vector order.
enum class ArcGroup { Alpha, Beta, BetaPrime, Xi, XiPrime, Gamma, C, CStar };

/// One arc (or closed curve) of the reference system.  Indices are 1-based
/// and follow the classical numbering:
///   alpha 1..2n, beta 1..n+g, beta' n+2..n+g, xi 1..2g-2, xi' 1..2g-2,
///   gamma 1..g, c 1..g-1, c* (single, index 1).
/// For g = 1 the beta', xi, xi' and c groups are empty.
struct ArcId {
    ArcGroup group = ArcGroup::Alpha;
    int index = 1;

    friend bool operator==(const ArcId&, const ArcId&) = default;
};

/// Group size for a given signature (0 for empty groups when g = 1).
int group_size(SurfaceSig sig, ArcGroup group);

/// 1-based index of the first arc in the group (beta' starts at n+2).
int group_first_index(SurfaceSig sig, ArcGroup group);

/// Flat offset of the group inside the coordinate vector.
int group_offset(SurfaceSig sig, ArcGroup group);

/// All arcs in coordinate-vector order.  A bijection onto 0..dim-1.
std::vector<ArcId> layout(SurfaceSig sig);

/// 0-based position of an arc in the coordinate vector.
int flat_index(SurfaceSig sig, ArcId arc);

/// Inverse of flat_index.
ArcId arc_at(SurfaceSig sig, int flat);

/// Printable name, e.g. "beta_5", "xi'_2", "c*".
std::string arc_name(ArcId arc);

/// The regions cut out by the beta/beta' arcs: n puncture regions U_i,
/// g-1 handle regions G_i, and the outermost handle region G*.
enum class RegionKind { U, G, GStar };

struct RegionId {
    RegionKind kind = RegionKind::U;
    int index = 0;  ///< U: 1..n, G: 1..g-1, GStar: 0

    friend bool operator==(const RegionId&, const RegionId&) = default;
};

std::string region_name(RegionId region);

struct RegionInfo {
    RegionId id;
    std::vector<ArcId> boundary;  ///< bounding beta/beta' arcs, left to right
};

/// Regions in chain order: U_1..U_n, G_1..G_{g-1}, G*.
///
/// Wall arcs follow the standard model: U_i is bounded by beta_i and
/// beta_{i+1}; G_i by beta_{n+i}, beta'_{n+i}, beta_{n+i+1}, beta'_{n+i+1};
/// G* by beta_{n+g}, beta'_{n+g} and the surface boundary.  The beta'_{n+1}
/// role (invisible-left wall of G_1, or of G* when g = 1) is played by
/// beta_1, which therefore bounds both U_1 and the invisible side of the
/// first handle region.
std::vector<RegionInfo> regions(SurfaceSig sig);

}  // namespace mcurve

#endif
