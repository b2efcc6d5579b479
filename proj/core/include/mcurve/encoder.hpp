#ifndef MCURVE_ENCODER_HPP
#define MCURVE_ENCODER_HPP

#include <cstdint>
#include <utility>

#include "mcurve/census.hpp"
#include "mcurve/coordinates.hpp"
#include "mcurve/diagnostics.hpp"

namespace mcurve {

/// Endpoint count contributed to a beta/beta' arc by the components of one
/// adjacent region.  Every beta/beta' arc separates two regions; a
/// consistent census contributes the same count from both sides.
///
/// Contributions per component: through-strands (above/below and their
/// visible/invisible handle variants) 1 per end, loop and genus components
/// 2 on their home wall, twist components 1 on each of their two walls,
/// diagonals 1 on the invisible-left wall and 1 on beta_{n+i+1}.
std::int64_t arc_endpoint_count(const MultiCurveCensus& census, ArcId arc,
                                RegionId region);

/// Same, selecting the adjacent region positionally: Side::Left is the
/// chain predecessor (for beta_1 the invisible side of the first handle
/// region, which wraps around), Side::Right the successor.
std::int64_t arc_endpoint_count(const MultiCurveCensus& census, ArcId arc, Side side);

/// The two regions adjacent to a beta/beta' arc, in (Left, Right) order.
std::pair<RegionId, RegionId> arc_neighbors(SurfaceSig sig, ArcId arc);

/// Inverse of decode: reconstruct the coordinate vector and twist signs
/// from a census by summing, per arc, the crossing contributions of every
/// component.  Fails with InvariantViolation when the census breaks a
/// structural rule, with ArcImbalance when the two regions adjacent to
/// some wall disagree on its endpoint count, and with ZeroVector for an
/// empty census.
Result<std::pair<CoordVector, TwistSigns>> encode(const MultiCurveCensus& census);

/// All census-level checks as diagnostics: component exclusion rules,
/// diagonal/twist bookkeeping, side-marker canonicality and arc balance on
/// every shared wall.  Empty result means the census is consistent.
Diagnostics consistency_check(const MultiCurveCensus& census);

}  // namespace mcurve

#endif
