#ifndef MCURVE_DECODER_HPP
#define MCURVE_DECODER_HPP

#include <cstdint>
#include <utility>

#include "mcurve/census.hpp"
#include "mcurve/coordinates.hpp"
#include "mcurve/diagnostics.hpp"

namespace mcurve {

/// Signed loop count of puncture region U_i: b_i = (beta_i - beta_{i+1})/2.
/// Negative means left loops, positive right loops.
Result<std::int64_t> loop_count(const CoordVector& v, int i);

struct GenusLoops {
    std::int64_t visible = 0;
    Side visible_side = Side::None;
    std::int64_t invisible = 0;
    Side invisible_side = Side::None;

    friend bool operator==(const GenusLoops&, const GenusLoops&) = default;
};

/// Visible/invisible genus-loop counts of handle region i (i = g means G*).
/// For G_i: l = max(0, (|wall difference| - c_i)/2), side from the wall
/// comparison.  For G*: l = (wall - c*)/2 exactly, no side.
Result<GenusLoops> genus_loop_counts(const CoordVector& v, int i);

/// Signed total twist number of handle region i (i = g means G*).  Zero
/// whenever the region's cutting coordinate is zero; otherwise gamma_i
/// minus the right-side genus corrections, signed by signs.at(i).
Result<std::int64_t> total_twist(const CoordVector& v, const TwistSigns& signs, int i);

/// Number of components isotopic to the longitude of handle region i
/// (i = g means G*, counting c* curves).  Zero when the cutting
/// coordinate is nonzero.
Result<std::int64_t> c_curve_count(const CoordVector& v, int i);

/// Upper/lower diagonal counts from the cutting coordinate and the signed
/// total twist, clamped at zero.  Requires twist != 0 or cutting == 0; at
/// twist == 0 with cutting > 0 both closed forms degenerate to cutting and
/// decode resolves the orientation separately (see decode()).
std::pair<std::int64_t, std::int64_t> diagonal_counts(std::int64_t cutting,
                                                      std::int64_t twist);

/// Distribution of |T| twists over c_eff components with twist numbers
/// {t, t+1}: m = |T| mod c_eff, t = (|T| - m)/c_eff, base = c_eff - m.
/// c_eff = 0 with |T| > 0 is InconsistentTwist; c_eff = 0 yields (0,0,0).
Result<TwistDistribution> twist_distribution(std::int64_t c_eff, std::int64_t twist_total);

struct SideCrossing {
    CrossMarker marker = CrossMarker::N;
    std::int64_t value = 0;       ///< n_i or k_i
    std::int64_t complement = 0;  ///< cutting - value

    friend bool operator==(const SideCrossing&, const SideCrossing&) = default;
};

/// Crossings of twist+diagonal components on the visible walls of G_i:
/// n_i on beta_{n+i+1} when beta_{n+i} <= beta_{n+i+1}, else k_i on
/// beta_{n+i} (l_i is the region's visible genus count).
Result<SideCrossing> side_crossings(const CoordVector& v, std::int64_t cutting,
                                    std::int64_t visible_loops, int i);

/// Above/below counts of puncture region U_i: alpha minus |b_i|.
struct PunctureAboveBelow {
    std::int64_t above = 0;
    std::int64_t below = 0;
};
Result<PunctureAboveBelow> puncture_above_below(const CoordVector& v, int i);

/// Full decode: coordinates + twist directions -> component census.
///
/// Runs, per region, the closed-form counting: loops, genus loops, total
/// twists, longitude curves, diagonals, twist distribution, side
/// crossings, above/below counts.  Every subtraction is checked; any
/// negative count, missing sign or inconsistency means the vector is not
/// realizable as a multicurve with the given signs and is rejected with
/// diagnostics.  As a final realizability gate the census is re-encoded
/// and compared with the input, so decode succeeds exactly when the
/// round trip is exact.
Result<MultiCurveCensus> decode(const CoordVector& v, const TwistSigns& signs);

}  // namespace mcurve

#endif
