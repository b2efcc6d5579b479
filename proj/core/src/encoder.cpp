#include "mcurve/encoder.hpp"

#include <cassert>
#include <cstdlib>
#include <limits>

namespace mcurve {

namespace {

using I128 = __int128;

bool fits(I128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

/// Crossings contributed by the twist components of one handle region to
/// the xi arcs flanking the visible side of the handle.  Each component
/// crosses both arcs |t| times, plus one wrap-around crossing of the arc
/// opposite the twist direction when its visible end lies on the right
/// wall.  (Winding components in a handle region carry t >= 1.)
struct XiTwist {
    I128 upper = 0;  // xi_{2i-1}
    I128 lower = 0;  // xi_{2i}
};

XiTwist xi_twist_crossings(const TwistDistribution& twist, std::int64_t ending_right) {
    XiTwist out;
    if (twist.total == 0) return out;
    const std::int64_t magnitude = twist.magnitude();
    const I128 same = I128(magnitude);
    const I128 wrapped = I128(magnitude) + ending_right;
    if (twist.total > 0) {
        out.upper = same;
        out.lower = wrapped;
    } else {
        out.upper = wrapped;
        out.lower = same;
    }
    return out;
}

// Wall endpoint counts per region, as 128-bit sums of checked-nonnegative
// census fields.

I128 u_wall(const PunctureCensus& u, bool left_wall) {
    const Side loop_home = left_wall ? Side::Right : Side::Left;
    return I128(u.above) + u.below + (u.loop_side == loop_home ? 2 * I128(u.loop_count) : 0);
}

I128 g_visible_wall(const GenusCensus& gc, bool left_wall) {
    const std::int64_t w_right = gc.twists_ending_right();
    const std::int64_t w_left = gc.twist.component_count() - w_right;
    I128 total = I128(gc.vis_above) + gc.vis_below;
    if (left_wall) {
        if (gc.visible_side == Side::Right) total += 2 * I128(gc.visible_genus);
        total += w_left;
    } else {
        if (gc.visible_side == Side::Left) total += 2 * I128(gc.visible_genus);
        total += I128(w_right) + gc.upper_diag + gc.lower_diag;
    }
    return total;
}

I128 g_invisible_wall(const GenusCensus& gc, bool left_wall) {
    I128 total = I128(gc.invis_above) + gc.invis_below;
    if (left_wall) {
        if (gc.invisible_side == Side::Right) total += 2 * I128(gc.invisible_genus);
        total += gc.cutting_total();  // every twist and diagonal ends here
    } else {
        if (gc.invisible_side == Side::Left) total += 2 * I128(gc.invisible_genus);
    }
    return total;
}

I128 star_wall(const HandleCensus& h, bool visible) {
    return 2 * I128(visible ? h.visible_genus : h.invisible_genus) + h.cutting_total();
}

/// Endpoint count of `region` on `arc`, dispatching on which wall of the
/// region the arc is.  Returns -1 when the arc does not bound the region.
I128 wall_endpoints(const MultiCurveCensus& census, RegionId region, ArcId arc) {
    const int n = census.sig.n;
    const int g = census.sig.g;
    switch (region.kind) {
        case RegionKind::U: {
            const auto& u = census.puncture[static_cast<std::size_t>(region.index - 1)];
            if (arc == ArcId{ArcGroup::Beta, region.index}) return u_wall(u, true);
            if (arc == ArcId{ArcGroup::Beta, region.index + 1}) return u_wall(u, false);
            return -1;
        }
        case RegionKind::G: {
            const int i = region.index;
            const auto& gc = census.genus[static_cast<std::size_t>(i - 1)];
            const ArcId inv_left = i == 1 ? ArcId{ArcGroup::Beta, 1}
                                          : ArcId{ArcGroup::BetaPrime, n + i};
            if (arc == ArcId{ArcGroup::Beta, n + i}) return g_visible_wall(gc, true);
            if (arc == ArcId{ArcGroup::Beta, n + i + 1}) return g_visible_wall(gc, false);
            if (arc == inv_left) return g_invisible_wall(gc, true);
            if (arc == ArcId{ArcGroup::BetaPrime, n + i + 1})
                return g_invisible_wall(gc, false);
            return -1;
        }
        case RegionKind::GStar: {
            const ArcId inv = g == 1 ? ArcId{ArcGroup::Beta, 1}
                                     : ArcId{ArcGroup::BetaPrime, n + g};
            if (arc == ArcId{ArcGroup::Beta, n + g}) return star_wall(census.handle, true);
            if (arc == inv) return star_wall(census.handle, false);
            return -1;
        }
    }
    return -1;
}

bool check_twist_distribution(const TwistDistribution& twist, const std::string& locus,
                              Diagnostics& diags) {
    bool ok = true;
    if (twist.m < 0 || twist.t < 0 || twist.base < 0) {
        diags.error(locus, DiagCode::InvariantViolation, "negative twist bookkeeping");
        return false;
    }
    const I128 accounted = I128(twist.m) * (I128(twist.t) + 1) + I128(twist.base) * I128(twist.t);
    if (accounted != I128(twist.magnitude())) {
        diags.error(locus, DiagCode::InvariantViolation,
                    "m*(t+1) + base*t must equal |T|");
        ok = false;
    }
    if (twist.component_count() == 0) {
        if (twist.total != 0 || twist.t != 0) {
            diags.error(locus, DiagCode::InvariantViolation,
                        "no twist components but nonzero twist data");
            ok = false;
        }
    } else if (twist.m >= twist.component_count()) {
        diags.error(locus, DiagCode::InvariantViolation,
                    "twist distribution not canonical (m must be < m+base)");
        ok = false;
    } else if (twist.total == 0 && (twist.t != 0 || twist.m != 0)) {
        diags.error(locus, DiagCode::InvariantViolation,
                    "zero total twist requires t = m = 0");
        ok = false;
    }
    return ok;
}

Diagnostics structural_check(const MultiCurveCensus& census) {
    Diagnostics diags;
    const SurfaceSig sig = census.sig;
    if (!sig.valid()) {
        diags.error("surface", DiagCode::InvariantViolation, "n >= 1 and g >= 1 required");
        return diags;
    }
    if (static_cast<int>(census.puncture.size()) != sig.n ||
        static_cast<int>(census.genus.size()) != sig.g - 1) {
        diags.error("census", DiagCode::InvariantViolation,
                    "expected " + std::to_string(sig.n) + " puncture and " +
                        std::to_string(sig.g - 1) + " handle regions");
        return diags;
    }

    for (int i = 1; i <= sig.n; ++i) {
        const auto& u = census.puncture[static_cast<std::size_t>(i - 1)];
        const std::string locus = region_name({RegionKind::U, i});
        if (u.index != i)
            diags.error(locus, DiagCode::InvariantViolation, "region index mismatch");
        if (u.above < 0 || u.below < 0 || u.loop_count < 0)
            diags.error(locus, DiagCode::InvariantViolation, "negative component count");
        if ((u.loop_side == Side::None) != (u.loop_count == 0))
            diags.error(locus, DiagCode::InvariantViolation,
                        "loop side must be none exactly when there are no loops");
    }

    for (int i = 1; i <= sig.g - 1; ++i) {
        const auto& gc = census.genus[static_cast<std::size_t>(i - 1)];
        const std::string locus = region_name({RegionKind::G, i});
        if (gc.index != i)
            diags.error(locus, DiagCode::InvariantViolation, "region index mismatch");
        if (gc.c_curves < 0 || gc.visible_genus < 0 || gc.invisible_genus < 0 ||
            gc.upper_diag < 0 || gc.lower_diag < 0 || gc.vis_above < 0 ||
            gc.vis_below < 0 || gc.invis_above < 0 || gc.invis_below < 0) {
            diags.error(locus, DiagCode::InvariantViolation, "negative component count");
            continue;
        }
        if ((gc.visible_side == Side::None) != (gc.visible_genus == 0) ||
            (gc.invisible_side == Side::None) != (gc.invisible_genus == 0))
            diags.error(locus, DiagCode::InvariantViolation,
                        "genus side must be none exactly when the count is zero");
        if (!check_twist_distribution(gc.twist, locus, diags)) continue;

        const std::int64_t c_eff = gc.twist.component_count();
        const std::int64_t d = gc.upper_diag + gc.lower_diag;
        if (gc.upper_diag != 0 && gc.lower_diag != 0)
            diags.error(locus, DiagCode::InvariantViolation,
                        "a region carries only one diagonal type");
        // Unlike G*, a G_i region turns twist slack into diagonals, so a
        // nonzero total means every component winds at least once.
        if (gc.twist.total != 0 && gc.twist.t < 1)
            diags.error(locus, DiagCode::InvariantViolation,
                        "winding components in a handle region carry at least one twist");
        if (gc.c_curves > 0 && (c_eff != 0 || d != 0 || gc.twist.total != 0))
            diags.error(locus, DiagCode::InvariantViolation,
                        "longitude curves exclude twist and diagonal components");
        if (d > 0 && c_eff != gc.twist.magnitude())
            diags.error(locus, DiagCode::InvariantViolation,
                        "with diagonals present, c_i = d + |T| must hold");

        // side-crossing storage: the twist endpoint split, in range and
        // canonically marked.
        const std::int64_t w_right = gc.twists_ending_right();
        if (w_right < 0 || w_right > c_eff) {
            diags.error(locus, DiagCode::InvariantViolation,
                        "side-crossing value out of range");
            continue;
        }
        if (gc.twist.total == 0 && w_right != 0)
            diags.error(locus, DiagCode::InvariantViolation,
                        "zero-twist components must all attach to the left visible wall");
        if (gc.visible_side == Side::Left && c_eff - w_right != 0)
            diags.error(locus, DiagCode::InvariantViolation,
                        "left visible genus excludes left-ending twist components");
        if (gc.visible_side == Side::Right && (w_right != 0 || d != 0))
            diags.error(locus, DiagCode::InvariantViolation,
                        "right visible genus excludes right-ending twists and diagonals");
        if (gc.invisible_side == Side::Left && gc.cutting_total() != 0)
            diags.error(locus, DiagCode::InvariantViolation,
                        "left invisible genus requires c_i = 0");

        const I128 left = g_visible_wall(gc, true);
        const I128 right = g_visible_wall(gc, false);
        const bool want_n = left <= right;
        if (want_n != (gc.cross_marker == CrossMarker::N))
            diags.error(locus, DiagCode::InvariantViolation,
                        "side-crossing marker does not match the wall comparison");
    }

    {
        const auto& h = census.handle;
        if (h.c_curves < 0 || h.visible_genus < 0 || h.invisible_genus < 0)
            diags.error("G*", DiagCode::InvariantViolation, "negative component count");
        check_twist_distribution(h.twist, "G*", diags);
        if (h.c_curves > 0 && (h.twist.component_count() != 0 || h.twist.total != 0))
            diags.error("G*", DiagCode::InvariantViolation,
                        "longitude curves exclude twist components");
    }
    return diags;
}

}  // namespace

std::pair<RegionId, RegionId> arc_neighbors(SurfaceSig sig, ArcId arc) {
    const int n = sig.n;
    const int g = sig.g;
    const RegionId star{RegionKind::GStar, 0};
    if (arc.group == ArcGroup::Beta) {
        const int j = arc.index;
        assert(j >= 1 && j <= n + g);
        if (j == 1) {
            const RegionId wrap = g >= 2 ? RegionId{RegionKind::G, 1} : star;
            return {wrap, {RegionKind::U, 1}};
        }
        if (j <= n) return {{RegionKind::U, j - 1}, {RegionKind::U, j}};
        if (j == n + 1) {
            const RegionId right = g >= 2 ? RegionId{RegionKind::G, 1} : star;
            return {{RegionKind::U, n}, right};
        }
        const RegionId right = j - n <= g - 1 ? RegionId{RegionKind::G, j - n} : star;
        return {{RegionKind::G, j - n - 1}, right};
    }
    assert(arc.group == ArcGroup::BetaPrime);
    const int j = arc.index;
    assert(j >= n + 2 && j <= n + g);
    const RegionId right = j - n <= g - 1 ? RegionId{RegionKind::G, j - n} : star;
    return {{RegionKind::G, j - n - 1}, right};
}

std::int64_t arc_endpoint_count(const MultiCurveCensus& census, ArcId arc,
                                RegionId region) {
    const I128 count = wall_endpoints(census, region, arc);
    assert(count >= 0 && fits(count));
    return static_cast<std::int64_t>(count);
}

std::int64_t arc_endpoint_count(const MultiCurveCensus& census, ArcId arc, Side side) {
    assert(side != Side::None);
    const auto [left, right] = arc_neighbors(census.sig, arc);
    return arc_endpoint_count(census, arc, side == Side::Left ? left : right);
}

Result<std::pair<CoordVector, TwistSigns>> encode(const MultiCurveCensus& census) {
    using Pair = std::pair<CoordVector, TwistSigns>;
    Diagnostics diags = structural_check(census);
    if (!diags.ok()) return Result<Pair>::failure(std::move(diags));

    const SurfaceSig sig = census.sig;
    const int n = sig.n;
    const int g = sig.g;
    std::vector<std::int64_t> values(static_cast<std::size_t>(coord_dimension(sig)), 0);
    bool overflow = false;
    const auto put = [&](ArcId arc, I128 value) {
        if (!fits(value)) {
            overflow = true;
            diags.error(arc_name(arc), DiagCode::Overflow, "coordinate exceeds 64 bits");
            return;
        }
        values[static_cast<std::size_t>(flat_index(sig, arc))] =
            static_cast<std::int64_t>(value);
    };

    for (int i = 1; i <= n; ++i) {
        const auto& u = census.puncture[static_cast<std::size_t>(i - 1)];
        put({ArcGroup::Alpha, 2 * i - 1}, I128(u.above) + u.loop_count);
        put({ArcGroup::Alpha, 2 * i}, I128(u.below) + u.loop_count);
    }

    // Every beta/beta' wall is shared; both adjacent regions must account
    // for the same endpoint count.
    for (const ArcId& arc : layout(sig)) {
        if (arc.group != ArcGroup::Beta && arc.group != ArcGroup::BetaPrime) continue;
        const auto [left, right] = arc_neighbors(sig, arc);
        const I128 from_left = wall_endpoints(census, left, arc);
        const I128 from_right = wall_endpoints(census, right, arc);
        assert(from_left >= 0 && from_right >= 0);
        if (from_left != from_right) {
            diags.error(arc_name(arc), DiagCode::ArcImbalance,
                        region_name(left) + " accounts for " +
                            std::to_string(static_cast<long long>(from_left)) + ", " +
                            region_name(right) + " for " +
                            std::to_string(static_cast<long long>(from_right)));
            continue;
        }
        put(arc, from_left);
    }

    TwistSigns signs;
    signs.signs.assign(static_cast<std::size_t>(g), 0);
    for (int i = 1; i <= g - 1; ++i) {
        const auto& gc = census.genus[static_cast<std::size_t>(i - 1)];
        const XiTwist xt = xi_twist_crossings(gc.twist, gc.twists_ending_right());
        const I128 shared = I128(gc.visible_genus) + gc.c_curves;
        put({ArcGroup::Xi, 2 * i - 1}, I128(gc.vis_above) + shared + gc.upper_diag + xt.upper);
        put({ArcGroup::Xi, 2 * i}, I128(gc.vis_below) + shared + gc.lower_diag + xt.lower);
        put({ArcGroup::XiPrime, 2 * i - 1}, I128(gc.invis_above) + gc.invisible_genus);
        put({ArcGroup::XiPrime, 2 * i}, I128(gc.invis_below) + gc.invisible_genus);
        // Only right-side genus components cross gamma_i; twists cross it
        // |t| times each and longitude curves once.
        const I128 gamma = (gc.visible_side == Side::Right ? gc.visible_genus : 0) +
                           I128(gc.invisible_side == Side::Right ? gc.invisible_genus : 0) +
                           gc.c_curves + gc.twist.magnitude();
        put({ArcGroup::Gamma, i}, gamma);
        put({ArcGroup::C, i}, I128(gc.cutting_total()));
        signs.signs[static_cast<std::size_t>(i - 1)] =
            gc.twist.total > 0 ? 1 : gc.twist.total < 0 ? -1 : 0;
    }
    {
        const auto& h = census.handle;
        put({ArcGroup::Gamma, g}, I128(h.visible_genus) + h.invisible_genus + h.c_curves +
                                      h.twist.magnitude());
        put({ArcGroup::CStar, 1}, I128(h.cutting_total()));
        signs.signs[static_cast<std::size_t>(g - 1)] =
            h.twist.total > 0 ? 1 : h.twist.total < 0 ? -1 : 0;
    }

    if (!diags.ok() || overflow) return Result<Pair>::failure(std::move(diags));

    auto vec = CoordVector::make(sig, std::move(values));
    if (!vec.ok()) return Result<Pair>::failure(vec.diags);
    if (vec->is_zero()) {
        diags.error("census", DiagCode::ZeroVector,
                    "an empty census encodes to the excluded zero vector");
        return Result<Pair>::failure(std::move(diags));
    }
    return Result<Pair>::success({std::move(*vec.value), std::move(signs)});
}

Diagnostics consistency_check(const MultiCurveCensus& census) {
    Diagnostics diags = structural_check(census);
    if (!diags.ok()) return diags;
    // Arc balance on every shared wall.
    for (const ArcId& arc : layout(census.sig)) {
        if (arc.group != ArcGroup::Beta && arc.group != ArcGroup::BetaPrime) continue;
        const auto [left, right] = arc_neighbors(census.sig, arc);
        const I128 from_left = wall_endpoints(census, left, arc);
        const I128 from_right = wall_endpoints(census, right, arc);
        if (from_left != from_right)
            diags.error(arc_name(arc), DiagCode::ArcImbalance,
                        region_name(left) + " accounts for " +
                            std::to_string(static_cast<long long>(from_left)) + ", " +
                            region_name(right) + " for " +
                            std::to_string(static_cast<long long>(from_right)));
    }
    return diags;
}

}  // namespace mcurve
