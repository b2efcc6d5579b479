#include "mcurve/decoder.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <tuple>

#include "mcurve/encoder.hpp"

namespace mcurve {

namespace {

std::int64_t max0(std::int64_t x) { return x > 0 ? x : 0; }
bool odd(std::int64_t x) { return ((x % 2) + 2) % 2 == 1; }

/// max{0, x/2} with a parity guard on the positive branch.
bool half_pos(std::int64_t x, std::int64_t& out, Diagnostics& diags,
              const std::string& locus, const char* what) {
    if (x <= 0) {
        out = 0;
        return true;
    }
    if (odd(x)) {
        diags.error(locus, DiagCode::ParityError, what);
        return false;
    }
    out = x / 2;
    return true;
}

}  // namespace

Result<std::int64_t> loop_count(const CoordVector& v, int i) {
    assert(i >= 1 && i <= v.sig().n);
    Diagnostics diags;
    const std::int64_t diff = v.beta(i) - v.beta(i + 1);
    if (odd(diff)) {
        diags.error(region_name({RegionKind::U, i}), DiagCode::ParityError,
                    "wall difference must be even");
        return Result<std::int64_t>::failure(std::move(diags));
    }
    return Result<std::int64_t>::success(diff / 2);
}

Result<GenusLoops> genus_loop_counts(const CoordVector& v, int i) {
    const SurfaceSig sig = v.sig();
    assert(i >= 1 && i <= sig.g);
    Diagnostics diags;
    GenusLoops out;

    if (i == sig.g) {
        const std::int64_t cs = v.c_star();
        const std::int64_t vis = v.beta(sig.n + sig.g) - cs;
        const std::int64_t inv = v.invisible_wall(sig.g) - cs;
        for (auto [value, what] : {std::pair{vis, "visible wall - c* must be even"},
                                   std::pair{inv, "invisible wall - c* must be even"}}) {
            if (odd(value))
                diags.error("G*", DiagCode::ParityError, what);
            else if (value < 0)
                diags.error("G*", DiagCode::NegativeCount, "wall smaller than c*");
        }
        if (!diags.ok()) return Result<GenusLoops>::failure(std::move(diags));
        out.visible = vis / 2;
        out.invisible = inv / 2;
        return Result<GenusLoops>::success(out);
    }

    const std::string locus = region_name({RegionKind::G, i});
    const std::int64_t c = v.c(i);
    const std::int64_t vl = v.beta(sig.n + i);
    const std::int64_t vr = v.beta(sig.n + i + 1);
    const std::int64_t il = v.invisible_wall(i);
    const std::int64_t ir = v.beta_prime(sig.n + i + 1);

    const auto loops_of = [&](std::int64_t left, std::int64_t right, std::int64_t& count,
                              Side& side, const char* what) {
        const std::int64_t excess = std::abs(left - right) - c;
        if (excess > 0 && odd(excess)) {
            diags.error(locus, DiagCode::ParityError, what);
            return;
        }
        count = max0(excess) / 2;
        side = count == 0 ? Side::None : (left < right ? Side::Left : Side::Right);
    };
    loops_of(vl, vr, out.visible, out.visible_side, "visible wall parity");
    loops_of(il, ir, out.invisible, out.invisible_side, "invisible wall parity");
    if (!diags.ok()) return Result<GenusLoops>::failure(std::move(diags));
    return Result<GenusLoops>::success(out);
}

Result<std::int64_t> total_twist(const CoordVector& v, const TwistSigns& signs, int i) {
    const SurfaceSig sig = v.sig();
    assert(i >= 1 && i <= sig.g);
    assert(static_cast<int>(signs.signs.size()) == sig.g);
    Diagnostics diags;
    const std::string locus =
        i == sig.g ? "G*" : region_name({RegionKind::G, i});

    std::int64_t magnitude = 0;
    if (i == sig.g) {
        const std::int64_t cs = v.c_star();
        if (cs == 0) return Result<std::int64_t>::success(0);
        auto gl = genus_loop_counts(v, i);
        if (!gl.ok()) return Result<std::int64_t>::failure(gl.diags);
        magnitude = v.gamma(sig.g) - gl->visible - gl->invisible;
    } else {
        const std::int64_t c = v.c(i);
        if (c == 0) return Result<std::int64_t>::success(0);
        const std::int64_t vl = v.beta(sig.n + i);
        const std::int64_t vr = v.beta(sig.n + i + 1);
        const std::int64_t il = v.invisible_wall(i);
        const std::int64_t ir = v.beta_prime(sig.n + i + 1);
        // Only right-side genus components cross gamma_i.
        std::int64_t vis_corr = 0;
        std::int64_t inv_corr = 0;
        if (!half_pos(max0(vl - vr) - c, vis_corr, diags, locus, "visible wall parity") ||
            !half_pos(max0(il - ir) - c, inv_corr, diags, locus, "invisible wall parity"))
            return Result<std::int64_t>::failure(std::move(diags));
        magnitude = v.gamma(i) - vis_corr - inv_corr;
    }

    if (magnitude < 0) {
        diags.error(locus, DiagCode::NegativeCount, "total twist would be negative");
        return Result<std::int64_t>::failure(std::move(diags));
    }
    if (magnitude == 0) return Result<std::int64_t>::success(0);
    const int sign = signs.at(i);
    if (sign == 0) {
        diags.error(locus, DiagCode::SignMissing,
                    "total twist is nonzero but no direction was given");
        return Result<std::int64_t>::failure(std::move(diags));
    }
    return Result<std::int64_t>::success(sign * magnitude);
}

Result<std::int64_t> c_curve_count(const CoordVector& v, int i) {
    const SurfaceSig sig = v.sig();
    assert(i >= 1 && i <= sig.g);
    Diagnostics diags;
    const std::string locus =
        i == sig.g ? "G*" : region_name({RegionKind::G, i});

    std::int64_t count = 0;
    if (i == sig.g) {
        if (v.c_star() != 0) return Result<std::int64_t>::success(0);
        const std::int64_t vw = v.beta(sig.n + sig.g);
        const std::int64_t iw = v.invisible_wall(sig.g);
        if (odd(vw) || odd(iw)) {
            diags.error(locus, DiagCode::ParityError, "walls must be even when c* = 0");
            return Result<std::int64_t>::failure(std::move(diags));
        }
        count = v.gamma(sig.g) - vw / 2 - iw / 2;
    } else {
        if (v.c(i) != 0) return Result<std::int64_t>::success(0);
        const std::int64_t vl = v.beta(sig.n + i);
        const std::int64_t vr = v.beta(sig.n + i + 1);
        const std::int64_t il = v.invisible_wall(i);
        const std::int64_t ir = v.beta_prime(sig.n + i + 1);
        std::int64_t vis_corr = 0;
        std::int64_t inv_corr = 0;
        if (!half_pos(max0(vl - vr), vis_corr, diags, locus, "visible wall parity") ||
            !half_pos(max0(il - ir), inv_corr, diags, locus, "invisible wall parity"))
            return Result<std::int64_t>::failure(std::move(diags));
        count = v.gamma(i) - vis_corr - inv_corr;
    }
    if (count < 0) {
        diags.error(locus, DiagCode::NegativeCount, "longitude-curve count would be negative");
        return Result<std::int64_t>::failure(std::move(diags));
    }
    return Result<std::int64_t>::success(count);
}

std::pair<std::int64_t, std::int64_t> diagonal_counts(std::int64_t cutting,
                                                      std::int64_t twist) {
    // Closed forms clamped at zero; a twist excess beyond the cutting
    // coordinate leaves no room for diagonals at all.
    if (cutting == 0) return {0, 0};
    if (twist > 0) return {0, max0(cutting - twist)};
    if (twist < 0) return {max0(cutting + twist), 0};
    return {cutting, cutting};  // degenerate at twist == 0; decode resolves separately
}

Result<TwistDistribution> twist_distribution(std::int64_t c_eff, std::int64_t twist_total) {
    assert(c_eff >= 0);
    Diagnostics diags;
    const std::int64_t magnitude = std::abs(twist_total);
    TwistDistribution dist;
    dist.total = twist_total;
    if (c_eff == 0) {
        if (magnitude > 0) {
            diags.error("twist", DiagCode::InconsistentTwist,
                        "nonzero total twist with no twist components");
            return Result<TwistDistribution>::failure(std::move(diags));
        }
        return Result<TwistDistribution>::success(dist);
    }
    dist.m = magnitude % c_eff;
    dist.t = (magnitude - dist.m) / c_eff;
    dist.base = c_eff - dist.m;
    return Result<TwistDistribution>::success(dist);
}

Result<SideCrossing> side_crossings(const CoordVector& v, std::int64_t cutting,
                                    std::int64_t visible_loops, int i) {
    const SurfaceSig sig = v.sig();
    assert(i >= 1 && i <= sig.g - 1);
    Diagnostics diags;
    const std::string locus = region_name({RegionKind::G, i});
    const std::int64_t vl = v.beta(sig.n + i);
    const std::int64_t vr = v.beta(sig.n + i + 1);

    SideCrossing out;
    out.marker = vl <= vr ? CrossMarker::N : CrossMarker::K;
    const std::int64_t num = (vl <= vr ? vr - vl : vl - vr) + cutting;
    if (odd(num)) {
        diags.error(locus, DiagCode::ParityError, "wall difference plus c_i must be even");
        return Result<SideCrossing>::failure(std::move(diags));
    }
    out.value = num / 2 - visible_loops;
    out.complement = cutting - out.value;
    if (out.value < 0 || out.complement < 0) {
        diags.error(locus, DiagCode::NegativeCount, "side-crossing count out of range");
        return Result<SideCrossing>::failure(std::move(diags));
    }
    return Result<SideCrossing>::success(out);
}

Result<PunctureAboveBelow> puncture_above_below(const CoordVector& v, int i) {
    Diagnostics diags;
    auto b = loop_count(v, i);
    if (!b.ok()) return Result<PunctureAboveBelow>::failure(b.diags);
    const std::int64_t loops = std::abs(*b);
    PunctureAboveBelow out{v.alpha(2 * i - 1) - loops, v.alpha(2 * i) - loops};
    if (out.above < 0 || out.below < 0) {
        diags.error(region_name({RegionKind::U, i}), DiagCode::NegativeCount,
                    "above/below count would be negative");
        return Result<PunctureAboveBelow>::failure(std::move(diags));
    }
    return Result<PunctureAboveBelow>::success(out);
}

namespace {

bool decode_puncture(const CoordVector& v, int i, PunctureCensus& out,
                     Diagnostics& diags) {
    auto b = loop_count(v, i);
    auto ab = puncture_above_below(v, i);
    if (!b.ok() || !ab.ok()) {
        diags.merge(b.diags);
        diags.merge(ab.diags);
        return false;
    }
    out.index = i;
    out.above = ab->above;
    out.below = ab->below;
    out.loop_count = std::abs(*b);
    out.loop_side = *b < 0 ? Side::Left : *b > 0 ? Side::Right : Side::None;
    return true;
}

bool decode_genus(const CoordVector& v, const TwistSigns& signs, int i, GenusCensus& out,
                  Diagnostics& diags) {
    const std::string locus = region_name({RegionKind::G, i});
    const std::int64_t c = v.c(i);

    auto gl = genus_loop_counts(v, i);
    if (!gl.ok()) {
        diags.merge(gl.diags);
        return false;
    }
    auto twist = total_twist(v, signs, i);
    if (!twist.ok()) {
        diags.merge(twist.diags);
        return false;
    }
    auto longitude = c_curve_count(v, i);
    if (!longitude.ok()) {
        diags.merge(longitude.diags);
        return false;
    }
    auto crossing = side_crossings(v, c, gl->visible, i);
    if (!crossing.ok()) {
        diags.merge(crossing.diags);
        return false;
    }
    const std::int64_t T = *twist;
    const std::int64_t absT = std::abs(T);
    const std::int64_t l = gl->visible;
    const std::int64_t lp = gl->invisible;
    // Crossings of twist+diagonal components on beta_{n+i+1}.
    const std::int64_t r =
        crossing->marker == CrossMarker::N ? crossing->value : crossing->complement;

    std::int64_t du = 0;
    std::int64_t dl = 0;
    if (c > 0) {
        if (T != 0) {
            std::tie(du, dl) = diagonal_counts(c, T);
        } else if (r == c) {
            // All cutting components are diagonals of one kind; the xi arcs
            // decide which, since only they separate upper from lower.
            const bool upper_fits = v.xi(2 * i - 1) - c - l >= 0 && v.xi(2 * i) - l >= 0;
            const bool lower_fits = v.xi(2 * i - 1) - l >= 0 && v.xi(2 * i) - c - l >= 0;
            if (upper_fits && lower_fits) {
                diags.error(locus, DiagCode::AmbiguousDiagonals,
                            "coordinates admit both diagonal orientations");
                return false;
            }
            if (!upper_fits && !lower_fits) {
                diags.error(locus, DiagCode::NegativeCount,
                            "no diagonal orientation fits the xi coordinates");
                return false;
            }
            (upper_fits ? du : dl) = c;
        } else if (r != 0) {
            diags.error(locus, DiagCode::NegativeCount,
                        "zero-twist components must all attach to the left visible wall");
            return false;
        }
    }

    const std::int64_t c_eff = c - du - dl;
    auto dist = twist_distribution(c_eff, T);
    if (!dist.ok()) {
        diags.merge(dist.diags);
        return false;
    }
    const std::int64_t ending_right = r - du - dl;
    if (ending_right < 0 || ending_right > c_eff) {
        diags.error(locus, DiagCode::NegativeCount, "twist endpoint split out of range");
        return false;
    }

    std::int64_t vis_above, vis_below;
    if (absT != 0) {
        vis_above = v.xi(2 * i - 1) - absT - std::max(r - dl, T) + max0(T) - l;
        vis_below = v.xi(2 * i) - absT - std::max(r - du, -T) + max0(-T) - l;
    } else {
        vis_above = v.xi(2 * i - 1) - std::max(*longitude, du) - l;
        vis_below = v.xi(2 * i) - std::max(*longitude, dl) - l;
    }
    const std::int64_t invis_above = v.xi_prime(2 * i - 1) - lp;
    const std::int64_t invis_below = v.xi_prime(2 * i) - lp;
    if (vis_above < 0 || vis_below < 0 || invis_above < 0 || invis_below < 0) {
        diags.error(locus, DiagCode::NegativeCount,
                    "above/below count would be negative");
        return false;
    }

    out.index = i;
    out.c_curves = *longitude;
    out.visible_genus = l;
    out.visible_side = gl->visible_side;
    out.invisible_genus = lp;
    out.invisible_side = gl->invisible_side;
    out.upper_diag = du;
    out.lower_diag = dl;
    out.twist = *dist;
    out.vis_above = vis_above;
    out.vis_below = vis_below;
    out.invis_above = invis_above;
    out.invis_below = invis_below;
    out.cross_marker = crossing->marker;
    out.side_crossing = crossing->value;
    return true;
}

bool decode_handle(const CoordVector& v, const TwistSigns& signs, HandleCensus& out,
                   Diagnostics& diags) {
    const SurfaceSig sig = v.sig();
    auto gl = genus_loop_counts(v, sig.g);
    if (!gl.ok()) {
        diags.merge(gl.diags);
        return false;
    }
    auto twist = total_twist(v, signs, sig.g);
    if (!twist.ok()) {
        diags.merge(twist.diags);
        return false;
    }
    auto longitude = c_curve_count(v, sig.g);
    if (!longitude.ok()) {
        diags.merge(longitude.diags);
        return false;
    }
    auto dist = twist_distribution(v.c_star(), *twist);
    if (!dist.ok()) {
        diags.merge(dist.diags);
        return false;
    }
    out.c_curves = *longitude;
    out.visible_genus = gl->visible;
    out.invisible_genus = gl->invisible;
    out.twist = *dist;
    return true;
}

}  // namespace

Result<MultiCurveCensus> decode(const CoordVector& v, const TwistSigns& signs) {
    Diagnostics diags = validate_basic(v);
    if (!diags.ok()) return Result<MultiCurveCensus>::failure(std::move(diags));

    const SurfaceSig sig = v.sig();
    if (static_cast<int>(signs.signs.size()) != sig.g) {
        diags.error("signs", DiagCode::BadSigns,
                    "expected " + std::to_string(sig.g) + " entries");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }

    MultiCurveCensus census;
    census.sig = sig;
    census.puncture.resize(static_cast<std::size_t>(sig.n));
    census.genus.resize(static_cast<std::size_t>(sig.g - 1));

    for (int i = 1; i <= sig.n; ++i)
        decode_puncture(v, i, census.puncture[static_cast<std::size_t>(i - 1)], diags);
    for (int i = 1; i <= sig.g - 1; ++i)
        decode_genus(v, signs, i, census.genus[static_cast<std::size_t>(i - 1)], diags);
    decode_handle(v, signs, census.handle, diags);
    if (!diags.ok()) return Result<MultiCurveCensus>::failure(std::move(diags));

    // Realizability gate: counting formulas alone do not see every wall
    // constraint (e.g. alpha sums against the beta walls), so re-encode and
    // require the exact coordinates back.
    auto enc = encode(census);
    if (!enc.ok()) {
        diags.merge(enc.diags);
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    if (enc->first != v) {
        for (const ArcId& arc : layout(sig)) {
            if (enc->first.at(arc) != v.at(arc))
                diags.error(arc_name(arc), DiagCode::ArcImbalance,
                            "region censuses account for " +
                                std::to_string(enc->first.at(arc)) + " crossings, not " +
                                std::to_string(v.at(arc)));
        }
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    return Result<MultiCurveCensus>::success(std::move(census));
}

}  // namespace mcurve
