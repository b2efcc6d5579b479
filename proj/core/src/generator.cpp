#include "mcurve/generator.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include <json.hpp>

#include "mcurve/decoder.hpp"
#include "mcurve/encoder.hpp"

namespace mcurve {

std::int64_t SplitMix64::below(std::int64_t bound) {
    assert(bound >= 1);
    // Multiply-shift reduction; deterministic across platforms.
    const unsigned __int128 product =
        static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(bound);
    return static_cast<std::int64_t>(product >> 64);
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    return lo + below(hi - lo + 1);
}

namespace {

constexpr int kAttemptBudget = 1000;
constexpr int kRegionRetries = 8;

/// Twist content draw for one handle region.
struct CutContent {
    std::int64_t c_curves = 0;
    std::int64_t upper_diag = 0;
    std::int64_t lower_diag = 0;
    TwistDistribution twist;
    std::int64_t ending_right = 0;
};

/// Sample the cutting components of a G_i region: nothing, longitude
/// curves, pure twists, or twists plus diagonals (each twist then carries
/// exactly one twist so that c = d + |T|).  Zero-twist draws keep every
/// endpoint on the left wall and never carry diagonals, which keeps the
/// coordinates of the result unambiguous.
CutContent sample_cut(SplitMix64& rng, std::int64_t max_count) {
    CutContent cut;
    if (max_count == 0) return cut;
    switch (rng.below(4)) {
        case 0:
            break;
        case 1:
            cut.c_curves = rng.range(1, max_count);
            break;
        case 2: {
            const std::int64_t count = rng.range(1, max_count);
            const std::int64_t t = rng.range(0, max_count);
            if (t == 0) {
                // All components without twists; slack with a nonzero total
                // would have to become diagonals instead (mode 3).
                cut.twist = {0, 0, 0, count};
            } else {
                const std::int64_t m = rng.below(count);
                const int sign = rng.below(2) ? 1 : -1;
                cut.twist = {sign * (count * t + m), m, t, count - m};
            }
            break;
        }
        case 3: {
            const std::int64_t count = rng.range(1, max_count);
            const std::int64_t d = rng.range(1, max_count);
            const int sign = rng.below(2) ? 1 : -1;
            cut.twist = {sign * count, 0, 1, count};
            (sign > 0 ? cut.lower_diag : cut.upper_diag) = d;
            break;
        }
    }
    if (cut.twist.total != 0) cut.ending_right = rng.below(cut.twist.component_count() + 1);
    return cut;
}

bool sample_attempt(const GenConfig& cfg, SplitMix64& rng, MultiCurveCensus& out) {
    const SurfaceSig sig = cfg.sig;
    const std::int64_t M = cfg.max_count;
    out = MultiCurveCensus{};
    out.sig = sig;

    // Outermost handle first: its walls are fully determined by content.
    HandleCensus& h = out.handle;
    const std::int64_t star_twists = M > 0 ? rng.range(0, M) : 0;
    if (star_twists > 0) {
        const std::int64_t t = rng.range(0, M);
        const std::int64_t m = rng.below(star_twists);
        const std::int64_t magnitude = star_twists * t + m;
        const int sign = magnitude == 0 ? 0 : (rng.below(2) ? 1 : -1);
        h.twist = {sign * magnitude, m, t, star_twists - m};
    } else if (M > 0) {
        h.c_curves = rng.range(0, M);
    }
    h.visible_genus = M > 0 ? rng.range(0, M) : 0;
    h.invisible_genus = M > 0 ? rng.range(0, M) : 0;

    std::int64_t visible_wall = 2 * h.visible_genus + star_twists;
    std::int64_t invisible_wall = 2 * h.invisible_genus + star_twists;

    // Handle regions right to left; the known right walls bound each draw.
    out.genus.resize(static_cast<std::size_t>(sig.g - 1));
    for (int i = sig.g - 1; i >= 1; --i) {
        GenusCensus& gc = out.genus[static_cast<std::size_t>(i - 1)];
        bool placed = false;
        for (int attempt = 0; attempt < kRegionRetries && !placed; ++attempt) {
            const CutContent cut = sample_cut(rng, M);
            const std::int64_t c_eff = cut.twist.component_count();
            const std::int64_t d = cut.upper_diag + cut.lower_diag;
            const std::int64_t c_total = c_eff + d;

            std::int64_t l = M > 0 ? rng.range(0, M) : 0;
            Side l_side = Side::None;
            if (l > 0) {
                const bool left_ok = c_eff - cut.ending_right == 0;
                const bool right_ok = cut.ending_right == 0 && d == 0;
                if (left_ok && right_ok)
                    l_side = rng.below(2) ? Side::Left : Side::Right;
                else if (left_ok)
                    l_side = Side::Left;
                else if (right_ok)
                    l_side = Side::Right;
                else
                    l = 0;
            }
            std::int64_t lp = M > 0 ? rng.range(0, M) : 0;
            Side lp_side = Side::None;
            if (lp > 0)
                lp_side = c_total == 0 && rng.below(2) ? Side::Left : Side::Right;

            const std::int64_t through_vis =
                visible_wall - 2 * (l_side == Side::Left ? l : 0) -
                (cut.ending_right + d);
            const std::int64_t through_inv =
                invisible_wall - 2 * (lp_side == Side::Left ? lp : 0);
            if (through_vis < 0 || through_inv < 0) continue;

            gc.index = i;
            gc.c_curves = cut.c_curves;
            gc.visible_genus = l;
            gc.visible_side = l_side;
            gc.invisible_genus = lp;
            gc.invisible_side = lp_side;
            gc.upper_diag = cut.upper_diag;
            gc.lower_diag = cut.lower_diag;
            gc.twist = cut.twist;
            gc.vis_above = rng.range(0, through_vis);
            gc.vis_below = through_vis - gc.vis_above;
            gc.invis_above = rng.range(0, through_inv);
            gc.invis_below = through_inv - gc.invis_above;

            const std::int64_t left_wall =
                through_vis + 2 * (l_side == Side::Right ? l : 0) +
                (c_eff - cut.ending_right);
            const std::int64_t inv_left_wall =
                through_inv + 2 * (lp_side == Side::Right ? lp : 0) + c_total;
            if (left_wall <= visible_wall) {
                gc.cross_marker = CrossMarker::N;
                gc.side_crossing = cut.ending_right + d;
            } else {
                gc.cross_marker = CrossMarker::K;
                gc.side_crossing = c_eff - cut.ending_right;
            }
            visible_wall = left_wall;
            invisible_wall = inv_left_wall;
            placed = true;
        }
        if (!placed) return false;
    }

    // Puncture chain: walk the beta values from the invisible wrap-around
    // wall (which is beta_1) down to beta_{n+1}.
    if (((invisible_wall - visible_wall) % 2 + 2) % 2 != 0) return false;
    std::vector<std::int64_t> beta(static_cast<std::size_t>(sig.n + 1));
    beta.front() = invisible_wall;
    beta.back() = visible_wall;
    for (int i = 1; i <= sig.n - 1; ++i) {
        const std::int64_t prev = beta[static_cast<std::size_t>(i - 1)];
        const std::int64_t step = rng.range(-M, std::min(M, prev / 2));
        beta[static_cast<std::size_t>(i)] = prev - 2 * step;
    }
    out.puncture.resize(static_cast<std::size_t>(sig.n));
    for (int i = 1; i <= sig.n; ++i) {
        PunctureCensus& u = out.puncture[static_cast<std::size_t>(i - 1)];
        const std::int64_t left = beta[static_cast<std::size_t>(i - 1)];
        const std::int64_t right = beta[static_cast<std::size_t>(i)];
        const std::int64_t b = (left - right) / 2;
        const std::int64_t through = std::min(left, right);
        u.index = i;
        u.loop_count = std::abs(b);
        u.loop_side = b < 0 ? Side::Left : b > 0 ? Side::Right : Side::None;
        u.above = rng.range(0, through);
        u.below = through - u.above;
    }

    return !out.is_empty();
}

}  // namespace

Result<MultiCurveCensus> random_census(const GenConfig& cfg) {
    Diagnostics diags;
    if (!cfg.sig.valid() || cfg.max_count < 0 || cfg.trials < 1) {
        diags.error("config", DiagCode::InvariantViolation, "invalid generator config");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    // Keeps every intermediate product (count * twist number, wall sums)
    // far from 64-bit range.
    if (cfg.max_count > (std::int64_t{1} << 20)) {
        diags.error("config", DiagCode::InvariantViolation,
                    "max_count above 2^20 is not supported");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    SplitMix64 rng(cfg.seed);
    MultiCurveCensus census;
    for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
        if (sample_attempt(cfg, rng, census))
            return Result<MultiCurveCensus>::success(std::move(census));
    }
    diags.error("generator", DiagCode::Infeasible,
                "no consistent census after " + std::to_string(kAttemptBudget) +
                    " attempts");
    return Result<MultiCurveCensus>::failure(std::move(diags));
}

std::vector<std::pair<CoordVector, TwistSigns>> enumerate_small_vectors(SurfaceSig sig,
                                                                        std::int64_t bound) {
    assert(sig.valid() && bound >= 0);
    std::vector<std::pair<CoordVector, TwistSigns>> accepted;
    const int dim = coord_dimension(sig);
    std::vector<std::int64_t> values(static_cast<std::size_t>(dim), 0);

    // All sign assignments, least-significant region first.
    std::vector<TwistSigns> sign_choices;
    {
        std::size_t count = 1;
        for (int i = 0; i < sig.g; ++i) count *= 3;
        for (std::size_t code = 0; code < count; ++code) {
            TwistSigns s;
            std::size_t rest = code;
            for (int i = 0; i < sig.g; ++i) {
                s.signs.push_back(static_cast<int>(rest % 3) - 1);
                rest /= 3;
            }
            sign_choices.push_back(std::move(s));
        }
    }

    while (true) {
        auto vec = CoordVector::make(sig, values);
        if (vec.ok() && validate_basic(*vec).ok()) {
            for (const TwistSigns& signs : sign_choices) {
                auto census = decode(*vec, signs);
                if (!census.ok()) continue;
                // Keep only the canonical assignment (sign 0 exactly where
                // the region's total twist vanishes) so each accepted pair
                // round-trips including signs.
                TwistSigns canonical;
                for (const GenusCensus& gc : census->genus)
                    canonical.signs.push_back(
                        gc.twist.total > 0 ? 1 : gc.twist.total < 0 ? -1 : 0);
                canonical.signs.push_back(census->handle.twist.total > 0   ? 1
                                          : census->handle.twist.total < 0 ? -1
                                                                           : 0);
                if (canonical == signs) accepted.emplace_back(*vec, signs);
            }
        }
        // Odometer step.
        int pos = dim - 1;
        while (pos >= 0 && values[static_cast<std::size_t>(pos)] == bound) {
            values[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++values[static_cast<std::size_t>(pos)];
    }
    return accepted;
}

FuzzReport roundtrip_fuzz(const GenConfig& cfg) {
    FuzzReport report;
    report.trials = cfg.trials;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        // Pre-split per-trial seed so parallel scheduling cannot change it.
        SplitMix64 seeder(cfg.seed + static_cast<std::uint64_t>(trial));
        const std::uint64_t trial_seed = seeder.next();

        GenConfig one = cfg;
        one.seed = trial_seed;
        one.trials = 1;
        auto census = random_census(one);
        if (!census.ok()) {
            report.failures.push_back({trial_seed, "generate", census.diags.to_string()});
            continue;
        }
        auto enc = encode(*census);
        if (!enc.ok()) {
            report.failures.push_back({trial_seed, "encode", enc.diags.to_string()});
            continue;
        }
        auto back = decode(enc->first, enc->second);
        if (!back.ok()) {
            report.failures.push_back({trial_seed, "decode", back.diags.to_string()});
            continue;
        }
        if (!(*back == *census))
            report.failures.push_back({trial_seed, "compare", "census mismatch after round trip"});
    }
    return report;
}

std::string FuzzReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["trials"] = trials;
    nlohmann::ordered_json failures_json = nlohmann::ordered_json::array();
    for (const FuzzFailure& f : failures) {
        failures_json.push_back({{"seed", f.seed}, {"stage", f.stage}, {"detail", f.detail}});
    }
    j["failures"] = std::move(failures_json);
    return j.dump(indent);
}

}  // namespace mcurve
