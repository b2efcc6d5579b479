// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Every expected value is exact integer equality.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <mcurve/mcurve.hpp>

#include "reference_data.hpp"

using namespace mcurve;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    double ms = 0.0;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            if (notes.size() < 12) notes.push_back(what);
        }
    }
};

double now_ms() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

std::vector<MultiCurveCensus> g_produced;  // censuses from criteria 1-4

void record(const MultiCurveCensus& census) { g_produced.push_back(census); }

// ---------------------------------------------------------------- criterion 1

void criterion_worked_example(Criterion& c) {
    auto census = decode(refdata::example_vector(), refdata::example_signs());
    c.require(census.ok(), "decode failed: " + census.diags.to_string());
    if (!census.ok()) return;
    record(*census.value);
    const MultiCurveCensus& mc = *census.value;

    const std::int64_t b[3] = {1, 1, -1};
    const std::int64_t above[3] = {5, 3, 4};
    const std::int64_t below[3] = {1, 1, 0};
    for (int i = 0; i < 3; ++i) {
        const auto& u = mc.puncture[static_cast<std::size_t>(i)];
        c.require(u.above == above[i] && u.below == below[i],
                  "U_" + std::to_string(i + 1) + " above/below mismatch");
        const std::int64_t signed_loops =
            u.loop_side == Side::Left ? -u.loop_count : u.loop_count;
        c.require(signed_loops == b[i], "U_" + std::to_string(i + 1) + " loop mismatch");
    }

    const GenusCensus& g1 = mc.genus[0];
    const GenusCensus& g2 = mc.genus[1];
    c.require(g1.visible_genus == 0 && g1.invisible_genus == 1 &&
                  g1.invisible_side == Side::Right,
              "G_1 genus loops mismatch");
    c.require(g2.visible_genus == 1 && g2.visible_side == Side::Right &&
                  g2.invisible_genus == 0,
              "G_2 genus loops mismatch");
    c.require(mc.handle.visible_genus == 1 && mc.handle.invisible_genus == 0,
              "G* genus loops mismatch");
    c.require(g1.twist.magnitude() == 1 && g2.twist.magnitude() == 4 &&
                  mc.handle.twist.magnitude() == 0,
              "|T| mismatch");
    c.require(g1.twist.total == 1 && g2.twist.total == -4, "twist signs mismatch");
    c.require(mc.handle.c_curves == 2 && g1.c_curves == 0 && g2.c_curves == 0,
              "longitude curve counts mismatch");
    c.require(g1.upper_diag == 0 && g1.lower_diag == 2, "G_1 diagonals mismatch");
    c.require(g2.upper_diag == 0 && g2.lower_diag == 0, "G_2 diagonals mismatch");
    c.require(g1.twist.m == 0 && g1.twist.t == 1 && g1.twist.base == 1,
              "G_1 twist distribution mismatch");
    c.require(g2.twist.m == 1 && g2.twist.t == 1 && g2.twist.base == 2,
              "G_2 twist distribution mismatch");
    c.require(g1.cross_marker == CrossMarker::N && g1.side_crossing == 2 &&
                  g1.cutting_total() - g1.side_crossing == 1,
              "n_1 mismatch");
    c.require(g2.cross_marker == CrossMarker::K && g2.side_crossing == 3 &&
                  g2.cutting_total() - g2.side_crossing == 0,
              "k_2 mismatch");
    c.require(g1.vis_above == 4 && g1.vis_below == 1 && g1.invis_above == 3 &&
                  g1.invis_below == 0,
              "G_1 above/below mismatch");
    c.require(g2.vis_above == 1 && g2.vis_below == 1 && g2.invis_above == 0 &&
                  g2.invis_below == 0,
              "G_2 above/below mismatch");
}

// ---------------------------------------------------------------- criterion 2

void criterion_round_trip(Criterion& c) {
    {
        auto census = decode(refdata::example_vector(), refdata::example_signs());
        c.require(census.ok(), "example decode failed");
        if (census.ok()) {
            record(*census.value);
            auto enc = encode(*census.value);
            c.require(enc.ok(), "example encode failed");
            if (enc.ok()) {
                c.require(enc->first == refdata::example_vector(),
                          "example round trip not exact");
                c.require(enc->second == refdata::example_signs(),
                          "example signs not reproduced");
            }
        }
    }
    {
        const CoordVector v = refdata::figure_vector();
        int exact_round_trips = 0;
        for (int s1 : {-1, 0, 1}) {
            for (int s2 : {-1, 0, 1}) {
                for (int s3 : {-1, 0, 1}) {
                    auto census = decode(v, TwistSigns{{s1, s2, s3}});
                    if (!census.ok()) continue;
                    record(*census.value);
                    auto enc = encode(*census.value);
                    if (enc.ok() && enc->first == v) ++exact_round_trips;
                }
            }
        }
        c.require(exact_round_trips > 0,
                  "no sign assignment round-trips the figure vector");
    }
}

// ---------------------------------------------------------------- criterion 3

void criterion_fuzz(Criterion& c) {
    for (const SurfaceSig sig :
         {SurfaceSig{1, 1}, SurfaceSig{2, 1}, SurfaceSig{3, 2}, SurfaceSig{3, 3}}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const GenConfig cfg{sig, 4, 500, seed};
            const FuzzReport report = roundtrip_fuzz(cfg);
            c.require(report.trials == 500, "trial count mismatch");
            if (!report.clean()) {
                std::string what = "failures on (" + std::to_string(sig.n) + "," +
                                   std::to_string(sig.g) + ") seed " +
                                   std::to_string(seed) + ":";
                for (const auto& f : report.failures) {
                    what += " [" + f.stage + "] " + f.detail;
                    if (what.size() > 300) break;
                }
                c.require(false, what);
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion_oracle(Criterion& c) {
    struct Case {
        SurfaceSig sig;
        std::int64_t bound;
    };
    for (const Case oc : {Case{{1, 1}, 3}, Case{{2, 1}, 2}}) {
        const auto accepted = enumerate_small_vectors(oc.sig, oc.bound);
        c.require(!accepted.empty(), "enumeration unexpectedly empty");
        for (const auto& [vector, signs] : accepted) {
            auto census = decode(vector, signs);
            if (!census.ok()) {
                c.require(false, "accepted vector no longer decodes");
                continue;
            }
            record(*census.value);
            auto enc = encode(*census.value);
            if (!enc.ok() || enc->first != vector || enc->second != signs) {
                c.require(false,
                          "round trip not exact for " + serialize_vector(vector) +
                              " signs " + serialize_signs(signs));
                continue;
            }
            if (!consistency_check(*census.value).ok())
                c.require(false, "census fails consistency for " + serialize_vector(vector));
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_invariants(Criterion& c) {
    // Also cover the censuses behind criterion 3's fuzz runs (same per-trial
    // seed derivation as roundtrip_fuzz).
    std::vector<MultiCurveCensus> all = g_produced;
    for (const SurfaceSig sig :
         {SurfaceSig{1, 1}, SurfaceSig{2, 1}, SurfaceSig{3, 2}, SurfaceSig{3, 3}}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            for (int trial = 0; trial < 500; ++trial) {
                SplitMix64 seeder(seed + static_cast<std::uint64_t>(trial));
                const GenConfig one{sig, 4, 1, seeder.next()};
                auto census = random_census(one);
                if (census.ok()) all.push_back(*census.value);
            }
        }
    }
    c.require(all.size() > 6000, "too few censuses collected");

    std::int64_t violations = 0;
    for (const MultiCurveCensus& mc : all) {
        for (const GenusCensus& gc : mc.genus) {
            if (gc.upper_diag * gc.lower_diag != 0) ++violations;
            if (gc.c_curves > 0 &&
                (gc.twist.component_count() != 0 || gc.upper_diag + gc.lower_diag != 0))
                ++violations;
            if (gc.twist.m * (gc.twist.t + 1) + gc.twist.base * gc.twist.t !=
                gc.twist.magnitude())
                ++violations;
            const std::int64_t d = gc.upper_diag + gc.lower_diag;
            if (d > 0 && gc.cutting_total() != d + gc.twist.magnitude()) ++violations;
        }
        const auto& h = mc.handle;
        if (h.c_curves > 0 && h.twist.component_count() != 0) ++violations;
        if (h.twist.m * (h.twist.t + 1) + h.twist.base * h.twist.t != h.twist.magnitude())
            ++violations;
        if (!consistency_check(mc).ok()) ++violations;  // includes arc balance
    }
    c.require(violations == 0, std::to_string(violations) + " invariant violations");
}

// ---------------------------------------------------------------- criterion 6

void criterion_degenerate(Criterion& c) {
    const CoordVector base = refdata::example_vector();
    const TwistSigns signs = refdata::example_signs();
    const int dim = coord_dimension(refdata::kSig33);
    SplitMix64 rng(2024);

    int processed = 0;
    int rejected = 0;
    for (int k = 0; k < 1000; ++k) {
        std::vector<std::int64_t> values(base.values().begin(), base.values().end());
        TwistSigns mutated_signs = signs;
        const std::int64_t kind = rng.below(4);
        if (kind == 0) {
            for (auto& x : values) x = 0;  // the excluded zero vector
        } else if (kind == 1) {
            // Break a parity: bump a single beta/beta' entry by one.
            const int offset = group_offset(refdata::kSig33, ArcGroup::Beta);
            const int count = group_size(refdata::kSig33, ArcGroup::Beta) +
                              group_size(refdata::kSig33, ArcGroup::BetaPrime);
            values[static_cast<std::size_t>(offset + rng.below(count))] += 1;
        } else if (kind == 2) {
            // Drive a count negative: erase a gamma or alpha entry.
            if (rng.below(2))
                values[static_cast<std::size_t>(
                    group_offset(refdata::kSig33, ArcGroup::Gamma) + rng.below(3))] = 0;
            else
                values[static_cast<std::size_t>(rng.below(6))] = 0;
        } else {
            // Arbitrary small mutation; may stay valid.
            const std::int64_t delta = rng.range(1, 3);
            auto& slot = values[static_cast<std::size_t>(rng.below(dim))];
            slot = rng.below(2) ? slot + delta : (slot >= delta ? slot - delta : 0);
            if (rng.below(4) == 0)
                mutated_signs.signs[static_cast<std::size_t>(rng.below(3))] = 0;
        }

        auto vec = CoordVector::make(refdata::kSig33, values);
        if (!vec.ok()) {
            c.require(false, "mutation produced an unconstructible vector");
            continue;
        }
        ++processed;
        auto census = decode(*vec.value, mutated_signs);
        if (census.ok()) {
            // A mutation may land on another valid curve; it must round-trip.
            auto enc = encode(*census.value);
            const bool exact = enc.ok() && enc->first == *vec.value;
            c.require(exact, "accepted mutation does not round-trip");
            continue;
        }
        ++rejected;
        c.require(!census.diags.empty(), "rejected without diagnostics");
        bool specified = true;
        for (const auto& d : census.diags) {
            switch (d.code) {
                case DiagCode::ZeroVector:
                case DiagCode::ParityError:
                case DiagCode::NegativeCount:
                case DiagCode::SignMissing:
                case DiagCode::InconsistentTwist:
                case DiagCode::AmbiguousDiagonals:
                case DiagCode::ArcImbalance:
                    break;
                default:
                    specified = false;
            }
        }
        c.require(specified, "rejection used an unspecified code");
        if (kind == 0)
            c.require(census.diags.has(DiagCode::ZeroVector), "zero vector not flagged");
        if (kind == 1)
            c.require(census.diags.has(DiagCode::ParityError), "parity break not flagged");
    }
    c.require(processed == 1000, "expected 1000 mutations");
    c.require(rejected > 500, "mutations were mostly accepted; harness too weak");
}

// ---------------------------------------------------------------- criterion 7

void criterion_render(Criterion& c) {
    auto census = decode(refdata::example_vector(), refdata::example_signs());
    c.require(census.ok(), "decode failed");
    if (!census.ok()) return;

    const RenderSpec spec{*census.value};
    auto svg1 = render_svg(spec);
    auto svg2 = render_svg(spec);
    c.require(svg1.ok() && svg2.ok(), "render failed");
    if (!svg1.ok() || !svg2.ok()) return;
    c.require(*svg1.value == *svg2.value, "render output not byte-identical");

    const auto count_in_group = [&](const std::string& region) -> std::int64_t {
        const std::string open = "<g id=\"region-" + region + "\"";
        const std::size_t start = svg1->find(open);
        if (start == std::string::npos) return -1;
        const std::size_t end = svg1->find("</g>", start);
        std::int64_t count = 0;
        std::size_t pos = start;
        while ((pos = svg1->find("<polyline", pos)) != std::string::npos && pos < end) {
            ++count;
            ++pos;
        }
        return count;
    };
    for (const PunctureCensus& u : census->puncture)
        c.require(count_in_group(region_name({RegionKind::U, u.index})) ==
                      region_component_total(u),
                  "U strand count mismatch");
    for (const GenusCensus& gc : census->genus)
        c.require(count_in_group(region_name({RegionKind::G, gc.index})) ==
                      region_component_total(gc),
                  "G strand count mismatch");
    c.require(count_in_group("G*") == region_component_total(census->handle),
              "G* strand count mismatch");
}

}  // namespace

int main() {
    struct Entry {
        std::string name;
        void (*run)(Criterion&);
        double budget_ms;  // 0: untimed
    };
    const Entry entries[] = {
        {"worked-example reproduction", criterion_worked_example, 10.0},
        {"round trip on the worked vectors", criterion_round_trip, 100.0},
        {"fuzz round trip, 500 trials x 4 signatures x seeds 1-3", criterion_fuzz,
         10000.0},
        {"brute-force enumeration oracle", criterion_oracle, 60000.0},
        {"invariant suite over all produced censuses", criterion_invariants, 0.0},
        {"degenerate-input handling, 1000 mutations", criterion_degenerate, 0.0},
        {"render fidelity", criterion_render, 0.0},
    };

    int failures = 0;
    int id = 0;
    for (const Entry& entry : entries) {
        Criterion c{++id, entry.name};
        const double start = now_ms();
        entry.run(c);
        c.ms = now_ms() - start;
        if (entry.budget_ms > 0.0 && c.ms > entry.budget_ms) {
            c.pass = false;
            c.notes.push_back("exceeded " + std::to_string(entry.budget_ms) + " ms budget");
        }
        std::printf("%s criterion %d: %s (%.1f ms)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.ms);
        for (const std::string& note : c.notes) std::printf("       - %s\n", note.c_str());
        if (!c.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
