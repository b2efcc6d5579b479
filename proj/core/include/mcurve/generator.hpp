#ifndef MCURVE_GENERATOR_HPP
#define MCURVE_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcurve/census.hpp"
#include "mcurve/coordinates.hpp"
#include "mcurve/diagnostics.hpp"

namespace mcurve {

/// SplitMix64: fixed, portable 64-bit generator so seeds reproduce across
/// platforms and toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) via 128-bit multiply; bound >= 1.
    std::int64_t below(std::int64_t bound);

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

struct GenConfig {
    SurfaceSig sig;
    std::int64_t max_count = 4;  ///< per-component-type sampling bound
    int trials = 1;
    std::uint64_t seed = 0;
};

/// Sample a random consistent census: handle contents first, then wall
/// counts propagated region by region with the free through-components
/// solved to match, rejecting and retrying (up to 1000 attempts) when a
/// draw is infeasible.  Deterministic per seed.
Result<MultiCurveCensus> random_census(const GenConfig& cfg);

/// Brute-force oracle: every vector with entries in [0, bound] together
/// with every canonical sign assignment accepted by validate_basic +
/// decode.  Intended for tiny signatures only ((1,1) bound <= 4,
/// (2,1) bound <= 3); cost grows as (bound+1)^dim.
std::vector<std::pair<CoordVector, TwistSigns>> enumerate_small_vectors(SurfaceSig sig,
                                                                        std::int64_t bound);

struct FuzzFailure {
    std::uint64_t seed = 0;
    std::string stage;  ///< "generate", "encode", "decode", "compare"
    std::string detail;

    friend bool operator==(const FuzzFailure&, const FuzzFailure&) = default;
};

struct FuzzReport {
    int trials = 0;
    std::vector<FuzzFailure> failures;

    bool clean() const { return failures.empty(); }
    std::string to_json(int indent = -1) const;
};

/// Round-trip property run: for each trial, generate a census, encode it,
/// decode the result and compare.  Per-trial seeds are pre-split from
/// cfg.seed, so the report is deterministic regardless of scheduling.
FuzzReport roundtrip_fuzz(const GenConfig& cfg);

}  // namespace mcurve

#endif
