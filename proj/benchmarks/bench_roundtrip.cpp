#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include <mcurve/mcurve.hpp>

namespace {

using namespace mcurve;

const char* kExampleText =
    "(6, 2, 4, 2, 5, 1; 8, 6, 4, 6, 7, 2; 3, 0; 5, 4, 6, 6; 4, 1, 0, 0; 2, 5, 3; 3, 3; 0)";
constexpr SurfaceSig kSig{3, 3};

CoordVector example_vector() { return *parse_vector(kExampleText, kSig).value; }
TwistSigns example_signs() { return *parse_signs("+,-,0", kSig).value; }

void BM_ParseVector(benchmark::State& state) {
    for (auto _ : state) {
        auto v = parse_vector(kExampleText, kSig);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ParseVector);

void BM_DecodeExample(benchmark::State& state) {
    const CoordVector v = example_vector();
    const TwistSigns signs = example_signs();
    for (auto _ : state) {
        auto census = decode(v, signs);
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_DecodeExample);

void BM_EncodeExample(benchmark::State& state) {
    auto census = decode(example_vector(), example_signs());
    for (auto _ : state) {
        auto enc = encode(*census.value);
        benchmark::DoNotOptimize(enc);
    }
}
BENCHMARK(BM_EncodeExample);

void BM_RoundTrip(benchmark::State& state) {
    const SurfaceSig sig{static_cast<int>(state.range(0)),
                         static_cast<int>(state.range(1))};
    std::vector<MultiCurveCensus> censuses;
    for (std::uint64_t seed = 1; seed <= 64; ++seed) {
        auto census = random_census({sig, 4, 1, seed});
        if (census.ok()) censuses.push_back(*census.value);
    }
    std::size_t next = 0;
    for (auto _ : state) {
        const MultiCurveCensus& census = censuses[next++ % censuses.size()];
        auto enc = encode(census);
        auto back = decode(enc->first, enc->second);
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_RoundTrip)->Args({1, 1})->Args({3, 3})->Args({6, 6});

void BM_Fuzz100(benchmark::State& state) {
    for (auto _ : state) {
        const FuzzReport report = roundtrip_fuzz({{3, 3}, 4, 100, 42});
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Fuzz100);

void BM_RenderSvg(benchmark::State& state) {
    auto census = decode(example_vector(), example_signs());
    const RenderSpec spec{*census.value};
    for (auto _ : state) {
        auto svg = render_svg(spec);
        benchmark::DoNotOptimize(svg);
    }
}
BENCHMARK(BM_RenderSvg);

}  // namespace

BENCHMARK_MAIN();
