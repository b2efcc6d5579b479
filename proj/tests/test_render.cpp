#include <doctest.h>

#include <cstdint>
#include <string>

#include <mcurve/decoder.hpp>
#include <mcurve/render.hpp>

#include "reference_data.hpp"

using namespace mcurve;

namespace {

/// Count <polyline occurrences inside each region group of the SVG.
std::int64_t polylines_in_group(const std::string& svg, const std::string& region) {
    const std::string open = "<g id=\"region-" + region + "\"";
    const std::size_t start = svg.find(open);
    REQUIRE(start != std::string::npos);
    const std::size_t end = svg.find("</g>", start);
    REQUIRE(end != std::string::npos);
    std::int64_t count = 0;
    std::size_t pos = start;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos && pos < end) {
        ++count;
        ++pos;
    }
    return count;
}

bool balanced_tags(const std::string& svg) {
    // <g> and <svg> nesting must balance; all other emitted elements are
    // self-closing.
    long depth = 0;
    for (std::size_t pos = 0; pos + 1 < svg.size(); ++pos) {
        if (svg.compare(pos, 3, "<g ") == 0 || svg.compare(pos, 4, "<svg") == 0) ++depth;
        if (svg.compare(pos, 4, "</g>") == 0 || svg.compare(pos, 6, "</svg>") == 0) --depth;
        if (depth < 0) return false;
    }
    return depth == 0;
}

}  // namespace

TEST_CASE("svg strand counts match the example census region totals") {
    const MultiCurveCensus census = refdata::example_census();
    auto svg = render_svg({census});
    REQUIRE(svg.ok());
    for (const PunctureCensus& u : census.puncture)
        CHECK(polylines_in_group(*svg.value, region_name({RegionKind::U, u.index})) ==
              region_component_total(u));
    for (const GenusCensus& gc : census.genus)
        CHECK(polylines_in_group(*svg.value, region_name({RegionKind::G, gc.index})) ==
              region_component_total(gc));
    CHECK(polylines_in_group(*svg.value, "G*") == region_component_total(census.handle));
}

TEST_CASE("svg strand counts on a minimal (1,1) curve") {
    // One strand around the handle with a single twist.
    auto v = parse_vector("(1, 0; 1, 1; 1; 1)", {1, 1});
    REQUIRE(v.ok());
    auto census = decode(*v.value, TwistSigns{{1}});
    REQUIRE(census.ok());
    auto svg = render_svg({*census.value});
    REQUIRE(svg.ok());
    CHECK(polylines_in_group(*svg.value, "U_1") ==
          region_component_total(census->puncture[0]));
    CHECK(polylines_in_group(*svg.value, "G*") ==
          region_component_total(census->handle));
}

TEST_CASE("svg output is well formed and deterministic") {
    const RenderSpec spec{refdata::example_census(), 0, 0, true, 8};
    auto a = render_svg(spec);
    auto b = render_svg(spec);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.value == *b.value);
    CHECK(balanced_tags(*a.value));
    CHECK(a->find("<?xml version=\"1.0\" encoding=\"UTF-8\"?>") == 0);
    CHECK(a->find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
}

TEST_CASE("svg respects explicit dimensions and label flag") {
    RenderSpec spec{refdata::example_census(), 800, 400, false, 6};
    auto svg = render_svg(spec);
    REQUIRE(svg.ok());
    CHECK(svg->find("width=\"800\"") != std::string::npos);
    CHECK(svg->find("height=\"400\"") != std::string::npos);
    CHECK(svg->find("<text") == std::string::npos);
}

TEST_CASE("svg refuses an inconsistent census") {
    MultiCurveCensus census = refdata::example_census();
    census.genus[0].lower_diag = 3;
    auto svg = render_svg({census});
    CHECK_FALSE(svg.ok());
    CHECK(svg.diags.has(DiagCode::InconsistentCensus));
}

TEST_CASE("summary has one row per region") {
    const std::string summary = render_summary(refdata::example_census());
    std::int64_t rows = -1;  // discount the header
    for (char ch : summary)
        if (ch == '\n') ++rows;
    CHECK(rows == 3 + 3);  // n + g
    CHECK(summary.find("G_2:") != std::string::npos);
    // The twist distribution of G_2: two single twists and one double.
    CHECK(summary.find("twists 3 (2×t=1, 1×t=2)") != std::string::npos);
    CHECK(summary.find("T=-4") != std::string::npos);
    CHECK(summary.find("loops 1 right") != std::string::npos);
}

TEST_CASE("summary of an empty census is the header only") {
    const std::string summary = render_summary(MultiCurveCensus{});
    CHECK(summary == "region  components\n");
}
