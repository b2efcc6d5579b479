#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include <mcurve/coordinates.hpp>
#include <mcurve/generator.hpp>

#include "reference_data.hpp"

using namespace mcurve;

TEST_CASE("parse the worked example vector") {
    auto v = parse_vector(refdata::kExampleVectorText, refdata::kSig33);
    REQUIRE(v.ok());
    CHECK(v->alpha(1) == 6);
    CHECK(v->alpha(6) == 1);
    CHECK(v->beta(1) == 8);
    CHECK(v->beta(6) == 2);
    CHECK(v->beta_prime(5) == 3);
    CHECK(v->beta_prime(6) == 0);
    CHECK(v->xi(1) == 5);
    CHECK(v->xi_prime(4) == 0);
    CHECK(v->gamma(2) == 5);
    CHECK(v->c(1) == 3);
    CHECK(v->c(2) == 3);
    CHECK(v->c_star() == 0);
}

TEST_CASE("parse tolerates spacing and no parentheses") {
    auto a = parse_vector("(6,2,4,2,5,1; 8,6,4,6,7,2; 3,0; 5,4,6,6; 4,1,0,0; 2,5,3; 3,3; 0)",
                          refdata::kSig33);
    auto b = parse_vector("6,2,4,2,5,1;8,6,4,6,7,2;3,0;5,4,6,6;4,1,0,0;2,5,3;3,3;0",
                          refdata::kSig33);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.value == *b.value);
}

TEST_CASE("g = 1 vectors use four groups") {
    auto v = parse_vector("(0,0; 0,0; 0; 0)", {1, 1});
    REQUIRE(v.ok());
    CHECK(v->is_zero());

    auto wrong = parse_vector("(1,1; 2,2; 2; 3; 0)", {1, 1});
    CHECK_FALSE(wrong.ok());
    CHECK(wrong.diags.has(DiagCode::WrongGroupCount));
}

TEST_CASE("parse error paths") {
    auto short_group = parse_vector("(6,2; 8,6,4,6,7,2; 3,0; 5,4,6,6; 4,1,0,0; 2,5,3; 3,3; 0)",
                                    refdata::kSig33);
    CHECK_FALSE(short_group.ok());
    CHECK(short_group.diags.has(DiagCode::WrongGroupLength));

    auto negative = parse_vector("(-1,0; 0,0; 0; 0)", {1, 1});
    CHECK_FALSE(negative.ok());
    CHECK(negative.diags.has(DiagCode::NegativeEntry));

    auto junk = parse_vector("(a,0; 0,0; 0; 0)", {1, 1});
    CHECK_FALSE(junk.ok());
    CHECK(junk.diags.has(DiagCode::NonInteger));

    auto huge = parse_vector("(99999999999999999999,0; 0,0; 0; 0)", {1, 1});
    CHECK_FALSE(huge.ok());
    CHECK(huge.diags.has(DiagCode::Overflow));
}

TEST_CASE("serialize golden strings") {
    CHECK(serialize_vector(refdata::example_vector()) == refdata::kExampleVectorText);
    auto zero = parse_vector("(0,0;0,0;0;0)", {1, 1});
    REQUIRE(zero.ok());
    CHECK(serialize_vector(*zero.value) == "(0, 0; 0, 0; 0; 0)");
}

TEST_CASE("parse then serialize is the identity on random vectors") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SurfaceSig sig{static_cast<int>(rng.range(1, 5)),
                             static_cast<int>(rng.range(1, 5))};
        std::vector<std::int64_t> values;
        for (int i = 0; i < coord_dimension(sig); ++i) values.push_back(rng.range(0, 40));
        auto v = CoordVector::make(sig, values);
        REQUIRE(v.ok());
        auto back = parse_vector(serialize_vector(*v.value), sig);
        REQUIRE(back.ok());
        CHECK(*back.value == *v.value);
    }
}

TEST_CASE("sign parsing") {
    auto s = parse_signs("+,-,0", refdata::kSig33);
    REQUIRE(s.ok());
    CHECK(s->signs == std::vector<int>{1, -1, 0});
    CHECK(serialize_signs(*s.value) == "+,-,0");

    CHECK_FALSE(parse_signs("+,-", refdata::kSig33).ok());
    CHECK_FALSE(parse_signs("+,-,2", refdata::kSig33).ok());
}

TEST_CASE("validate_basic accepts the example") {
    CHECK(validate_basic(refdata::example_vector()).ok());
    CHECK(validate_basic(refdata::figure_vector()).ok());
}

TEST_CASE("validate_basic rejects the zero vector") {
    auto zero = parse_vector("(0,0; 0,0; 0; 0)", {1, 1});
    REQUIRE(zero.ok());
    const Diagnostics diags = validate_basic(*zero.value);
    CHECK_FALSE(diags.ok());
    CHECK(diags.has(DiagCode::ZeroVector));
}

TEST_CASE("validate_basic flags a broken puncture parity") {
    CoordVector v = refdata::example_vector();
    v.set({ArcGroup::Beta, 1}, 7);  // beta_1 - beta_2 = 1, odd
    const Diagnostics diags = validate_basic(v);
    CHECK_FALSE(diags.ok());
    CHECK(diags.has(DiagCode::ParityError));
    bool in_u1 = false;
    for (const auto& d : diags) in_u1 = in_u1 || d.locus == "U_1";
    CHECK(in_u1);
}

TEST_CASE("validate_basic flags G* walls below c*") {
    auto v = parse_vector("(0,0; 0,0; 3; 2)", {1, 1});  // beta walls are 0 < c* = 2
    REQUIRE(v.ok());
    const Diagnostics diags = validate_basic(*v.value);
    CHECK_FALSE(diags.ok());
    CHECK(diags.has(DiagCode::NegativeCount));
}

TEST_CASE("validate_basic is idempotent") {
    CoordVector v = refdata::example_vector();
    v.set({ArcGroup::Beta, 1}, 7);
    CHECK(validate_basic(v) == validate_basic(v));
}

TEST_CASE("vector JSON round trip") {
    const CoordVector v = refdata::example_vector();
    const TwistSigns signs = refdata::example_signs();
    const std::string json = vector_to_json(v, &signs);
    auto back = vector_from_json(json);
    REQUIRE(back.ok());
    CHECK(back->first == v);
    CHECK(back->second == signs);

    const std::string no_signs = vector_to_json(v);
    auto bare = vector_from_json(no_signs);
    REQUIRE(bare.ok());
    CHECK(bare->first == v);
    CHECK(bare->second.signs.empty());
}
