#include "mcurve/census_json.hpp"

#include <json.hpp>

namespace mcurve {

namespace {

using Json = nlohmann::ordered_json;

Json side_json(std::int64_t count, Side side) {
    return Json{{"count", count}, {"side", to_string(side)}};
}

Json twist_json(const TwistDistribution& twist) {
    return Json{{"total", twist.total}, {"m", twist.m}, {"t", twist.t},
                {"base", twist.base}};
}

bool read_count(const nlohmann::json& j, const char* key, std::int64_t& out,
                Diagnostics& diags, const std::string& locus) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        diags.error(locus, DiagCode::NonInteger, std::string("missing integer '") + key + "'");
        return false;
    }
    out = j[key].get<std::int64_t>();
    return true;
}

bool read_side(const nlohmann::json& j, const char* key, std::int64_t& count, Side& side,
               Diagnostics& diags, const std::string& locus) {
    if (!j.contains(key) || !j[key].is_object()) {
        diags.error(locus, DiagCode::NonInteger, std::string("missing object '") + key + "'");
        return false;
    }
    const auto& obj = j[key];
    if (!read_count(obj, "count", count, diags, locus)) return false;
    const std::string s = obj.value("side", "");
    if (s == "none")
        side = Side::None;
    else if (s == "left")
        side = Side::Left;
    else if (s == "right")
        side = Side::Right;
    else {
        diags.error(locus, DiagCode::NonInteger, "side must be none/left/right");
        return false;
    }
    return true;
}

bool read_twist(const nlohmann::json& j, TwistDistribution& twist, Diagnostics& diags,
                const std::string& locus) {
    if (!j.contains("twist") || !j["twist"].is_object()) {
        diags.error(locus, DiagCode::NonInteger, "missing object 'twist'");
        return false;
    }
    const auto& obj = j["twist"];
    return read_count(obj, "total", twist.total, diags, locus) &&
           read_count(obj, "m", twist.m, diags, locus) &&
           read_count(obj, "t", twist.t, diags, locus) &&
           read_count(obj, "base", twist.base, diags, locus);
}

}  // namespace

std::string census_to_json(const MultiCurveCensus& census, int indent) {
    Json j;
    j["n"] = census.sig.n;
    j["g"] = census.sig.g;
    Json regions = Json::array();
    for (const PunctureCensus& u : census.puncture) {
        regions.push_back(Json{{"kind", "U"},
                               {"i", u.index},
                               {"above", u.above},
                               {"below", u.below},
                               {"loops", side_json(u.loop_count, u.loop_side)}});
    }
    for (const GenusCensus& gc : census.genus) {
        regions.push_back(Json{
            {"kind", "G"},
            {"i", gc.index},
            {"c_curves", gc.c_curves},
            {"visible_genus", side_json(gc.visible_genus, gc.visible_side)},
            {"invisible_genus", side_json(gc.invisible_genus, gc.invisible_side)},
            {"diag_upper", gc.upper_diag},
            {"diag_lower", gc.lower_diag},
            {"twist", twist_json(gc.twist)},
            {"vis_above", gc.vis_above},
            {"vis_below", gc.vis_below},
            {"invis_above", gc.invis_above},
            {"invis_below", gc.invis_below},
            {"side_crossing",
             Json{{"marker", to_string(gc.cross_marker)}, {"value", gc.side_crossing}}}});
    }
    regions.push_back(Json{{"kind", "GStar"},
                           {"c_curves", census.handle.c_curves},
                           {"visible_genus", census.handle.visible_genus},
                           {"invisible_genus", census.handle.invisible_genus},
                           {"twist", twist_json(census.handle.twist)}});
    j["regions"] = std::move(regions);
    return j.dump(indent);
}

Result<MultiCurveCensus> census_from_json(std::string_view text) {
    Diagnostics diags;
    const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        diags.error("json", DiagCode::NonInteger, "not a JSON object");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    if (!j.contains("n") || !j.contains("g") || !j["n"].is_number_integer() ||
        !j["g"].is_number_integer()) {
        diags.error("json", DiagCode::NonInteger, "missing integer fields n, g");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    MultiCurveCensus census;
    census.sig = {j["n"].get<int>(), j["g"].get<int>()};
    if (!census.sig.valid()) {
        diags.error("surface", DiagCode::InvariantViolation, "n >= 1 and g >= 1 required");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    if (!j.contains("regions") || !j["regions"].is_array()) {
        diags.error("json", DiagCode::NonInteger, "missing array 'regions'");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }

    bool saw_star = false;
    for (const auto& r : j["regions"]) {
        const std::string kind = r.is_object() ? r.value("kind", "") : "";
        if (kind == "U") {
            PunctureCensus u;
            std::int64_t index = 0;
            if (!read_count(r, "i", index, diags, "U") ||
                !read_count(r, "above", u.above, diags, "U") ||
                !read_count(r, "below", u.below, diags, "U") ||
                !read_side(r, "loops", u.loop_count, u.loop_side, diags, "U"))
                return Result<MultiCurveCensus>::failure(std::move(diags));
            u.index = static_cast<int>(index);
            census.puncture.push_back(u);
        } else if (kind == "G") {
            GenusCensus gc;
            std::int64_t index = 0;
            if (!read_count(r, "i", index, diags, "G") ||
                !read_count(r, "c_curves", gc.c_curves, diags, "G") ||
                !read_side(r, "visible_genus", gc.visible_genus, gc.visible_side, diags,
                           "G") ||
                !read_side(r, "invisible_genus", gc.invisible_genus, gc.invisible_side,
                           diags, "G") ||
                !read_count(r, "diag_upper", gc.upper_diag, diags, "G") ||
                !read_count(r, "diag_lower", gc.lower_diag, diags, "G") ||
                !read_twist(r, gc.twist, diags, "G") ||
                !read_count(r, "vis_above", gc.vis_above, diags, "G") ||
                !read_count(r, "vis_below", gc.vis_below, diags, "G") ||
                !read_count(r, "invis_above", gc.invis_above, diags, "G") ||
                !read_count(r, "invis_below", gc.invis_below, diags, "G"))
                return Result<MultiCurveCensus>::failure(std::move(diags));
            gc.index = static_cast<int>(index);
            if (!r.contains("side_crossing") || !r["side_crossing"].is_object()) {
                diags.error("G", DiagCode::NonInteger, "missing object 'side_crossing'");
                return Result<MultiCurveCensus>::failure(std::move(diags));
            }
            const auto& sc = r["side_crossing"];
            const std::string marker = sc.value("marker", "");
            if (marker == "n")
                gc.cross_marker = CrossMarker::N;
            else if (marker == "k")
                gc.cross_marker = CrossMarker::K;
            else {
                diags.error("G", DiagCode::NonInteger, "side_crossing marker must be n or k");
                return Result<MultiCurveCensus>::failure(std::move(diags));
            }
            if (!read_count(sc, "value", gc.side_crossing, diags, "G"))
                return Result<MultiCurveCensus>::failure(std::move(diags));
            census.genus.push_back(gc);
        } else if (kind == "GStar") {
            saw_star = true;
            if (!read_count(r, "c_curves", census.handle.c_curves, diags, "G*") ||
                !read_count(r, "visible_genus", census.handle.visible_genus, diags,
                            "G*") ||
                !read_count(r, "invisible_genus", census.handle.invisible_genus, diags,
                            "G*") ||
                !read_twist(r, census.handle.twist, diags, "G*"))
                return Result<MultiCurveCensus>::failure(std::move(diags));
        } else {
            diags.error("json", DiagCode::NonInteger, "region kind must be U, G or GStar");
            return Result<MultiCurveCensus>::failure(std::move(diags));
        }
    }
    if (static_cast<int>(census.puncture.size()) != census.sig.n ||
        static_cast<int>(census.genus.size()) != census.sig.g - 1 || !saw_star) {
        diags.error("json", DiagCode::InvariantViolation,
                    "region list does not match n and g");
        return Result<MultiCurveCensus>::failure(std::move(diags));
    }
    return Result<MultiCurveCensus>::success(std::move(census));
}

}  // namespace mcurve
