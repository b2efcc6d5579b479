#include "mcurve/coordinates.hpp"

#include <cassert>
#include <charconv>
#include <cstdlib>

#include <json.hpp>

namespace mcurve {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' ||
                          s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

const char* group_label(ArcGroup group) {
    switch (group) {
        case ArcGroup::Alpha:     return "alpha";
        case ArcGroup::Beta:      return "beta";
        case ArcGroup::BetaPrime: return "beta_prime";
        case ArcGroup::Xi:        return "xi";
        case ArcGroup::XiPrime:   return "xi_prime";
        case ArcGroup::Gamma:     return "gamma";
        case ArcGroup::C:         return "c";
        case ArcGroup::CStar:     return "c_star";
    }
    return "";
}

}  // namespace

Result<CoordVector> CoordVector::make(SurfaceSig sig, std::vector<std::int64_t> values) {
    Diagnostics diags;
    if (!sig.valid()) {
        diags.error("surface", DiagCode::InvariantViolation, "n >= 1 and g >= 1 required");
        return Result<CoordVector>::failure(std::move(diags));
    }
    const auto dim = static_cast<std::size_t>(coord_dimension(sig));
    if (values.size() != dim) {
        diags.error("vector", DiagCode::WrongGroupLength,
                    "expected " + std::to_string(dim) + " entries, got " +
                        std::to_string(values.size()));
        return Result<CoordVector>::failure(std::move(diags));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) {
            diags.error(arc_name(arc_at(sig, static_cast<int>(i))), DiagCode::NegativeEntry,
                        "position " + std::to_string(i));
        }
    }
    if (!diags.ok()) return Result<CoordVector>::failure(std::move(diags));
    return Result<CoordVector>::success(CoordVector(sig, std::move(values)));
}

std::int64_t CoordVector::at(ArcId arc) const {
    return values_[static_cast<std::size_t>(flat_index(sig_, arc))];
}

void CoordVector::set(ArcId arc, std::int64_t v) {
    values_[static_cast<std::size_t>(flat_index(sig_, arc))] = v;
}

std::int64_t CoordVector::alpha(int i) const { return at({ArcGroup::Alpha, i}); }
std::int64_t CoordVector::beta(int i) const { return at({ArcGroup::Beta, i}); }
std::int64_t CoordVector::beta_prime(int i) const { return at({ArcGroup::BetaPrime, i}); }
std::int64_t CoordVector::xi(int i) const { return at({ArcGroup::Xi, i}); }
std::int64_t CoordVector::xi_prime(int i) const { return at({ArcGroup::XiPrime, i}); }
std::int64_t CoordVector::gamma(int i) const { return at({ArcGroup::Gamma, i}); }
std::int64_t CoordVector::c(int i) const { return at({ArcGroup::C, i}); }
std::int64_t CoordVector::c_star() const { return at({ArcGroup::CStar, 1}); }

std::int64_t CoordVector::invisible_wall(int i) const {
    assert(i >= 1 && i <= sig_.g);
    return i == 1 ? beta(1) : beta_prime(sig_.n + i);
}

bool CoordVector::is_zero() const {
    for (std::int64_t v : values_)
        if (v != 0) return false;
    return true;
}

Result<CoordVector> parse_vector(std::string_view text, SurfaceSig sig) {
    Diagnostics diags;
    if (!sig.valid()) {
        diags.error("surface", DiagCode::InvariantViolation, "n >= 1 and g >= 1 required");
        return Result<CoordVector>::failure(std::move(diags));
    }

    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '(' && body.back() == ')') {
        body.remove_prefix(1);
        body.remove_suffix(1);
    }

    // Non-empty groups in vector order; for g = 1 that is alpha;beta;gamma;c*.
    std::vector<ArcGroup> expected;
    for (ArcGroup group : {ArcGroup::Alpha, ArcGroup::Beta, ArcGroup::BetaPrime,
                           ArcGroup::Xi, ArcGroup::XiPrime, ArcGroup::Gamma, ArcGroup::C,
                           ArcGroup::CStar}) {
        if (group_size(sig, group) > 0) expected.push_back(group);
    }

    const std::vector<std::string_view> groups = split(body, ';');
    if (groups.size() != expected.size()) {
        diags.error("vector", DiagCode::WrongGroupCount,
                    "expected " + std::to_string(expected.size()) + " groups, got " +
                        std::to_string(groups.size()));
        return Result<CoordVector>::failure(std::move(diags));
    }

    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(coord_dimension(sig)));
    int position = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const ArcGroup group = expected[gi];
        const std::vector<std::string_view> tokens = split(groups[gi], ',');
        if (static_cast<int>(tokens.size()) != group_size(sig, group)) {
            diags.error(group_label(group), DiagCode::WrongGroupLength,
                        "expected " + std::to_string(group_size(sig, group)) +
                            " entries, got " + std::to_string(tokens.size()));
            return Result<CoordVector>::failure(std::move(diags));
        }
        for (std::string_view token : tokens) {
            const std::string_view t = trim(token);
            std::int64_t value = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec == std::errc::result_out_of_range) {
                diags.error(group_label(group), DiagCode::Overflow,
                            "position " + std::to_string(position));
            } else if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
                diags.error(group_label(group), DiagCode::NonInteger,
                            "position " + std::to_string(position) + ": '" +
                                std::string(t) + "'");
            } else if (value < 0) {
                diags.error(group_label(group), DiagCode::NegativeEntry,
                            "position " + std::to_string(position));
            }
            values.push_back(value);
            ++position;
        }
    }
    if (!diags.ok()) return Result<CoordVector>::failure(std::move(diags));
    return CoordVector::make(sig, std::move(values));
}

std::string serialize_vector(const CoordVector& v) {
    const SurfaceSig sig = v.sig();
    std::string out = "(";
    bool first_group = true;
    for (ArcGroup group : {ArcGroup::Alpha, ArcGroup::Beta, ArcGroup::BetaPrime,
                           ArcGroup::Xi, ArcGroup::XiPrime, ArcGroup::Gamma, ArcGroup::C,
                           ArcGroup::CStar}) {
        const int count = group_size(sig, group);
        if (count == 0) continue;
        if (!first_group) out += "; ";
        first_group = false;
        const int offset = group_offset(sig, group);
        for (int k = 0; k < count; ++k) {
            if (k) out += ", ";
            out += std::to_string(v[offset + k]);
        }
    }
    out += ")";
    return out;
}

Result<TwistSigns> parse_signs(std::string_view text, SurfaceSig sig) {
    Diagnostics diags;
    const std::vector<std::string_view> tokens = split(trim(text), ',');
    if (static_cast<int>(tokens.size()) != sig.g) {
        diags.error("signs", DiagCode::BadSigns,
                    "expected " + std::to_string(sig.g) + " entries, got " +
                        std::to_string(tokens.size()));
        return Result<TwistSigns>::failure(std::move(diags));
    }
    TwistSigns signs;
    signs.signs.reserve(tokens.size());
    for (std::string_view token : tokens) {
        const std::string_view t = trim(token);
        if (t == "+")
            signs.signs.push_back(1);
        else if (t == "-")
            signs.signs.push_back(-1);
        else if (t == "0")
            signs.signs.push_back(0);
        else
            diags.error("signs", DiagCode::BadSigns,
                        "token '" + std::string(t) + "' (want +, - or 0)");
    }
    if (!diags.ok()) return Result<TwistSigns>::failure(std::move(diags));
    return Result<TwistSigns>::success(std::move(signs));
}

std::string serialize_signs(const TwistSigns& signs) {
    std::string out;
    for (std::size_t i = 0; i < signs.signs.size(); ++i) {
        if (i) out += ",";
        out += signs.signs[i] > 0 ? "+" : signs.signs[i] < 0 ? "-" : "0";
    }
    return out;
}

Diagnostics validate_basic(const CoordVector& v) {
    Diagnostics diags;
    const SurfaceSig sig = v.sig();
    const int n = sig.n;
    const int g = sig.g;

    if (v.is_zero()) {
        diags.error("vector", DiagCode::ZeroVector, "the zero vector is excluded");
        return diags;
    }

    const auto odd = [](std::int64_t x) { return ((x % 2) + 2) % 2 == 1; };

    for (int i = 1; i <= n; ++i) {
        if (odd(v.beta(i) - v.beta(i + 1)))
            diags.error(region_name({RegionKind::U, i}), DiagCode::ParityError,
                        "beta_" + std::to_string(i) + " - beta_" + std::to_string(i + 1) +
                            " must be even");
    }

    for (int i = 1; i <= g - 1; ++i) {
        const std::string locus = region_name({RegionKind::G, i});
        const std::int64_t c = v.c(i);
        const std::int64_t vis = v.beta(n + i) - v.beta(n + i + 1);
        if (odd(std::abs(vis) - c))
            diags.error(locus, DiagCode::ParityError,
                        "|beta_" + std::to_string(n + i) + " - beta_" +
                            std::to_string(n + i + 1) + "| - c_" + std::to_string(i) +
                            " must be even");
        const std::int64_t inv = v.invisible_wall(i) - v.beta_prime(n + i + 1);
        if (odd(std::abs(inv) - c))
            diags.error(locus, DiagCode::ParityError,
                        "invisible wall difference minus c_" + std::to_string(i) +
                            " must be even");
    }

    const std::int64_t cs = v.c_star();
    const std::int64_t star_vis = v.beta(n + g) - cs;
    const std::int64_t star_inv = v.invisible_wall(g) - cs;
    if (odd(star_vis))
        diags.error("G*", DiagCode::ParityError,
                    "beta_" + std::to_string(n + g) + " - c* must be even");
    else if (star_vis < 0)
        diags.error("G*", DiagCode::NegativeCount,
                    "beta_" + std::to_string(n + g) + " < c*");
    if (odd(star_inv))
        diags.error("G*", DiagCode::ParityError, "invisible wall - c* must be even");
    else if (star_inv < 0)
        diags.error("G*", DiagCode::NegativeCount, "invisible wall < c*");

    return diags;
}

std::string vector_to_json(const CoordVector& v, const TwistSigns* signs, int indent) {
    const SurfaceSig sig = v.sig();
    nlohmann::ordered_json j;
    j["n"] = sig.n;
    j["g"] = sig.g;
    const auto group_array = [&](ArcGroup group) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        const int offset = group_offset(sig, group);
        for (int k = 0; k < group_size(sig, group); ++k) arr.push_back(v[offset + k]);
        return arr;
    };
    j["alpha"] = group_array(ArcGroup::Alpha);
    j["beta"] = group_array(ArcGroup::Beta);
    j["beta_prime"] = group_array(ArcGroup::BetaPrime);
    j["xi"] = group_array(ArcGroup::Xi);
    j["xi_prime"] = group_array(ArcGroup::XiPrime);
    j["gamma"] = group_array(ArcGroup::Gamma);
    j["c"] = group_array(ArcGroup::C);
    j["c_star"] = v.c_star();
    if (signs) j["signs"] = signs->signs;
    return j.dump(indent);
}

Result<std::pair<CoordVector, TwistSigns>> vector_from_json(std::string_view text) {
    using Pair = std::pair<CoordVector, TwistSigns>;
    Diagnostics diags;
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        diags.error("json", DiagCode::NonInteger, "not a JSON object");
        return Result<Pair>::failure(std::move(diags));
    }
    if (!j.contains("n") || !j.contains("g") || !j["n"].is_number_integer() ||
        !j["g"].is_number_integer()) {
        diags.error("json", DiagCode::NonInteger, "missing integer fields n, g");
        return Result<Pair>::failure(std::move(diags));
    }
    const SurfaceSig sig{j["n"].get<int>(), j["g"].get<int>()};
    if (!sig.valid()) {
        diags.error("surface", DiagCode::InvariantViolation, "n >= 1 and g >= 1 required");
        return Result<Pair>::failure(std::move(diags));
    }

    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(coord_dimension(sig)));
    const auto read_group = [&](const char* key, ArcGroup group) {
        const int count = group_size(sig, group);
        if (group == ArcGroup::CStar) {
            if (!j.contains(key) || !j[key].is_number_integer()) {
                diags.error(key, DiagCode::NonInteger, "expected integer");
                return;
            }
            values.push_back(j[key].get<std::int64_t>());
            return;
        }
        if (count == 0) {
            if (j.contains(key) && j[key].is_array() && !j[key].empty())
                diags.error(key, DiagCode::WrongGroupLength, "group must be empty");
            return;
        }
        if (!j.contains(key) || !j[key].is_array() ||
            static_cast<int>(j[key].size()) != count) {
            diags.error(key, DiagCode::WrongGroupLength,
                        "expected " + std::to_string(count) + " entries");
            return;
        }
        for (const auto& e : j[key]) {
            if (!e.is_number_integer()) {
                diags.error(key, DiagCode::NonInteger, "expected integer entries");
                return;
            }
            values.push_back(e.get<std::int64_t>());
        }
    };
    read_group("alpha", ArcGroup::Alpha);
    read_group("beta", ArcGroup::Beta);
    read_group("beta_prime", ArcGroup::BetaPrime);
    read_group("xi", ArcGroup::Xi);
    read_group("xi_prime", ArcGroup::XiPrime);
    read_group("gamma", ArcGroup::Gamma);
    read_group("c", ArcGroup::C);
    read_group("c_star", ArcGroup::CStar);
    if (!diags.ok()) return Result<Pair>::failure(std::move(diags));

    TwistSigns signs;
    if (j.contains("signs")) {
        if (!j["signs"].is_array() || static_cast<int>(j["signs"].size()) != sig.g) {
            diags.error("signs", DiagCode::BadSigns,
                        "expected " + std::to_string(sig.g) + " entries");
            return Result<Pair>::failure(std::move(diags));
        }
        for (const auto& e : j["signs"]) {
            const std::int64_t s = e.is_number_integer() ? e.get<std::int64_t>() : 99;
            if (s != -1 && s != 0 && s != 1) {
                diags.error("signs", DiagCode::BadSigns, "entries must be -1, 0 or 1");
                return Result<Pair>::failure(std::move(diags));
            }
            signs.signs.push_back(static_cast<int>(s));
        }
    }

    auto vec = CoordVector::make(sig, std::move(values));
    if (!vec.ok()) return Result<Pair>::failure(vec.diags);
    return Result<Pair>::success({std::move(*vec.value), std::move(signs)});
}

}  // namespace mcurve
