#include "mcurve/surface.hpp"

#include <array>
#include <cassert>

namespace mcurve {

namespace {

constexpr std::array<ArcGroup, 8> kGroupOrder = {
    ArcGroup::Alpha, ArcGroup::Beta,    ArcGroup::BetaPrime, ArcGroup::Xi,
    ArcGroup::XiPrime, ArcGroup::Gamma, ArcGroup::C,         ArcGroup::CStar,
};

}  // namespace

int coord_dimension(SurfaceSig sig) {
    assert(sig.valid());
    return 3 * sig.n + 8 * sig.g - 5;
}

int group_size(SurfaceSig sig, ArcGroup group) {
    switch (group) {
        case ArcGroup::Alpha:     return 2 * sig.n;
        case ArcGroup::Beta:      return sig.n + sig.g;
        case ArcGroup::BetaPrime: return sig.g - 1;
        case ArcGroup::Xi:        return 2 * sig.g - 2;
        case ArcGroup::XiPrime:   return 2 * sig.g - 2;
        case ArcGroup::Gamma:     return sig.g;
        case ArcGroup::C:         return sig.g - 1;
        case ArcGroup::CStar:     return 1;
    }
    return 0;
}

int group_first_index(SurfaceSig sig, ArcGroup group) {
    return group == ArcGroup::BetaPrime ? sig.n + 2 : 1;
}

int group_offset(SurfaceSig sig, ArcGroup group) {
    int offset = 0;
    for (ArcGroup go : kGroupOrder) {
        if (go == group) return offset;
        offset += group_size(sig, go);
    }
    return offset;
}

std::vector<ArcId> layout(SurfaceSig sig) {
    std::vector<ArcId> arcs;
    arcs.reserve(static_cast<std::size_t>(coord_dimension(sig)));
    for (ArcGroup group : kGroupOrder) {
        const int first = group_first_index(sig, group);
        const int count = group_size(sig, group);
        for (int k = 0; k < count; ++k) arcs.push_back({group, first + k});
    }
    return arcs;
}

int flat_index(SurfaceSig sig, ArcId arc) {
    return group_offset(sig, arc.group) + (arc.index - group_first_index(sig, arc.group));
}

ArcId arc_at(SurfaceSig sig, int flat) {
    assert(flat >= 0 && flat < coord_dimension(sig));
    for (ArcGroup group : kGroupOrder) {
        const int count = group_size(sig, group);
        if (flat < count) return {group, group_first_index(sig, group) + flat};
        flat -= count;
    }
    return {ArcGroup::CStar, 1};
}

std::string arc_name(ArcId arc) {
    switch (arc.group) {
        case ArcGroup::Alpha:     return "alpha_" + std::to_string(arc.index);
        case ArcGroup::Beta:      return "beta_" + std::to_string(arc.index);
        case ArcGroup::BetaPrime: return "beta'_" + std::to_string(arc.index);
        case ArcGroup::Xi:        return "xi_" + std::to_string(arc.index);
        case ArcGroup::XiPrime:   return "xi'_" + std::to_string(arc.index);
        case ArcGroup::Gamma:     return "gamma_" + std::to_string(arc.index);
        case ArcGroup::C:         return "c_" + std::to_string(arc.index);
        case ArcGroup::CStar:     return "c*";
    }
    return {};
}

std::string region_name(RegionId region) {
    switch (region.kind) {
        case RegionKind::U:     return "U_" + std::to_string(region.index);
        case RegionKind::G:     return "G_" + std::to_string(region.index);
        case RegionKind::GStar: return "G*";
    }
    return {};
}

std::vector<RegionInfo> regions(SurfaceSig sig) {
    assert(sig.valid());
    const int n = sig.n;
    const int g = sig.g;
    std::vector<RegionInfo> out;
    out.reserve(static_cast<std::size_t>(n + g));

    for (int i = 1; i <= n; ++i) {
        out.push_back({{RegionKind::U, i},
                       {{ArcGroup::Beta, i}, {ArcGroup::Beta, i + 1}}});
    }
    for (int i = 1; i <= g - 1; ++i) {
        // beta'_{n+1} does not exist; beta_1 plays its role for G_1.
        const ArcId inv_left = i == 1 ? ArcId{ArcGroup::Beta, 1}
                                      : ArcId{ArcGroup::BetaPrime, n + i};
        out.push_back({{RegionKind::G, i},
                       {{ArcGroup::Beta, n + i},
                        inv_left,
                        {ArcGroup::Beta, n + i + 1},
                        {ArcGroup::BetaPrime, n + i + 1}}});
    }
    const ArcId star_inv = g == 1 ? ArcId{ArcGroup::Beta, 1}
                                  : ArcId{ArcGroup::BetaPrime, n + g};
    out.push_back({{RegionKind::GStar, 0}, {{ArcGroup::Beta, n + g}, star_inv}});
    return out;
}

}  // namespace mcurve
